//! Randomized laws for the subset algebra: closure identities, product
//! monotonicity, and mask round-trips. Structures are drawn from a fixed
//! pool of enumerated tables and orders; subsets are drawn as raw bit
//! patterns so the generators cover degenerate cases (empty sets, full
//! sets, singletons) as aggressively as anything else.

use std::sync::OnceLock;

use gsg_core::search::{enumerate_orders, enumerate_tables};
use gsg_core::structure::OrderedGammaStructure;
use gsg_core::subset::{down_closure, product_gamma, up_closure, SubsetMask};
use proptest::prelude::*;

fn pool() -> &'static Vec<OrderedGammaStructure> {
    static POOL: OnceLock<Vec<OrderedGammaStructure>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::new();
        for (n, k) in [(2, 2), (3, 1)] {
            for structure in enumerate_tables(n, k).unwrap() {
                for order in enumerate_orders(&structure) {
                    out.push(OrderedGammaStructure::new(structure.clone(), order).unwrap());
                }
            }
        }
        out
    })
}

fn arb_case() -> impl Strategy<Value = (usize, u64, u64)> {
    (0..pool().len(), any::<u64>(), any::<u64>())
}

fn masks(s: &OrderedGammaStructure, a_bits: u64, b_bits: u64) -> (SubsetMask, SubsetMask) {
    let n = s.n();
    let m = (1u64 << n) - 1;
    (
        SubsetMask::from_bits(n, a_bits & m),
        SubsetMask::from_bits(n, b_bits & m),
    )
}

fn down(s: &OrderedGammaStructure, h: &SubsetMask) -> SubsetMask {
    down_closure(s.order(), h)
}

proptest! {
    #[test]
    fn down_closure_is_extensive_and_idempotent((i, a_bits, _) in arb_case()) {
        let s = &pool()[i];
        let (a, _) = masks(s, a_bits, 0);
        let closed = down(s, &a);
        prop_assert!(a.is_subset(&closed));
        prop_assert_eq!(down(s, &closed), closed);
    }

    #[test]
    fn down_closure_is_monotone((i, a_bits, extra_bits) in arb_case()) {
        let s = &pool()[i];
        let (a, extra) = masks(s, a_bits, extra_bits);
        let mut b = a.clone();
        b.union_in_place(&extra);
        prop_assert!(down(s, &a).is_subset(&down(s, &b)));
    }

    #[test]
    fn whole_set_is_down_closed((i, _, _) in arb_case()) {
        let s = &pool()[i];
        let full = SubsetMask::full(s.n());
        prop_assert_eq!(down(s, &full), full);
    }

    #[test]
    fn closed_products_land_in_the_closed_product((i, a_bits, b_bits) in arb_case()) {
        let s = &pool()[i];
        let (a, b) = masks(s, a_bits, b_bits);
        let left = product_gamma(s.structure(), &down(s, &a), &down(s, &b));
        let right = down(s, &product_gamma(s.structure(), &a, &b));
        prop_assert!(left.is_subset(&right));
    }

    #[test]
    fn closing_either_factor_never_changes_the_closed_product((i, a_bits, b_bits) in arb_case()) {
        let s = &pool()[i];
        let (a, b) = masks(s, a_bits, b_bits);
        let st = s.structure();
        let baseline = down(s, &product_gamma(st, &a, &b));
        let both = down(s, &product_gamma(st, &down(s, &a), &down(s, &b)));
        let left_only = down(s, &product_gamma(st, &down(s, &a), &b));
        let right_only = down(s, &product_gamma(st, &a, &down(s, &b)));
        prop_assert_eq!(&both, &baseline);
        prop_assert_eq!(&left_only, &baseline);
        prop_assert_eq!(&right_only, &baseline);
    }

    #[test]
    fn products_are_monotone_in_both_factors((i, a_bits, b_bits) in arb_case()) {
        let s = &pool()[i];
        let (a, b) = masks(s, a_bits, b_bits);
        let mut bigger_a = a.clone();
        bigger_a.union_in_place(&b);
        let mut bigger_b = b.clone();
        bigger_b.union_in_place(&a);
        let small = product_gamma(s.structure(), &a, &b);
        let large = product_gamma(s.structure(), &bigger_a, &bigger_b);
        prop_assert!(small.is_subset(&large));
    }

    #[test]
    fn up_closure_mirrors_down_closure((i, a_bits, _) in arb_case()) {
        let s = &pool()[i];
        let (a, _) = masks(s, a_bits, 0);
        let up = up_closure(s.order(), &a);
        prop_assert!(a.is_subset(&up));
        prop_assert_eq!(up_closure(s.order(), &up), up.clone());
        // An element sits in the up-closure exactly when it dominates a member.
        for x in 0..s.n() {
            let dominates = a.iter().any(|h| s.leq(h, x));
            prop_assert_eq!(up.contains(x), dominates);
        }
    }

    #[test]
    fn mask_round_trips(n in 1usize..=4, bits in any::<u64>()) {
        let m = (1u64 << n) - 1;
        let mask = SubsetMask::from_bits(n, bits & m);
        let rebuilt = SubsetMask::from_elems(n, &mask.elems());
        prop_assert_eq!(&rebuilt, &mask);
        prop_assert_eq!(mask.count(), mask.iter().count());
        prop_assert_eq!(mask.is_empty(), bits & m == 0);
    }
}
