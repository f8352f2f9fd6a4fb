//! Cross-module invariants checked exhaustively at small sizes: every
//! mixed-associative table family up to (n=2, k=2) and (n=3, k=1), under
//! every compatible partial order. The heavyweight sweeps live in the
//! acceptance suite; these sizes keep the whole file under a second while
//! still covering hundreds of structures.

use gsg_core::regularity::{
    is_completely_regular, is_left_regular, is_regular, is_regular_via_sets, is_right_regular,
    is_strongly_regular, left_regular_witness, right_regular_witness, strong_witness_table,
};
use gsg_core::search::{enumerate_orders, enumerate_tables};
use gsg_core::structure::OrderedGammaStructure;
use gsg_core::subset::{self, PrincipalPattern, SubsetMask};
use gsg_core::substructs::{
    enumerate_substructures, filter_generated, is_left_ideal, is_right_ideal, is_semiprime,
    SubstructureKind,
};
use gsg_core::theorem::{check_k3, check_k3_exhaustive, equivalence_verdict};
use gsg_core::{nrel, ConditionId};

fn for_each_small_structure(mut f: impl FnMut(&OrderedGammaStructure)) {
    for (n, k) in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)] {
        for structure in enumerate_tables(n, k).unwrap() {
            for order in enumerate_orders(&structure) {
                let s = OrderedGammaStructure::new(structure.clone(), order).unwrap();
                f(&s);
            }
        }
    }
}

#[test]
fn everything_enumerated_validates() {
    let mut count = 0;
    for_each_small_structure(|s| {
        assert!(s.is_valid(), "enumerated structure fails validation: {s:?}");
        count += 1;
    });
    // 1 + 1 + 8 + 14 + 113 structures, each with at least the equality order.
    assert!(count >= 137, "sweep unexpectedly small: {count}");
}

#[test]
fn verdicts_are_consistent_everywhere() {
    for_each_small_structure(|s| {
        let verdict = equivalence_verdict(s).unwrap();
        assert!(
            verdict.consistent,
            "conditions disagree on {s:?}: {:?}",
            verdict.flags()
        );
    });
}

#[test]
fn filter_equivalence_is_a_semilattice_congruence_everywhere() {
    for_each_small_structure(|s| {
        let rel = nrel::n_relation(s);
        assert!(
            nrel::is_semilattice_congruence(s, &rel),
            "filter equivalence misbehaves on {s:?}"
        );
    });
}

#[test]
fn filter_fixpoint_equals_the_intersection_of_enumerated_filters() {
    for_each_small_structure(|s| {
        let n = s.n();
        let filters = enumerate_substructures(s, SubstructureKind::Filter).unwrap();
        for a in 0..n {
            let mut least = SubsetMask::full(n);
            for f in filters.iter().filter(|f| f.contains(a)) {
                least.intersect_in_place(f);
            }
            assert_eq!(filter_generated(s, a), least, "element {a} of {s:?}");
        }
    });
}

#[test]
fn filter_membership_is_monotone() {
    // b ∈ N(a) forces N(b) ⊆ N(a), and a ∈ N(a) always.
    for_each_small_structure(|s| {
        let filters: Vec<SubsetMask> = (0..s.n()).map(|a| filter_generated(s, a)).collect();
        for a in 0..s.n() {
            assert!(filters[a].contains(a));
            for b in filters[a].iter() {
                assert!(
                    filters[b].is_subset(&filters[a]),
                    "N({b}) escapes N({a}) on {s:?}"
                );
            }
        }
    });
}

#[test]
fn regularity_routes_agree() {
    for_each_small_structure(|s| {
        assert_eq!(is_regular(s), is_regular_via_sets(s), "regular on {s:?}");
        let left_by_witness = (0..s.n()).all(|a| left_regular_witness(s, a).is_some());
        assert_eq!(is_left_regular(s), left_by_witness, "left on {s:?}");
        let right_by_witness = (0..s.n()).all(|a| right_regular_witness(s, a).is_some());
        assert_eq!(is_right_regular(s), right_by_witness, "right on {s:?}");
    });
}

#[test]
fn strongly_regular_implies_completely_regular() {
    let mut strongly = 0;
    for_each_small_structure(|s| {
        if is_strongly_regular(s) {
            strongly += 1;
            assert!(is_completely_regular(s), "implication fails on {s:?}");
        }
    });
    assert!(strongly > 0, "sweep found no strongly regular structures");
}

#[test]
fn witness_upgrade_yields_a_mutual_witness() {
    // From any strong witness (x, op1, op2) for a, the element
    // y = (x op2 a) op1 x must satisfy all three mutual-witness clauses
    // with the same operation pair.
    for_each_small_structure(|s| {
        if !is_strongly_regular(s) {
            return;
        }
        for w in strong_witness_table(s).into_iter().flatten() {
            let (a, x, op1, op2) = (w.a, w.x, w.op1, w.op2);
            let y = s.apply(op1, s.apply(op2, x, a), x);
            let p = s.apply(op1, a, y);
            assert_eq!(p, s.apply(op1, y, a), "upgrade cross product on {s:?}");
            assert_eq!(p, s.apply(op2, y, a), "upgrade cross product on {s:?}");
            assert_eq!(p, s.apply(op2, a, y), "upgrade cross product on {s:?}");
            assert!(
                s.leq(a, s.apply(op2, p, a)),
                "upgrade keeps a below its product on {s:?}"
            );
            assert!(
                s.leq(y, s.apply(op1, s.apply(op2, y, a), y)),
                "upgrade bounds y on {s:?}"
            );
        }
    });
}

#[test]
fn k3_shortcut_agrees_with_the_exhaustive_search() {
    for_each_small_structure(|s| {
        let fast = check_k3(s);
        let slow = check_k3_exhaustive(s).unwrap();
        assert_eq!(fast.holds, slow.holds, "K3 routes disagree on {s:?}");
        assert_eq!(fast.id, ConditionId::K3);
        assert_eq!(slow.id, ConditionId::K3);
    });
}

#[test]
fn squared_principal_sets_are_one_sided_ideals() {
    // (M a a] absorbs from the left and (a a M] from the right; the
    // condition checkers lean on both facts, which must hold for every
    // element of every structure.
    for_each_small_structure(|s| {
        for a in 0..s.n() {
            let left_set = subset::principal_set(s, PrincipalPattern::MAA, a);
            assert!(
                is_left_ideal(s, &left_set),
                "(M {a} {a}] not a left ideal on {s:?}"
            );
            let right_set = subset::principal_set(s, PrincipalPattern::AAM, a);
            assert!(
                is_right_ideal(s, &right_set),
                "({a} {a} M] not a right ideal on {s:?}"
            );
        }
    });
}

#[test]
fn elementwise_semiprime_matches_the_subset_form() {
    // The element test (a squared inside forces a inside) must coincide
    // with the subset test (A with all products inside forces A inside).
    for_each_small_structure(|s| {
        let n = s.n();
        for t_bits in 0..(1u64 << n) {
            let t = SubsetMask::from_bits(n, t_bits);
            let mut subset_form = true;
            'subsets: for a_bits in 0..(1u64 << n) {
                let a_set = SubsetMask::from_bits(n, a_bits);
                let squares = subset::product_gamma(s.structure(), &a_set, &a_set);
                if squares.is_subset(&t) && !a_set.is_subset(&t) {
                    subset_form = false;
                    break 'subsets;
                }
            }
            assert_eq!(
                is_semiprime(s, &t),
                subset_form,
                "semiprime forms disagree for {t} on {s:?}"
            );
        }
    });
}

#[test]
fn ideals_are_subsemigroups_and_sorted() {
    for_each_small_structure(|s| {
        for kind in [SubstructureKind::LeftIdeal, SubstructureKind::RightIdeal] {
            let found = enumerate_substructures(s, kind).unwrap();
            let mut sorted = found.clone();
            sorted.sort();
            assert_eq!(found, sorted, "enumeration order broke on {s:?}");
            for t in &found {
                assert!(
                    gsg_core::substructs::is_subsemigroup(s, t),
                    "{kind} {t} is not a subsemigroup on {s:?}"
                );
            }
        }
    });
}
