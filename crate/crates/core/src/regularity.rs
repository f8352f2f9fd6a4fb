//! Element-wise regularity notions and their witnesses.
//!
//! An element `a` is *regular* when `a <= (a op1 x) op2 a` for some element
//! `x` and operations `op1`, `op2` — equivalently `a ∈ (a Γ M Γ a]`. Left
//! and right regularity replace the middle factor by a square of `a`. The
//! *strong* form additionally requires all four cross products of `a` and
//! the witness to coincide.
//!
//! Every `is_*` predicate here has two independent routes: an explicit
//! witness search and a subset-product membership test. Different callers
//! deliberately use different routes so agreement between them is evidence,
//! not circularity.

use crate::structure::OrderedGammaStructure;
use crate::subset::{self, PrincipalPattern, SubsetMask};
use crate::substructs::is_subsemigroup;
use serde::Serialize;

/// A certificate that `a <= (a op1 x) op2 a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RegularityWitness {
    pub x: usize,
    pub op1: usize,
    pub op2: usize,
}

/// A certificate of strong regularity for `a`: `a <= (a op1 x) op2 a` with
/// `a op1 x = x op1 a = x op2 a = a op2 x`.
///
/// The two operation indices may coincide; the four-way equality is over the
/// chosen pair, not over all operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StrongWitness {
    pub a: usize,
    pub x: usize,
    pub op1: usize,
    pub op2: usize,
}

/// The least `(x, op1, op2)` with `a <= (a op1 x) op2 a`, if any.
pub fn regular_witness(s: &OrderedGammaStructure, a: usize) -> Option<RegularityWitness> {
    search_witness(s, a, |s, a, x, op1, op2| {
        s.leq(a, s.apply(op2, s.apply(op1, a, x), a))
    })
}

/// The least `(x, op1, op2)` with `a <= (x op1 a) op2 a`, if any.
pub fn left_regular_witness(s: &OrderedGammaStructure, a: usize) -> Option<RegularityWitness> {
    search_witness(s, a, |s, a, x, op1, op2| {
        s.leq(a, s.apply(op2, s.apply(op1, x, a), a))
    })
}

/// The least `(x, op1, op2)` with `a <= (a op1 a) op2 x`, if any.
pub fn right_regular_witness(s: &OrderedGammaStructure, a: usize) -> Option<RegularityWitness> {
    search_witness(s, a, |s, a, x, op1, op2| {
        s.leq(a, s.apply(op2, s.apply(op1, a, a), x))
    })
}

fn search_witness(
    s: &OrderedGammaStructure,
    a: usize,
    ok: impl Fn(&OrderedGammaStructure, usize, usize, usize, usize) -> bool,
) -> Option<RegularityWitness> {
    assert!(a < s.n(), "element {a} out of range");
    for x in 0..s.n() {
        for op1 in 0..s.k() {
            for op2 in 0..s.k() {
                if ok(s, a, x, op1, op2) {
                    return Some(RegularityWitness { x, op1, op2 });
                }
            }
        }
    }
    None
}

/// Whether every element has a regularity witness.
pub fn is_regular(s: &OrderedGammaStructure) -> bool {
    (0..s.n()).all(|a| regular_witness(s, a).is_some())
}

/// Membership route for regularity: `a ∈ (a Γ M Γ a]` for every `a`.
pub fn is_regular_via_sets(s: &OrderedGammaStructure) -> bool {
    let n = s.n();
    let m = SubsetMask::full(n);
    (0..n).all(|a| {
        let one = SubsetMask::singleton(n, a);
        let products = subset::chain(s.structure(), &[&one, &m, &one]);
        subset::down_closure(s.order(), &products).contains(a)
    })
}

/// Whether `a ∈ (M Γ a Γ a]` for every `a`.
pub fn is_left_regular(s: &OrderedGammaStructure) -> bool {
    (0..s.n()).all(|a| subset::principal_set(s, PrincipalPattern::MAA, a).contains(a))
}

/// Whether `a ∈ (a Γ a Γ M]` for every `a`.
pub fn is_right_regular(s: &OrderedGammaStructure) -> bool {
    (0..s.n()).all(|a| subset::principal_set(s, PrincipalPattern::AAM, a).contains(a))
}

/// Regular, left regular and right regular at once.
pub fn is_completely_regular(s: &OrderedGammaStructure) -> bool {
    is_regular(s) && is_left_regular(s) && is_right_regular(s)
}

/// The least strong witness for `a` drawn from the candidate set `t`,
/// searched in `(x, op1, op2)` lexicographic order. Panics unless `a ∈ t`.
pub fn strong_witness(
    s: &OrderedGammaStructure,
    a: usize,
    t: &SubsetMask,
) -> Option<StrongWitness> {
    assert!(t.contains(a), "strong_witness: element {a} not in the candidate set");
    for x in t.iter() {
        for op1 in 0..s.k() {
            for op2 in 0..s.k() {
                let p = s.apply(op1, a, x);
                if p != s.apply(op1, x, a)
                    || p != s.apply(op2, x, a)
                    || p != s.apply(op2, a, x)
                {
                    continue;
                }
                if s.leq(a, s.apply(op2, p, a)) {
                    return Some(StrongWitness { a, x, op1, op2 });
                }
            }
        }
    }
    None
}

/// One strong witness per element over the whole carrier, where they exist.
pub fn strong_witness_table(s: &OrderedGammaStructure) -> Vec<Option<StrongWitness>> {
    let full = SubsetMask::full(s.n());
    (0..s.n()).map(|a| strong_witness(s, a, &full)).collect()
}

/// Whether every element has a strong witness over the whole carrier.
pub fn is_strongly_regular(s: &OrderedGammaStructure) -> bool {
    let full = SubsetMask::full(s.n());
    (0..s.n()).all(|a| strong_witness(s, a, &full).is_some())
}

/// Whether `t` is a subsemigroup in which every member has a strong witness
/// drawn from `t` itself (the order stays that of the ambient structure).
pub fn is_strongly_regular_subsemigroup(s: &OrderedGammaStructure, t: &SubsetMask) -> bool {
    is_subsemigroup(s, t) && t.iter().all(|a| strong_witness(s, a, t).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::structure::OrderedGammaStructure;

    fn parity() -> OrderedGammaStructure {
        fixtures::with_equality(fixtures::parity_pair())
    }

    #[test]
    fn parity_pair_strong_witnesses_are_least() {
        let s = parity();
        let ws = strong_witness_table(&s);
        assert_eq!(
            ws[0],
            Some(StrongWitness { a: 0, x: 0, op1: 0, op2: 0 })
        );
        assert_eq!(
            ws[1],
            Some(StrongWitness { a: 1, x: 1, op1: 0, op2: 0 })
        );
        assert!(is_strongly_regular(&s));
    }

    #[test]
    fn parity_pair_is_regular_on_all_routes() {
        let s = parity();
        assert!(is_regular(&s));
        assert!(is_regular_via_sets(&s));
        assert!(is_left_regular(&s));
        assert!(is_right_regular(&s));
        assert!(is_completely_regular(&s));
        // Witness and set routes agree element by element.
        for a in 0..2 {
            assert!(left_regular_witness(&s, a).is_some());
            assert!(right_regular_witness(&s, a).is_some());
        }
    }

    #[test]
    fn constant_zero_fails_at_one() {
        // Every product is 0 and the order is equality, so 1 is below no
        // product at all.
        let s = fixtures::with_equality(fixtures::constant_zero());
        assert!(regular_witness(&s, 0).is_some());
        assert!(regular_witness(&s, 1).is_none());
        assert!(!is_regular(&s));
        assert!(!is_regular_via_sets(&s));
        assert!(!is_left_regular(&s));
        assert!(!is_right_regular(&s));
        assert!(!is_strongly_regular(&s));
        assert_eq!(
            strong_witness(&s, 1, &SubsetMask::full(2)),
            None
        );
    }

    #[test]
    fn left_zero_strong_witness_is_the_element_itself() {
        // x op y = x: for x != a the cross products a op x = a and
        // x op a = x differ, so only x = a can witness — and it does.
        let s = fixtures::with_equality(fixtures::left_zero());
        assert!(is_completely_regular(&s));
        assert_eq!(
            strong_witness(&s, 0, &SubsetMask::full(2)),
            Some(StrongWitness { a: 0, x: 0, op1: 0, op2: 0 })
        );
        assert!(is_strongly_regular(&s));
    }

    #[test]
    fn strong_witness_draws_candidates_from_the_given_set() {
        // For a = 1 restricted to {1}: x = 1 works (1 xor 1 = 0 on all four
        // products, and 0 xor 1 = 1 sits above a), so a witness exists even
        // in the singleton — yet {1} is not a subsemigroup, so it is no
        // strongly regular subsemigroup. The full set is.
        let s = parity();
        let t = SubsetMask::singleton(2, 1);
        assert_eq!(
            strong_witness(&s, 1, &t),
            Some(StrongWitness { a: 1, x: 1, op1: 0, op2: 0 })
        );
        assert!(!is_strongly_regular_subsemigroup(&s, &t));
        assert!(is_strongly_regular_subsemigroup(&s, &SubsetMask::full(2)));
    }

    #[test]
    #[should_panic(expected = "not in the candidate set")]
    fn strong_witness_requires_membership() {
        let s = parity();
        strong_witness(&s, 0, &SubsetMask::singleton(2, 1));
    }
}
