//! Distinguished subsets: subsemigroups, one-sided ideals, filters, and the
//! semiprime property, together with exhaustive enumeration and the least
//! filter containing a given element.

use crate::structure::OrderedGammaStructure;
use crate::subset::{self, SubsetMask};
use crate::Error;
use std::fmt;

/// Default cap on the carrier size for `2^n` subset enumerations.
pub const DEFAULT_SUBSET_CAP: usize = 16;

/// The families of distinguished subsets that can be enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubstructureKind {
    Subsemigroup,
    LeftIdeal,
    RightIdeal,
    Filter,
}

impl fmt::Display for SubstructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubstructureKind::Subsemigroup => write!(f, "subsemigroup"),
            SubstructureKind::LeftIdeal => write!(f, "left-ideal"),
            SubstructureKind::RightIdeal => write!(f, "right-ideal"),
            SubstructureKind::Filter => write!(f, "filter"),
        }
    }
}

/// Nonempty and closed under every operation: `T Γ T ⊆ T`.
pub fn is_subsemigroup(s: &OrderedGammaStructure, t: &SubsetMask) -> bool {
    if t.is_empty() {
        return false;
    }
    subset::product_gamma(s.structure(), t, t).is_subset(t)
}

/// Nonempty, absorbs multiplication from the left (`M Γ T ⊆ T`), and
/// down-closed.
pub fn is_left_ideal(s: &OrderedGammaStructure, t: &SubsetMask) -> bool {
    if t.is_empty() {
        return false;
    }
    let m = SubsetMask::full(s.n());
    subset::product_gamma(s.structure(), &m, t).is_subset(t)
        && subset::down_closure(s.order(), t).is_subset(t)
}

/// Nonempty, absorbs multiplication from the right (`T Γ M ⊆ T`), and
/// down-closed.
pub fn is_right_ideal(s: &OrderedGammaStructure, t: &SubsetMask) -> bool {
    if t.is_empty() {
        return false;
    }
    let m = SubsetMask::full(s.n());
    subset::product_gamma(s.structure(), t, &m).is_subset(t)
        && subset::down_closure(s.order(), t).is_subset(t)
}

/// A subsemigroup `F` that contains both factors of any of its members
/// (`x op y ∈ F` implies `x ∈ F` and `y ∈ F`) and is up-closed.
pub fn is_filter(s: &OrderedGammaStructure, t: &SubsetMask) -> bool {
    if !is_subsemigroup(s, t) {
        return false;
    }
    let n = s.n();
    for x in 0..n {
        for y in 0..n {
            for op in 0..s.k() {
                if t.contains(s.apply(op, x, y)) && !(t.contains(x) && t.contains(y)) {
                    return false;
                }
            }
        }
    }
    subset::up_closure(s.order(), t).is_subset(t)
}

/// Whether `a Γ a ⊆ T` implies `a ∈ T` for every element. The empty set is
/// semiprime vacuously-false-free: no element has all its squares in it.
pub fn is_semiprime(s: &OrderedGammaStructure, t: &SubsetMask) -> bool {
    semiprime_violator(s, t).is_none()
}

/// The least element whose squares all lie in `T` while the element itself
/// does not, if any.
pub fn semiprime_violator(s: &OrderedGammaStructure, t: &SubsetMask) -> Option<usize> {
    let n = s.n();
    (0..n).find(|&a| {
        !t.contains(a) && (0..s.k()).all(|op| t.contains(s.apply(op, a, a)))
    })
}

/// The least filter containing `a`, computed as a fixpoint: starting from
/// `{a}`, repeatedly add products of members, factors of members, and
/// everything above a member, until stable. Each rule is forced by the
/// filter axioms, and the result is a filter, so it is the least one.
pub fn filter_generated(s: &OrderedGammaStructure, a: usize) -> SubsetMask {
    let n = s.n();
    assert!(a < n, "element {a} out of range");
    let mut f = SubsetMask::singleton(n, a);
    loop {
        let mut changed = false;
        let products = subset::product_gamma(s.structure(), &f, &f);
        changed |= f.union_in_place(&products);
        for x in 0..n {
            for y in 0..n {
                for op in 0..s.k() {
                    if f.contains(s.apply(op, x, y)) {
                        changed |= f.insert(x);
                        changed |= f.insert(y);
                    }
                }
            }
        }
        let above = subset::up_closure(s.order(), &f);
        changed |= f.union_in_place(&above);
        if !changed {
            return f;
        }
    }
}

/// All subsets of the given kind, in increasing bitmask order, by checking
/// each of the `2^n` candidates. Fails when `n` exceeds
/// [`DEFAULT_SUBSET_CAP`]; use [`enumerate_substructures_capped`] to raise
/// the cap deliberately.
pub fn enumerate_substructures(
    s: &OrderedGammaStructure,
    kind: SubstructureKind,
) -> Result<Vec<SubsetMask>, Error> {
    enumerate_substructures_capped(s, kind, DEFAULT_SUBSET_CAP)
}

/// [`enumerate_substructures`] with an explicit carrier-size cap.
pub fn enumerate_substructures_capped(
    s: &OrderedGammaStructure,
    kind: SubstructureKind,
    cap: usize,
) -> Result<Vec<SubsetMask>, Error> {
    let n = s.n();
    if n > cap.min(63) {
        return Err(Error::SubsetCapExceeded { n, cap: cap.min(63) });
    }
    let predicate: fn(&OrderedGammaStructure, &SubsetMask) -> bool = match kind {
        SubstructureKind::Subsemigroup => is_subsemigroup,
        SubstructureKind::LeftIdeal => is_left_ideal,
        SubstructureKind::RightIdeal => is_right_ideal,
        SubstructureKind::Filter => is_filter,
    };
    let mut out = Vec::new();
    for bits in 1..(1u64 << n) {
        let mask = SubsetMask::from_bits(n, bits);
        if predicate(s, &mask) {
            out.push(mask);
        }
    }
    Ok(out)
}
