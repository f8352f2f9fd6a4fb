//! Subsets of the carrier as bitmasks, set-valued products, and the order
//! closures that the substructure and regularity notions are built from.
//!
//! For subsets `A`, `B` the product `A Γ B` collects `a op b` over all
//! `a ∈ A`, `b ∈ B` and all operations `op`. The down-closure `(H]` adds
//! every element below some member of `H`; the up-closure `[H)` is dual.

use crate::structure::{GammaStructure, OrderRelation, OrderedGammaStructure};
use serde::ser::{Serialize, SerializeSeq, Serializer};
use std::cmp::Ordering;
use std::fmt;

/// A subset of `{0, .., n-1}` stored as packed bits.
///
/// Comparison ([`Ord`]) is by the numeric value of the bitmask, so iterating
/// candidate subsets in increasing mask order and collecting them yields a
/// sorted, deterministic enumeration.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    n: usize,
    words: Vec<u64>,
}

impl SubsetMask {
    /// The empty subset of an `n`-element carrier.
    pub fn empty(n: usize) -> Self {
        assert!(n > 0, "subsets need a carrier of at least one element");
        SubsetMask {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    /// The whole carrier.
    pub fn full(n: usize) -> Self {
        let mut mask = SubsetMask::empty(n);
        for word in 0..mask.words.len() {
            let bits = (n - word * 64).min(64);
            mask.words[word] = if bits == 64 { !0 } else { (1u64 << bits) - 1 };
        }
        mask
    }

    /// The subset `{element}`.
    pub fn singleton(n: usize, element: usize) -> Self {
        let mut mask = SubsetMask::empty(n);
        mask.insert(element);
        mask
    }

    /// The subset containing exactly the listed elements.
    pub fn from_elems(n: usize, elems: &[usize]) -> Self {
        let mut mask = SubsetMask::empty(n);
        for &e in elems {
            mask.insert(e);
        }
        mask
    }

    /// Interprets the low `n` bits of `bits` as a subset (bit `i` = element
    /// `i`). Only valid for `n <= 64`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(n <= 64, "from_bits covers at most 64 elements");
        let mut mask = SubsetMask::empty(n);
        debug_assert!(n == 64 || bits < (1u64 << n), "bits beyond the carrier");
        mask.words[0] = bits;
        mask
    }

    /// Carrier size (not the member count; see [`Self::count`]).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether `element` is a member.
    pub fn contains(&self, element: usize) -> bool {
        assert!(element < self.n, "element {element} out of range");
        self.words[element / 64] >> (element % 64) & 1 == 1
    }

    /// Adds `element`; returns true when it was not already present.
    pub fn insert(&mut self, element: usize) -> bool {
        assert!(element < self.n, "element {element} out of range");
        let word = &mut self.words[element / 64];
        let bit = 1u64 << (element % 64);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    /// Number of members.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when no element is a member.
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Whether every member of `self` is a member of `other`.
    pub fn is_subset(&self, other: &SubsetMask) -> bool {
        assert_eq!(self.n, other.n, "subset comparison across carriers");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Removes every member not also in `other`.
    pub fn intersect_in_place(&mut self, other: &SubsetMask) {
        assert_eq!(self.n, other.n, "intersection across carriers");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Adds all members of `other`; returns true when `self` grew.
    pub fn union_in_place(&mut self, other: &SubsetMask) -> bool {
        assert_eq!(self.n, other.n, "union across carriers");
        let mut grew = false;
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            let merged = *a | b;
            grew |= merged != *a;
            *a = merged;
        }
        grew
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&e| self.contains(e))
    }

    /// Members collected in increasing order.
    pub fn elems(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.n, other.n, "ordering across carriers");
        // Most significant word decides first: numeric order of the mask.
        self.words.iter().rev().cmp(other.words.iter().rev())
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn fmt_as_set(mask: &SubsetMask, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "{{")?;
    for (i, e) in mask.iter().enumerate() {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{e}")?;
    }
    write!(f, "}}")
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_as_set(self, f)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_as_set(self, f)
    }
}

/// Serializes as the sorted list of member elements, e.g. `[0, 2]`.
impl Serialize for SubsetMask {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.count()))?;
        for e in self.iter() {
            seq.serialize_element(&e)?;
        }
        seq.end()
    }
}

/// The product `A op B = { a op b : a ∈ A, b ∈ B }` under one operation.
pub fn product(s: &GammaStructure, a: &SubsetMask, op: usize, b: &SubsetMask) -> SubsetMask {
    assert_eq!(a.n(), s.n(), "left factor built for a different carrier");
    assert_eq!(b.n(), s.n(), "right factor built for a different carrier");
    assert!(op < s.k(), "operation {op} out of range");
    let mut out = SubsetMask::empty(s.n());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(s.apply(op, x, y));
        }
    }
    out
}

/// The product `A Γ B` over every operation at once.
pub fn product_gamma(s: &GammaStructure, a: &SubsetMask, b: &SubsetMask) -> SubsetMask {
    assert_eq!(a.n(), s.n(), "left factor built for a different carrier");
    assert_eq!(b.n(), s.n(), "right factor built for a different carrier");
    let mut out = SubsetMask::empty(s.n());
    for x in a.iter() {
        for y in b.iter() {
            for op in 0..s.k() {
                out.insert(s.apply(op, x, y));
            }
        }
    }
    out
}

/// The down-closure `(H] = { t : t <= h for some h ∈ H }`.
pub fn down_closure(order: &OrderRelation, h: &SubsetMask) -> SubsetMask {
    assert_eq!(h.n(), order.n(), "subset built for a different carrier");
    let mut out = SubsetMask::empty(order.n());
    for t in 0..order.n() {
        if h.iter().any(|e| order.leq(t, e)) {
            out.insert(t);
        }
    }
    out
}

/// The up-closure `[H) = { t : h <= t for some h ∈ H }`.
pub fn up_closure(order: &OrderRelation, h: &SubsetMask) -> SubsetMask {
    assert_eq!(h.n(), order.n(), "subset built for a different carrier");
    let mut out = SubsetMask::empty(order.n());
    for t in 0..order.n() {
        if h.iter().any(|e| order.leq(e, t)) {
            out.insert(t);
        }
    }
    out
}

/// The recurring product shapes around a single element `a`, with `M` the
/// whole carrier. All but [`PrincipalPattern::MAAM`] are down-closed; `MAAM`
/// is the raw product set, used where an element must literally factor
/// through products rather than merely sit below one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrincipalPattern {
    /// `(M Γ a]`
    MA,
    /// `(a Γ M]`
    AM,
    /// `(M Γ a Γ M]`
    MAM,
    /// `(M Γ a Γ a]`
    MAA,
    /// `(a Γ a Γ M]`
    AAM,
    /// `M Γ a Γ a Γ M` without closure
    MAAM,
}

/// Evaluates one of the standard product sets around `a`.
pub fn principal_set(
    s: &OrderedGammaStructure,
    pattern: PrincipalPattern,
    a: usize,
) -> SubsetMask {
    let n = s.n();
    assert!(a < n, "element {a} out of range");
    let m = SubsetMask::full(n);
    let one = SubsetMask::singleton(n, a);
    let raw = match pattern {
        PrincipalPattern::MA => chain(s.structure(), &[&m, &one]),
        PrincipalPattern::AM => chain(s.structure(), &[&one, &m]),
        PrincipalPattern::MAM => chain(s.structure(), &[&m, &one, &m]),
        PrincipalPattern::MAA => chain(s.structure(), &[&m, &one, &one]),
        PrincipalPattern::AAM => chain(s.structure(), &[&one, &one, &m]),
        PrincipalPattern::MAAM => chain(s.structure(), &[&m, &one, &one, &m]),
    };
    match pattern {
        PrincipalPattern::MAAM => raw,
        _ => down_closure(s.order(), &raw),
    }
}

/// Multiplies the factors left to right. In debug builds the right-to-left
/// bracketing is computed as well: mixed associativity lifts to subsets, so
/// any disagreement means the tables were never validated.
pub fn chain(s: &GammaStructure, factors: &[&SubsetMask]) -> SubsetMask {
    assert!(!factors.is_empty(), "chain of no factors");
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = product_gamma(s, &acc, f);
    }
    #[cfg(debug_assertions)]
    {
        let mut alt = factors[factors.len() - 1].clone();
        for f in factors[..factors.len() - 1].iter().rev() {
            alt = product_gamma(s, f, &alt);
        }
        debug_assert_eq!(
            acc, alt,
            "bracketings disagree; tables are not mixed-associative"
        );
    }
    acc
}
