//! The equivalence that identifies elements generating the same least
//! filter, and the congruence properties it is expected to satisfy.

use crate::structure::OrderedGammaStructure;
use crate::subset::SubsetMask;
use crate::substructs::filter_generated;

/// An equivalence relation on `{0, .., n-1}` stored as a class index per
/// element plus the member mask of every class.
///
/// Classes are numbered by their least member, in increasing order, so the
/// representation is canonical for a given partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqRelation {
    class_id: Vec<usize>,
    classes: Vec<SubsetMask>,
}

impl EqRelation {
    /// Builds the relation from a partition. Panics unless the classes are
    /// nonempty, disjoint and cover the carrier.
    pub fn from_classes(n: usize, classes: Vec<SubsetMask>) -> Self {
        let mut seen = SubsetMask::empty(n);
        for class in &classes {
            assert_eq!(class.n(), n, "class built for a different carrier");
            assert!(!class.is_empty(), "empty class in a partition");
            for e in class.iter() {
                assert!(seen.insert(e), "element {e} appears in two classes");
            }
        }
        assert_eq!(seen.count(), n, "classes do not cover the carrier");

        let mut classes = classes;
        classes.sort_by_key(|c| c.iter().next().expect("nonempty"));
        let mut class_id = vec![0; n];
        for (i, class) in classes.iter().enumerate() {
            for e in class.iter() {
                class_id[e] = i;
            }
        }
        EqRelation { class_id, classes }
    }

    /// The identity relation: every element alone in its class.
    pub fn identity(n: usize) -> Self {
        EqRelation::from_classes(n, (0..n).map(|e| SubsetMask::singleton(n, e)).collect())
    }

    /// The universal relation: one class holding everything.
    pub fn universal(n: usize) -> Self {
        EqRelation::from_classes(n, vec![SubsetMask::full(n)])
    }

    /// Carrier size.
    pub fn n(&self) -> usize {
        self.class_id.len()
    }

    /// Index of the class containing `a`.
    pub fn class_of(&self, a: usize) -> usize {
        self.class_id[a]
    }

    /// The classes, ordered by least member.
    pub fn classes(&self) -> &[SubsetMask] {
        &self.classes
    }

    /// Whether `a` and `b` are related.
    pub fn same(&self, a: usize, b: usize) -> bool {
        self.class_id[a] == self.class_id[b]
    }
}

/// The relation identifying `a` and `b` exactly when
/// `filter_generated(a) == filter_generated(b)`.
pub fn n_relation(s: &OrderedGammaStructure) -> EqRelation {
    let n = s.n();
    let filters: Vec<SubsetMask> = (0..n).map(|a| filter_generated(s, a)).collect();
    let mut reps: Vec<usize> = Vec::new();
    let mut classes: Vec<SubsetMask> = Vec::new();
    for a in 0..n {
        match reps.iter().position(|&r| filters[r] == filters[a]) {
            Some(i) => {
                classes[i].insert(a);
            }
            None => {
                reps.push(a);
                classes.push(SubsetMask::singleton(n, a));
            }
        }
    }
    EqRelation::from_classes(n, classes)
}

/// Whether the relation respects every operation on both sides:
/// `(a, b)` related implies `(a op c, b op c)` and `(c op a, c op b)` related.
pub fn is_congruence(s: &OrderedGammaStructure, rel: &EqRelation) -> bool {
    let n = s.n();
    assert_eq!(rel.n(), n, "relation built for a different carrier");
    for a in 0..n {
        for b in 0..n {
            if !rel.same(a, b) {
                continue;
            }
            for c in 0..n {
                for op in 0..s.k() {
                    if !rel.same(s.apply(op, a, c), s.apply(op, b, c)) {
                        return false;
                    }
                    if !rel.same(s.apply(op, c, a), s.apply(op, c, b)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// A congruence where products behave like a meet: every `a op a` is related
/// to `a`, and `a op b` is related to `b op a`, under every operation pair.
pub fn is_semilattice_congruence(s: &OrderedGammaStructure, rel: &EqRelation) -> bool {
    if !is_congruence(s, rel) {
        return false;
    }
    let n = s.n();
    for a in 0..n {
        for op in 0..s.k() {
            if !rel.same(a, s.apply(op, a, a)) {
                return false;
            }
        }
        for b in 0..n {
            for op in 0..s.k() {
                if !rel.same(s.apply(op, a, b), s.apply(op, b, a)) {
                    return false;
                }
            }
        }
    }
    true
}
