//! Table-and-matrix representation of finite ordered Γ-semigroups, plus the
//! validators that decide whether raw tables actually satisfy the axioms.
//!
//! Construction and validation are deliberately separate: constructors only
//! reject *shape* problems ([`DimensionError`]), while axiom checks return a
//! [`ValidationReport`] listing every violation rather than failing fast.

use std::fmt;
use thiserror::Error;

/// The shape of raw input does not match the declared dimensions.
///
/// Distinct from axiom violations: a dimension error means the data cannot
/// even be interpreted as candidate tables, so there is nothing to validate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimensionError {
    /// The carrier set must have at least one element.
    #[error("element count must be at least 1")]
    NoElements,
    /// At least one operation is required.
    #[error("operation count must be at least 1")]
    NoOperations,
    /// Wrong number of operation tables.
    #[error("expected {expected} operation tables, found {found}")]
    TableCount { expected: usize, found: usize },
    /// An operation table is not `n * n` entries long.
    #[error("table {op} has {found} entries, expected {expected}")]
    TableSize {
        op: usize,
        expected: usize,
        found: usize,
    },
    /// The order matrix is not `n * n` entries long.
    #[error("order matrix has {found} entries, expected {expected}")]
    OrderSize { expected: usize, found: usize },
    /// A structure and an order built for different carrier sizes were paired.
    #[error("structure has {structure_n} elements but the order relation has {order_n}")]
    ElementMismatch { structure_n: usize, order_n: usize },
}

/// Which side of an operation a compatibility violation occurred on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Multiplying by a fixed element on the left broke the order.
    Left,
    /// Multiplying by a fixed element on the right broke the order.
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// A single broken axiom, with enough coordinates to reproduce it by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A table entry names an element outside `0..n`.
    EntryOutOfRange {
        op: usize,
        row: usize,
        col: usize,
        value: usize,
    },
    /// `(x op1 y) op2 z != x op1 (y op2 z)`.
    MixedAssociativity {
        op1: usize,
        op2: usize,
        x: usize,
        y: usize,
        z: usize,
    },
    /// `a <= a` fails.
    NotReflexive { element: usize },
    /// `a <= b` and `b <= a` for distinct `a`, `b`.
    NotAntisymmetric { a: usize, b: usize },
    /// `a <= b` and `b <= c` but not `a <= c`.
    NotTransitive { a: usize, b: usize, c: usize },
    /// `a <= b` but multiplying both by `c` under `op` breaks the order.
    Incompatible {
        a: usize,
        b: usize,
        c: usize,
        op: usize,
        side: Side,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::EntryOutOfRange { op, row, col, value } => write!(
                f,
                "table {op} entry ({row}, {col}) is {value}, outside the carrier"
            ),
            Violation::MixedAssociativity { op1, op2, x, y, z } => write!(
                f,
                "associativity fails: ({x} op{op1} {y}) op{op2} {z} != {x} op{op1} ({y} op{op2} {z})"
            ),
            Violation::NotReflexive { element } => {
                write!(f, "order is not reflexive at {element}")
            }
            Violation::NotAntisymmetric { a, b } => {
                write!(f, "order is not antisymmetric: {a} <= {b} and {b} <= {a}")
            }
            Violation::NotTransitive { a, b, c } => write!(
                f,
                "order is not transitive: {a} <= {b} and {b} <= {c} but not {a} <= {c}"
            ),
            Violation::Incompatible { a, b, c, op, side } => write!(
                f,
                "order is not {side}-compatible with op{op}: {a} <= {b} fails after multiplying by {c}"
            ),
        }
    }
}

/// Every axiom violation found in a structure, in deterministic scan order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    /// True when no violations were found.
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Appends all violations from `other`.
    pub fn merge(&mut self, other: ValidationReport) {
        self.violations.extend(other.violations);
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A finite set `{0, .., n-1}` with `k` binary operations given by tables.
///
/// The tables are stored flat, one `n * n` row-major block per operation.
/// Whether the tables satisfy mixed associativity is a property checked by
/// [`GammaStructure::validate`], not an invariant of the type: enumeration
/// and validation both need to hold tables that may turn out to be invalid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaStructure {
    n: usize,
    k: usize,
    tables: Vec<usize>,
}

impl GammaStructure {
    /// Builds a structure from one table per operation, each row-major with
    /// `n * n` entries.
    pub fn new(n: usize, k: usize, tables: Vec<Vec<usize>>) -> Result<Self, DimensionError> {
        if n == 0 {
            return Err(DimensionError::NoElements);
        }
        if k == 0 {
            return Err(DimensionError::NoOperations);
        }
        if tables.len() != k {
            return Err(DimensionError::TableCount {
                expected: k,
                found: tables.len(),
            });
        }
        let mut flat = Vec::with_capacity(k * n * n);
        for (op, table) in tables.into_iter().enumerate() {
            if table.len() != n * n {
                return Err(DimensionError::TableSize {
                    op,
                    expected: n * n,
                    found: table.len(),
                });
            }
            flat.extend(table);
        }
        Ok(GammaStructure { n, k, tables: flat })
    }

    /// Builds a structure by evaluating `f(op, x, y)` for every cell.
    pub fn from_fn(n: usize, k: usize, f: impl Fn(usize, usize, usize) -> usize) -> Self {
        assert!(n > 0 && k > 0, "from_fn needs n >= 1 and k >= 1");
        let mut tables = Vec::with_capacity(k * n * n);
        for op in 0..k {
            for x in 0..n {
                for y in 0..n {
                    tables.push(f(op, x, y));
                }
            }
        }
        GammaStructure { n, k, tables }
    }

    pub(crate) fn from_flat(n: usize, k: usize, tables: Vec<usize>) -> Self {
        debug_assert_eq!(tables.len(), k * n * n);
        GammaStructure { n, k, tables }
    }

    /// Number of elements.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of operations.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Applies operation `op` to `x` and `y`.
    pub fn apply(&self, op: usize, x: usize, y: usize) -> usize {
        self.tables[(op * self.n + x) * self.n + y]
    }

    /// The `n * n` row-major table of one operation.
    pub fn table(&self, op: usize) -> &[usize] {
        let len = self.n * self.n;
        &self.tables[op * len..(op + 1) * len]
    }

    /// Checks entry ranges and mixed associativity across all operation pairs.
    ///
    /// Associativity triples whose inner products are out of range are
    /// skipped: they are already reported as range violations and comparing
    /// through them would be meaningless.
    pub fn validate(&self) -> ValidationReport {
        let n = self.n;
        let mut report = ValidationReport::default();
        for op in 0..self.k {
            for x in 0..n {
                for y in 0..n {
                    let value = self.apply(op, x, y);
                    if value >= n {
                        report.violations.push(Violation::EntryOutOfRange {
                            op,
                            row: x,
                            col: y,
                            value,
                        });
                    }
                }
            }
        }
        for op1 in 0..self.k {
            for op2 in 0..self.k {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            let xy = self.apply(op1, x, y);
                            let yz = self.apply(op2, y, z);
                            if xy >= n || yz >= n {
                                continue;
                            }
                            if self.apply(op2, xy, z) != self.apply(op1, x, yz) {
                                report.violations.push(Violation::MixedAssociativity {
                                    op1,
                                    op2,
                                    x,
                                    y,
                                    z,
                                });
                            }
                        }
                    }
                }
            }
        }
        report
    }
}

/// A binary relation on `{0, .., n-1}` stored as a dense boolean matrix.
///
/// Intended to hold a partial order; [`OrderRelation::validate`] checks the
/// poset axioms. `leq[a * n + b]` means `a <= b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderRelation {
    n: usize,
    leq: Vec<bool>,
}

impl OrderRelation {
    /// Builds a relation from a flat `n * n` row-major boolean matrix.
    pub fn new(n: usize, leq: Vec<bool>) -> Result<Self, DimensionError> {
        if n == 0 {
            return Err(DimensionError::NoElements);
        }
        if leq.len() != n * n {
            return Err(DimensionError::OrderSize {
                expected: n * n,
                found: leq.len(),
            });
        }
        Ok(OrderRelation { n, leq })
    }

    /// The discrete order: `a <= b` only when `a == b`.
    pub fn equality(n: usize) -> Self {
        assert!(n > 0, "equality order needs n >= 1");
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        OrderRelation { n, leq }
    }

    /// The reflexive relation extended by the given pairs, each read as
    /// `lesser <= greater`. Pairs are taken literally: no transitive closure
    /// is computed, so the caller decides whether the result is an order.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut rel = OrderRelation::equality(n);
        for &(a, b) in pairs {
            assert!(a < n && b < n, "order pair ({a}, {b}) out of range");
            rel.leq[a * n + b] = true;
        }
        rel
    }

    /// Number of elements.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Whether `a <= b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    /// All strict pairs `(a, b)` with `a <= b` and `a != b`, row-major order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b && self.leq(a, b) {
                    pairs.push((a, b));
                }
            }
        }
        pairs
    }

    /// Checks reflexivity, antisymmetry and transitivity.
    ///
    /// Antisymmetry clashes are reported once per unordered pair, at the
    /// lexicographically first orientation.
    pub fn validate(&self) -> ValidationReport {
        let n = self.n;
        let mut report = ValidationReport::default();
        for a in 0..n {
            if !self.leq(a, a) {
                report.violations.push(Violation::NotReflexive { element: a });
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                if self.leq(a, b) && self.leq(b, a) {
                    report.violations.push(Violation::NotAntisymmetric { a, b });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !self.leq(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.leq(b, c) && !self.leq(a, c) {
                        report.violations.push(Violation::NotTransitive { a, b, c });
                    }
                }
            }
        }
        report
    }
}

/// A [`GammaStructure`] paired with an [`OrderRelation`] on the same carrier.
///
/// Pairing only checks that the sizes agree; whether the order is a partial
/// order compatible with the operations is decided by [`Self::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedGammaStructure {
    structure: GammaStructure,
    order: OrderRelation,
}

impl OrderedGammaStructure {
    pub fn new(
        structure: GammaStructure,
        order: OrderRelation,
    ) -> Result<Self, DimensionError> {
        if structure.n() != order.n() {
            return Err(DimensionError::ElementMismatch {
                structure_n: structure.n(),
                order_n: order.n(),
            });
        }
        Ok(OrderedGammaStructure { structure, order })
    }

    pub fn structure(&self) -> &GammaStructure {
        &self.structure
    }

    pub fn order(&self) -> &OrderRelation {
        &self.order
    }

    pub fn n(&self) -> usize {
        self.structure.n()
    }

    pub fn k(&self) -> usize {
        self.structure.k()
    }

    /// Applies operation `op` to `x` and `y`.
    pub fn apply(&self, op: usize, x: usize, y: usize) -> usize {
        self.structure.apply(op, x, y)
    }

    /// Whether `a <= b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    /// Checks that every operation is monotone in both arguments: `a <= b`
    /// must give `a op c <= b op c` and `c op a <= c op b` for all `c`, `op`.
    ///
    /// Assumes tables and order already validated individually; cells that
    /// are out of range are skipped here because the table validator already
    /// reports them.
    pub fn validate_compatibility(&self) -> ValidationReport {
        let n = self.n();
        let mut report = ValidationReport::default();
        for a in 0..n {
            for b in 0..n {
                if a == b || !self.leq(a, b) {
                    continue;
                }
                for c in 0..n {
                    for op in 0..self.k() {
                        let ac = self.apply(op, a, c);
                        let bc = self.apply(op, b, c);
                        if ac < n && bc < n && !self.leq(ac, bc) {
                            report.violations.push(Violation::Incompatible {
                                a,
                                b,
                                c,
                                op,
                                side: Side::Right,
                            });
                        }
                        let ca = self.apply(op, c, a);
                        let cb = self.apply(op, c, b);
                        if ca < n && cb < n && !self.leq(ca, cb) {
                            report.violations.push(Violation::Incompatible {
                                a,
                                b,
                                c,
                                op,
                                side: Side::Left,
                            });
                        }
                    }
                }
            }
        }
        report
    }

    /// Runs all three validators (tables, order, compatibility) and merges
    /// their reports.
    pub fn validate(&self) -> ValidationReport {
        let mut report = self.structure.validate();
        report.merge(self.order.validate());
        report.merge(self.validate_compatibility());
        report
    }

    /// True when [`Self::validate`] finds nothing.
    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }
}
