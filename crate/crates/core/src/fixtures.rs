//! Small named structures used across tests, benchmarks and documentation.

use crate::structure::{GammaStructure, OrderRelation, OrderedGammaStructure};

/// The one-element structure with its only possible operation.
pub fn singleton() -> GammaStructure {
    GammaStructure::from_fn(1, 1, |_, _, _| 0)
}

/// Two elements with two operations: addition mod 2 and its complement
/// (`x + y + 1` mod 2). Every element is strongly regular here, making this
/// the canonical all-conditions-hold example.
pub fn parity_pair() -> GammaStructure {
    GammaStructure::from_fn(2, 2, |op, x, y| (x + y + op) % 2)
}

/// Two elements where every product is 0. Nothing sits above a product of
/// distinct factors, so most regularity notions fail at element 1.
pub fn constant_zero() -> GammaStructure {
    GammaStructure::from_fn(2, 1, |_, _, _| 0)
}

/// Two elements with `x op y = x`.
pub fn left_zero() -> GammaStructure {
    GammaStructure::from_fn(2, 1, |_, x, _| x)
}

/// Two elements with `x op y = min(x, y)` (logical AND).
pub fn and_pair() -> GammaStructure {
    GammaStructure::from_fn(2, 1, |_, x, y| x.min(y))
}

/// The total order `0 <= 1 <= .. <= n-1`.
pub fn chain_order(n: usize) -> OrderRelation {
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            pairs.push((a, b));
        }
    }
    OrderRelation::from_pairs(n, &pairs)
}

/// Pairs a structure with the discrete (equality) order, which is compatible
/// with any family of tables.
pub fn with_equality(structure: GammaStructure) -> OrderedGammaStructure {
    let order = OrderRelation::equality(structure.n());
    OrderedGammaStructure::new(structure, order).expect("orders built to size")
}
