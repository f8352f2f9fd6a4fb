//! Benchmark subjects shared by the `core_ops` bench: structures that are
//! small enough to iterate quickly but large enough that the measured
//! operations do real work.

use gsg_core::fixtures;
use gsg_core::structure::{GammaStructure, OrderedGammaStructure};

/// The two-element, two-operation structure under the discrete order — the
/// smallest subject on which every condition holds.
pub fn parity() -> OrderedGammaStructure {
    fixtures::with_equality(fixtures::parity_pair())
}

/// Minimum on an `n`-element chain: a commutative, idempotent, fully
/// ordered subject whose filters and ideals are the chain prefixes and
/// suffixes.
pub fn chain_min(n: usize) -> OrderedGammaStructure {
    let structure = GammaStructure::from_fn(n, 1, |_, x, y| x.min(y));
    OrderedGammaStructure::new(structure, fixtures::chain_order(n))
        .expect("chain order matches the table size")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subjects_are_valid() {
        assert!(parity().is_valid());
        assert!(chain_min(6).is_valid());
    }
}
