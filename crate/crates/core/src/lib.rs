//! Algebra of finite ordered Γ-semigroups.
//!
//! A Γ-semigroup is a finite set `{0, .., n-1}` together with a family of `k`
//! binary operations (indexed by a set Γ) that satisfy *mixed* associativity:
//! `(x ρ y) ω z = x ρ (y ω z)` for every pair of operations `ρ, ω`. An ordered
//! Γ-semigroup additionally carries a partial order compatible with every
//! operation on both sides.
//!
//! The crate provides:
//!
//! * [`structure`] — the table/order representation and axiom validators,
//! * [`subset`] — bitmask subsets, set products and order closures,
//! * [`substructs`] — subsemigroups, ideals, filters and their enumeration,
//! * [`nrel`] — the equivalence induced by principal filters,
//! * [`regularity`] — element-wise regularity notions and witness search,
//! * [`theorem`] — the characterizations of strong regularity (`C1`–`C8`)
//!   and of strongly regular elements via subsets (`K1`–`K3`), each decided
//!   independently so that their agreement is a meaningful cross-check,
//! * [`search`] — exhaustive enumeration of small structures and orders,
//!   with predicate-driven search.

pub mod fixtures;
pub mod nrel;
pub mod regularity;
pub mod search;
pub mod structure;
pub mod subset;
pub mod substructs;
pub mod theorem;

pub use nrel::EqRelation;
pub use regularity::{RegularityWitness, StrongWitness};
pub use search::{EnumerationBudget, OrderMode, Predicate, SearchHit, SearchQuery};
pub use structure::{
    DimensionError, GammaStructure, OrderRelation, OrderedGammaStructure, Side, ValidationReport,
    Violation,
};
pub use subset::{PrincipalPattern, SubsetMask};
pub use substructs::SubstructureKind;
pub use theorem::{ConditionId, ConditionReport, EquivalenceVerdict, Failure, Witness};

/// Errors raised by operations that refuse to run rather than returning a
/// wrong or unreasonably expensive answer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A subset enumeration would have to visit `2^n` candidate sets.
    #[error("subset enumeration over {n} elements exceeds the cap of {cap}")]
    SubsetCapExceeded { n: usize, cap: usize },
    /// A table enumeration would have to fill more cells than the budget allows.
    #[error("{cells} table cells requested but the enumeration budget allows {max_cells}")]
    BudgetExceeded { cells: usize, max_cells: usize },
    /// A predicate name not in the registered set was given to the search.
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    /// A condition identifier outside `C1`..`C8`, `K1`..`K3` was requested.
    #[error("unknown condition `{0}`")]
    UnknownCondition(String),
}
