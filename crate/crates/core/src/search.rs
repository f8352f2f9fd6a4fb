//! Exhaustive enumeration of small structures and their compatible orders,
//! plus a predicate-driven search over everything enumerated.
//!
//! Tables are generated by a depth-first scan over cells in flat order,
//! pruning as soon as any fully determined associativity triple fails, so
//! structures stream out in lexicographic order of the flattened table
//! tuple without ever materializing the candidate space.

use crate::regularity::{
    self, is_completely_regular, is_left_regular, is_regular, is_regular_via_sets,
    is_right_regular, is_strongly_regular, left_regular_witness, right_regular_witness,
};
use crate::structure::{GammaStructure, OrderRelation, OrderedGammaStructure};
use crate::theorem::{self, equivalence_verdict, ConditionId, EquivalenceVerdict};
use crate::Error;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

/// Cap on the total number of table cells (`k * n * n`) an enumeration may
/// fill. The default of 18 admits single tables up to n=4 and table pairs
/// up to n=3; anything larger must be requested explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_cells: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_cells: 18 }
    }
}

/// Streams every mixed-associative k-tuple of n-by-n tables under the
/// default budget.
pub fn enumerate_tables(n: usize, k: usize) -> Result<TableIter, Error> {
    enumerate_tables_with_budget(n, k, EnumerationBudget::default())
}

/// [`enumerate_tables`] with an explicit budget.
pub fn enumerate_tables_with_budget(
    n: usize,
    k: usize,
    budget: EnumerationBudget,
) -> Result<TableIter, Error> {
    assert!(n > 0 && k > 0, "enumeration needs n >= 1 and k >= 1");
    let cells = k * n * n;
    if cells > budget.max_cells {
        return Err(Error::BudgetExceeded {
            cells,
            max_cells: budget.max_cells,
        });
    }
    Ok(TableIter {
        n,
        k,
        cells,
        vals: vec![0; cells],
        next_candidate: vec![0; cells],
        depth: 0,
        done: false,
    })
}

/// Depth-first streaming enumerator over table assignments.
#[derive(Debug)]
pub struct TableIter {
    n: usize,
    k: usize,
    cells: usize,
    vals: Vec<usize>,
    /// Per cell, the value to try next when the scan returns to it.
    next_candidate: Vec<usize>,
    /// Number of currently assigned cells.
    depth: usize,
    done: bool,
}

impl TableIter {
    fn get(&self, limit: usize, op: usize, x: usize, y: usize) -> Option<usize> {
        let i = (op * self.n + x) * self.n + y;
        (i < limit).then(|| self.vals[i])
    }

    /// Checks every associativity triple whose four lookups are all within
    /// the first `limit` assigned cells. Cells are assigned in flat order,
    /// so `limit` fully describes what is determined.
    fn prefix_consistent(&self, limit: usize) -> bool {
        let n = self.n;
        for op1 in 0..self.k {
            for op2 in 0..self.k {
                for x in 0..n {
                    for y in 0..n {
                        let Some(xy) = self.get(limit, op1, x, y) else {
                            continue;
                        };
                        for z in 0..n {
                            let Some(yz) = self.get(limit, op2, y, z) else {
                                continue;
                            };
                            let Some(left) = self.get(limit, op2, xy, z) else {
                                continue;
                            };
                            let Some(right) = self.get(limit, op1, x, yz) else {
                                continue;
                            };
                            if left != right {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

impl Iterator for TableIter {
    type Item = GammaStructure;

    fn next(&mut self) -> Option<GammaStructure> {
        if self.done {
            return None;
        }
        loop {
            if self.depth == self.cells {
                let out = GammaStructure::from_flat(self.n, self.k, self.vals.clone());
                // Resume at the last cell; its next_candidate already
                // points past the value just emitted.
                self.depth -= 1;
                return Some(out);
            }
            let cell = self.depth;
            let mut descended = false;
            while self.next_candidate[cell] < self.n {
                let v = self.next_candidate[cell];
                self.next_candidate[cell] += 1;
                self.vals[cell] = v;
                if self.prefix_consistent(cell + 1) {
                    self.depth += 1;
                    if self.depth < self.cells {
                        self.next_candidate[self.depth] = 0;
                    }
                    descended = true;
                    break;
                }
            }
            if !descended {
                if cell == 0 {
                    self.done = true;
                    return None;
                }
                self.depth -= 1;
            }
        }
    }
}

const POSET_CACHE_MAX: usize = 5;

/// All partial orders on `n` labeled elements, equality order first, then
/// in increasing order of the strict-pair bitmask. Cached for small `n`
/// since the same list is refiltered for every enumerated structure.
pub fn partial_orders(n: usize) -> Arc<Vec<OrderRelation>> {
    assert!(n > 0, "orders need n >= 1");
    assert!(
        n * n - n < 64,
        "order enumeration over {n} elements is not supported"
    );
    if n > POSET_CACHE_MAX {
        return Arc::new(compute_orders(n));
    }
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<OrderRelation>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("poset cache poisoned");
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(compute_orders(n)))
        .clone()
}

fn compute_orders(n: usize) -> Vec<OrderRelation> {
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for bits in 0u64..(1 << positions.len()) {
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        for (i, &(a, b)) in positions.iter().enumerate() {
            if bits >> i & 1 == 1 {
                leq[a * n + b] = true;
            }
        }
        let rel = OrderRelation::new(n, leq).expect("sized to n * n");
        if rel.validate().is_valid() {
            out.push(rel);
        }
    }
    out
}

/// Whether every operation of `structure` is monotone under `order` on
/// both sides. Early-exit variant of the violation-collecting validator.
pub fn order_compatible(structure: &GammaStructure, order: &OrderRelation) -> bool {
    let n = structure.n();
    assert_eq!(order.n(), n, "order built for a different carrier");
    for a in 0..n {
        for b in 0..n {
            if a == b || !order.leq(a, b) {
                continue;
            }
            for c in 0..n {
                for op in 0..structure.k() {
                    if !order.leq(structure.apply(op, a, c), structure.apply(op, b, c)) {
                        return false;
                    }
                    if !order.leq(structure.apply(op, c, a), structure.apply(op, c, b)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// All partial orders compatible with the given tables, in the order of
/// [`partial_orders`]. The equality order is always among them.
pub fn enumerate_orders(structure: &GammaStructure) -> Vec<OrderRelation> {
    partial_orders(structure.n())
        .iter()
        .filter(|o| order_compatible(structure, o))
        .cloned()
        .collect()
}

/// How a search pairs orders with each enumerated table family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderMode {
    /// Every compatible partial order.
    #[default]
    All,
    /// Only the equality order.
    EqualityOnly,
}

/// A property a search can require or forbid.
///
/// The registered names are the five regularity predicates plus the
/// characterizations `C1`..`C8`, `K2` and `K3`. `K1` is not registered:
/// it is the same sweep as `C1` and would only alias it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Predicate {
    Regular,
    LeftRegular,
    RightRegular,
    CompletelyRegular,
    StronglyRegular,
    Condition(ConditionId),
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::Regular => "regular",
            Predicate::LeftRegular => "left-regular",
            Predicate::RightRegular => "right-regular",
            Predicate::CompletelyRegular => "completely-regular",
            Predicate::StronglyRegular => "strongly-regular",
            Predicate::Condition(id) => id.name(),
        }
    }

    /// Decides the predicate by its primary route.
    pub fn evaluate(self, s: &OrderedGammaStructure) -> Result<bool, Error> {
        Ok(match self {
            Predicate::Regular => is_regular(s),
            Predicate::LeftRegular => is_left_regular(s),
            Predicate::RightRegular => is_right_regular(s),
            Predicate::CompletelyRegular => is_completely_regular(s),
            Predicate::StronglyRegular => is_strongly_regular(s),
            Predicate::Condition(id) => theorem::check(s, id)?.holds,
        })
    }

    /// Decides the predicate again for confirmation. Regularity predicates
    /// switch between their witness-search and subset-membership routes;
    /// conditions rerun their sweep.
    pub fn confirm(self, s: &OrderedGammaStructure) -> Result<bool, Error> {
        Ok(match self {
            Predicate::Regular => is_regular_via_sets(s),
            Predicate::LeftRegular => {
                (0..s.n()).all(|a| left_regular_witness(s, a).is_some())
            }
            Predicate::RightRegular => {
                (0..s.n()).all(|a| right_regular_witness(s, a).is_some())
            }
            Predicate::CompletelyRegular => {
                is_regular_via_sets(s)
                    && (0..s.n()).all(|a| left_regular_witness(s, a).is_some())
                    && (0..s.n()).all(|a| right_regular_witness(s, a).is_some())
            }
            Predicate::StronglyRegular => regularity::strong_witness_table(s)
                .iter()
                .all(Option::is_some),
            Predicate::Condition(id) => theorem::check(s, id)?.holds,
        })
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Predicate {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let lowered = s.to_ascii_lowercase();
        Ok(match lowered.as_str() {
            "regular" => Predicate::Regular,
            "left-regular" => Predicate::LeftRegular,
            "right-regular" => Predicate::RightRegular,
            "completely-regular" => Predicate::CompletelyRegular,
            "strongly-regular" => Predicate::StronglyRegular,
            _ => {
                let id = ConditionId::from_str(s)
                    .map_err(|_| Error::UnknownPredicate(s.to_string()))?;
                if id == ConditionId::K1 {
                    return Err(Error::UnknownPredicate(s.to_string()));
                }
                Predicate::Condition(id)
            }
        })
    }
}

/// What to enumerate and which predicate combination to hunt for.
#[derive(Debug, Clone)]
pub struct SearchQuery {
    pub n: usize,
    pub k: usize,
    /// Predicates that must hold on a hit.
    pub sat: Vec<Predicate>,
    /// Predicates that must fail on a hit.
    pub unsat: Vec<Predicate>,
    /// Maximum number of hits to return.
    pub limit: usize,
    pub order_mode: OrderMode,
    pub budget: EnumerationBudget,
}

impl SearchQuery {
    /// A query over all compatible orders with the default budget and a
    /// limit of `usize::MAX`.
    pub fn new(n: usize, k: usize) -> Self {
        SearchQuery {
            n,
            k,
            sat: Vec::new(),
            unsat: Vec::new(),
            limit: usize::MAX,
            order_mode: OrderMode::All,
            budget: EnumerationBudget::default(),
        }
    }
}

/// One structure matching a query, with the full verdict attached.
#[derive(Debug, Clone)]
pub struct SearchHit {
    pub structure: GammaStructure,
    pub order: OrderRelation,
    pub verdict: EquivalenceVerdict,
}

/// Scans every enumerated structure/order pair and returns those where all
/// `sat` predicates hold and all `unsat` predicates fail. Every match is
/// decided a second time through [`Predicate::confirm`] before emission;
/// a disagreement between the two routes is a checker bug and panics.
pub fn run_search(query: &SearchQuery) -> Result<Vec<SearchHit>, Error> {
    let tables = enumerate_tables_with_budget(query.n, query.k, query.budget)?;
    let mut hits = Vec::new();
    if query.limit == 0 {
        return Ok(hits);
    }
    for structure in tables {
        let orders = match query.order_mode {
            OrderMode::All => enumerate_orders(&structure),
            OrderMode::EqualityOnly => vec![OrderRelation::equality(structure.n())],
        };
        for order in orders {
            let s = OrderedGammaStructure::new(structure.clone(), order)
                .expect("enumerated on the same carrier");
            if !query_matches(query, &s)? {
                continue;
            }
            for p in query.sat.iter().chain(&query.unsat) {
                let expected = p.evaluate(&s)?;
                assert_eq!(
                    p.confirm(&s)?,
                    expected,
                    "predicate {p} decided differently by its two routes"
                );
            }
            let verdict = equivalence_verdict(&s)?;
            let (structure, order) = (s.structure().clone(), s.order().clone());
            hits.push(SearchHit {
                structure,
                order,
                verdict,
            });
            if hits.len() >= query.limit {
                return Ok(hits);
            }
        }
    }
    Ok(hits)
}

fn query_matches(query: &SearchQuery, s: &OrderedGammaStructure) -> Result<bool, Error> {
    for p in &query.sat {
        if !p.evaluate(s)? {
            return Ok(false);
        }
    }
    for p in &query.unsat {
        if p.evaluate(s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn table_counts_match_independent_brute_force() {
        // Pinned against a pre-build scan that filtered all n^(k*n*n)
        // candidate tables directly.
        assert_eq!(enumerate_tables(1, 1).unwrap().count(), 1);
        assert_eq!(enumerate_tables(2, 1).unwrap().count(), 8);
        assert_eq!(enumerate_tables(2, 2).unwrap().count(), 14);
        assert_eq!(enumerate_tables(3, 1).unwrap().count(), 113);
        assert_eq!(enumerate_tables(3, 2).unwrap().count(), 413);
    }

    #[test]
    fn n2_enumeration_matches_a_local_filter() {
        // Second, in-test oracle: all 16 tables filtered by direct check.
        let mut expected = Vec::new();
        for bits in 0..16u32 {
            let t: Vec<usize> = (0..4).map(|i| (bits >> (3 - i) & 1) as usize).collect();
            let s = GammaStructure::new(2, 1, vec![t]).unwrap();
            if s.validate().is_valid() {
                expected.push(s);
            }
        }
        let got: Vec<GammaStructure> = enumerate_tables(2, 1).unwrap().collect();
        assert_eq!(got.len(), expected.len());
        for s in &got {
            assert!(expected.contains(s));
        }
        // Lexicographic emission: first is the all-zero table.
        assert_eq!(got[0], fixtures::constant_zero());
    }

    #[test]
    fn emitted_structures_validate_and_stream_in_lex_order() {
        let tables: Vec<GammaStructure> = enumerate_tables(3, 2).unwrap().collect();
        let mut flat_prev: Option<Vec<usize>> = None;
        for s in &tables {
            assert!(s.validate().is_valid());
            let flat: Vec<usize> = (0..2)
                .flat_map(|op| s.table(op).to_vec())
                .collect();
            if let Some(prev) = &flat_prev {
                assert!(prev < &flat, "emission not lexicographic");
            }
            flat_prev = Some(flat);
        }
    }

    #[test]
    fn budget_is_enforced_and_overridable() {
        assert!(matches!(
            enumerate_tables(4, 2),
            Err(Error::BudgetExceeded {
                cells: 32,
                max_cells: 18
            })
        ));
        assert!(matches!(
            enumerate_tables(5, 1),
            Err(Error::BudgetExceeded {
                cells: 25,
                max_cells: 18
            })
        ));
        let budget = EnumerationBudget { max_cells: 32 };
        assert!(enumerate_tables_with_budget(4, 2, budget).is_ok());
    }

    #[test]
    fn poset_counts_are_pinned() {
        assert_eq!(partial_orders(1).len(), 1);
        assert_eq!(partial_orders(2).len(), 3);
        assert_eq!(partial_orders(3).len(), 19);
        assert_eq!(partial_orders(4).len(), 219);
        // Equality order always comes first.
        assert_eq!(partial_orders(3)[0], OrderRelation::equality(3));
    }

    #[test]
    fn left_zero_accepts_every_order_and_parity_only_equality() {
        assert_eq!(enumerate_orders(&fixtures::left_zero()).len(), 3);
        let orders = enumerate_orders(&fixtures::parity_pair());
        assert_eq!(orders, vec![OrderRelation::equality(2)]);
    }

    #[test]
    fn predicate_names_round_trip_and_k1_is_rejected() {
        for name in [
            "regular",
            "left-regular",
            "right-regular",
            "completely-regular",
            "strongly-regular",
            "C1",
            "C8",
            "K2",
            "K3",
        ] {
            let p: Predicate = name.parse().unwrap();
            assert_eq!(p.name(), name);
        }
        assert!(matches!(
            "K1".parse::<Predicate>(),
            Err(Error::UnknownPredicate(_))
        ));
        assert!(matches!(
            "bogus".parse::<Predicate>(),
            Err(Error::UnknownPredicate(_))
        ));
    }

    #[test]
    fn search_finds_the_singleton() {
        let mut q = SearchQuery::new(1, 1);
        q.sat = vec![Predicate::StronglyRegular];
        let hits = run_search(&q).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].structure, fixtures::singleton());
        assert!(hits[0].verdict.consistent);
        assert!(hits[0].verdict.all_hold());
    }

    #[test]
    fn condition_cross_queries_come_back_empty() {
        // C1 without C5 (and the reverse) must be impossible.
        for (sat, unsat) in [
            (ConditionId::C1, ConditionId::C5),
            (ConditionId::C5, ConditionId::C1),
            (ConditionId::C2, ConditionId::K2),
        ] {
            let mut q = SearchQuery::new(2, 2);
            q.sat = vec![Predicate::Condition(sat)];
            q.unsat = vec![Predicate::Condition(unsat)];
            assert!(run_search(&q).unwrap().is_empty(), "{sat} without {unsat}");
        }
    }

    #[test]
    fn search_respects_the_limit_and_order_mode() {
        let mut q = SearchQuery::new(2, 1);
        q.sat = vec![Predicate::StronglyRegular];
        q.limit = 2;
        let hits = run_search(&q).unwrap();
        assert_eq!(hits.len(), 2);

        let mut q_eq = SearchQuery::new(2, 1);
        q_eq.sat = vec![Predicate::StronglyRegular];
        q_eq.order_mode = OrderMode::EqualityOnly;
        for hit in run_search(&q_eq).unwrap() {
            assert_eq!(hit.order, OrderRelation::equality(2));
        }
    }
}
