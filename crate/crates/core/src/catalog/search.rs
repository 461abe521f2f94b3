use serde::Serialize;

use super::verify::{center_is_field, genus_terms};
use super::CatalogError;
use crate::arith::is_prime;
use crate::cgraph::{
    clique_decomposition, commuting_graph, compute_genus, CliqueDecomposition, GenusResult,
    DEFAULT_ORACLE_BUDGET,
};
use crate::finring::{
    enumerate_rings, AdditiveGroup, EnumerationStats, Limits, RingError, RingFilter, RingTable,
};
use crate::theorems::{predict, CaseId, TheoremCase, TheoremError};

/// Theorem cases whose order and center size match, over all prime pairs.
/// Cases whose divisibility hypotheses fail for those primes are skipped.
pub fn applicable_cases(order: u64, z_order: u64) -> Vec<TheoremCase> {
    let primes: Vec<u64> = (2..=order)
        .filter(|&n| is_prime(n) && order.is_multiple_of(n))
        .collect();
    let mut out = Vec::new();
    for id in CaseId::ALL {
        for &p in &primes {
            let qs: Vec<Option<u64>> = if id.uses_q() {
                primes.iter().map(|&q| Some(q)).collect()
            } else {
                vec![None]
            };
            for q in qs {
                if let Ok(c) = TheoremCase::new(id, p, q, None, None) {
                    if c.ring_order() == order && c.center_size() == z_order {
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupSearch {
    pub group: String,
    /// `None` when the group's candidate count exceeded the budget.
    pub stats: Option<EnumerationStats>,
    pub skipped: Option<String>,
}

/// A ring the search found, with its commuting-graph data and the theorem
/// outcomes it matches.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    #[serde(skip)]
    pub ring: RingTable,
    pub name: String,
    pub has_unity: bool,
    pub decomposition: CliqueDecomposition,
    pub genus_terms: Vec<(usize, usize, u64)>,
    pub genus: GenusResult,
    /// `(case, outcome)` for every applicable case whose prediction contains
    /// this ring's decomposition and genus.
    pub matched: Vec<(String, String)>,
    /// Applicable cases whose hypotheses this ring satisfies.
    pub checked_cases: Vec<String>,
}

impl Witness {
    /// Matches some applicable case, or no case applies to it.
    pub fn passed(&self) -> bool {
        self.checked_cases.is_empty() || !self.matched.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessSearch {
    pub order: u64,
    pub z_order: u64,
    pub cases: Vec<String>,
    /// Applicable cases whose prediction is empty for these primes.
    pub vacuous_cases: Vec<String>,
    pub groups: Vec<GroupSearch>,
    pub witnesses: Vec<Witness>,
}

impl WitnessSearch {
    pub fn found_none(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.witnesses.iter().all(Witness::passed)
    }

    /// One-line outcome, `no witness within budget` when nothing was found.
    pub fn summary(&self) -> String {
        if self.found_none() {
            return "no witness within budget".into();
        }
        if self.cases.is_empty() {
            return format!(
                "{} witnesses, no theorem case applies",
                self.witnesses.len()
            );
        }
        let ok = self.witnesses.iter().filter(|w| w.passed()).count();
        format!(
            "{} witnesses, {ok} consistent with the predictions",
            self.witnesses.len()
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

/// Enumerates non-commutative rings with `|Z| = z_order` on every
/// non-cyclic abelian group of the given order (cyclic groups only carry
/// commutative rings) and checks each against the applicable theorem cases.
/// Groups over budget are skipped and noted; if every group is over budget
/// the search fails with `BudgetExceeded`.
pub fn search_witnesses(
    order: u64,
    z_order: u64,
    budget: u128,
) -> Result<WitnessSearch, CatalogError> {
    let limits = Limits::default();
    let cases = applicable_cases(order, z_order);
    let mut predictions = Vec::new();
    let mut vacuous_cases = Vec::new();
    for c in &cases {
        match predict(c) {
            Ok(p) => predictions.push(p),
            Err(TheoremError::NoSolutions(_)) => vacuous_cases.push(c.to_string()),
            Err(e) => return Err(e.into()),
        }
    }
    let filter = RingFilter {
        noncommutative: Some(true),
        center_size: Some(z_order as usize),
        has_unity: None,
    };

    let mut groups = Vec::new();
    let mut witnesses = Vec::new();
    let mut first_overrun = None;
    for group in AdditiveGroup::all_of_order(order)
        .into_iter()
        .filter(|g| !g.is_cyclic())
    {
        let mut rings = match enumerate_rings(&group, filter, budget, &limits) {
            Ok(e) => e,
            Err(err @ RingError::BudgetExceeded { .. }) => {
                groups.push(GroupSearch {
                    group: group.to_string(),
                    stats: None,
                    skipped: Some(err.to_string()),
                });
                first_overrun.get_or_insert(err);
                continue;
            }
            Err(err) => return Err(err.into()),
        };
        for ring in rings.by_ref() {
            let graph = commuting_graph(&ring)?;
            let decomposition = clique_decomposition(&graph);
            let genus = compute_genus(&graph, DEFAULT_ORACLE_BUDGET);
            let has_unity = ring.unity().is_some();
            let nonfield = !center_is_field(&ring);
            let mut matched = Vec::new();
            let mut checked_cases = Vec::new();
            for pred in &predictions {
                let id = pred.case.id;
                if (id.requires_unity() && !has_unity)
                    || (id.requires_nonfield_center() && !nonfield)
                {
                    continue;
                }
                checked_cases.push(pred.case.to_string());
                if let Some(o) = pred.matching(&decomposition, genus.value) {
                    matched.push((pred.case.to_string(), o.to_string()));
                }
            }
            witnesses.push(Witness {
                name: ring.name().to_string(),
                has_unity,
                genus_terms: genus_terms(&decomposition),
                decomposition,
                genus,
                matched,
                checked_cases,
                ring,
            });
        }
        groups.push(GroupSearch {
            group: group.to_string(),
            stats: Some(rings.stats()),
            skipped: None,
        });
    }
    if let Some(err) = first_overrun {
        if groups.iter().all(|g| g.stats.is_none()) {
            return Err(err.into());
        }
    }
    Ok(WitnessSearch {
        order,
        z_order,
        cases: cases.iter().map(ToString::to_string).collect(),
        vacuous_cases,
        groups,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cases_by_shape() {
        let names = |o, z| -> Vec<String> {
            applicable_cases(o, z)
                .iter()
                .map(ToString::to_string)
                .collect()
        };
        assert_eq!(names(12, 1), ["T23a p=2 q=3", "T23b p=2 q=3"]);
        assert_eq!(names(16, 2), ["T21a p=2"]);
        assert_eq!(names(24, 6), ["T24 p=2 q=3"]);
        assert!(names(4, 1).is_empty());
    }

    #[test]
    fn order_four_has_trivial_center_witnesses() {
        let s = search_witnesses(4, 1, 1_000).unwrap();
        assert!(!s.found_none());
        assert!(s.passed());
        assert!(s
            .witnesses
            .iter()
            .all(|w| w.decomposition.to_string() == "3K1"));
    }
}
