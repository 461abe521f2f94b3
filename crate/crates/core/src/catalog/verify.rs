use serde::Serialize;

use super::{CatalogEntry, CatalogError};
use crate::cgraph::{
    clique_decomposition, commuting_graph, compute_genus, euler_lower_bound, genus_complete,
    CliqueDecomposition, GenusResult, DEFAULT_ORACLE_BUDGET,
};
use crate::finring::{Limits, RingTable};
use crate::theorems::{predict, stated_genus, stated_lower_bound, TheoremCase};

/// Whether `Z(R)` is a field: it has a multiplicative identity of its own
/// and no zero divisors. A finite commutative domain with unity is a field.
pub fn center_is_field(ring: &RingTable) -> bool {
    let z = ring.center();
    let zero = ring.zero();
    let nonzero: Vec<_> = z.iter().copied().filter(|&a| a != zero).collect();
    if nonzero.is_empty() {
        return false;
    }
    let has_identity = nonzero
        .iter()
        .any(|&e| z.iter().all(|&a| ring.mul(e, a) == a));
    let domain = nonzero
        .iter()
        .all(|&a| nonzero.iter().all(|&b| ring.mul(a, b) != zero));
    has_identity && domain
}

/// The hypothesis line of a theorem case, checked against a built ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub order: usize,
    pub required_order: u64,
    pub center_size: usize,
    pub required_center_size: u64,
    pub has_unity: bool,
    pub requires_unity: bool,
    pub center_is_field: bool,
    pub requires_nonfield_center: bool,
}

impl HypothesisCheck {
    pub fn new(ring: &RingTable, case: &TheoremCase) -> Self {
        HypothesisCheck {
            order: ring.order(),
            required_order: case.ring_order(),
            center_size: ring.center().len(),
            required_center_size: case.center_size(),
            has_unity: ring.unity().is_some(),
            requires_unity: case.id.requires_unity(),
            center_is_field: center_is_field(ring),
            requires_nonfield_center: case.id.requires_nonfield_center(),
        }
    }

    /// Each violated condition, in words.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.order as u64 != self.required_order {
            out.push(format!(
                "|R| = {}, expected {}",
                self.order, self.required_order
            ));
        }
        if self.center_size as u64 != self.required_center_size {
            out.push(format!(
                "|Z| = {}, expected {}",
                self.center_size, self.required_center_size
            ));
        }
        if self.requires_unity && !self.has_unity {
            out.push("ring has no unity".into());
        }
        if self.requires_nonfield_center && self.center_is_field {
            out.push("center is a field".into());
        }
        out
    }

    pub fn passed(&self) -> bool {
        self.failures().is_empty()
    }
}

/// One row of a verification report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub recipe: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_case: Option<TheoremCase>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypothesis: Option<HypothesisCheck>,
    pub order: usize,
    pub center_size: usize,
    pub vertex_count: usize,
    pub decomposition: CliqueDecomposition,
    /// `(size, multiplicity, genus of one copy)` per clique size.
    pub genus_terms: Vec<(usize, usize, u64)>,
    pub genus: GenusResult,
    pub euler_bound: u64,
    pub predicted_outcomes: Vec<String>,
    pub matched_outcome: Option<String>,
    pub mismatches: Vec<String>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Per-clique genus terms of a clique union; empty otherwise.
pub(crate) fn genus_terms(d: &CliqueDecomposition) -> Vec<(usize, usize, u64)> {
    if !d.all_cliques() {
        return Vec::new();
    }
    d.terms()
        .map(|(s, m)| (s, m, genus_complete(s as u64)))
        .collect()
}

/// Builds the entry's ring and checks it end to end.
pub fn verify_entry(entry: &CatalogEntry) -> Result<EntryReport, CatalogError> {
    let ring = entry.recipe.build(&Limits::default()).map_err(|source| {
        CatalogError::ConstructionFailed {
            name: entry.name.clone(),
            source,
        }
    })?;
    let hypothesis = entry.case.as_ref().map(|c| HypothesisCheck::new(&ring, c));
    if let Some(h) = &hypothesis {
        let failures = h.failures();
        if !failures.is_empty() {
            return Err(CatalogError::HypothesisMismatch {
                name: entry.name.clone(),
                detail: failures.join("; "),
            });
        }
    }

    let graph = commuting_graph(&ring)?;
    let decomposition = clique_decomposition(&graph);
    let genus = compute_genus(&graph, DEFAULT_ORACLE_BUDGET);
    let euler_bound = euler_lower_bound(&graph);

    let mut mismatches = Vec::new();
    let exp = &entry.expected;
    if ring.center().len() != exp.z_order {
        mismatches.push(format!(
            "|Z| = {}, expected {}",
            ring.center().len(),
            exp.z_order
        ));
    }
    if decomposition != exp.decomposition {
        mismatches.push(format!(
            "decomposition {decomposition}, expected {}",
            exp.decomposition
        ));
    }
    if !genus.is_exact() {
        mismatches.push(format!("genus only bounded below by {}", genus.value));
    }
    if genus.value != exp.genus || genus.classification != exp.classification {
        mismatches.push(format!(
            "genus {} ({}), expected {} ({})",
            genus.value, genus.classification, exp.genus, exp.classification
        ));
    }
    if genus.value < euler_bound {
        mismatches.push(format!(
            "genus {} is below the Euler bound {euler_bound}",
            genus.value
        ));
    }

    let mut predicted_outcomes = Vec::new();
    let mut matched_outcome = None;
    if let Some(case) = &entry.case {
        let prediction = predict(case)?;
        predicted_outcomes = prediction
            .outcomes
            .iter()
            .map(ToString::to_string)
            .collect();
        match prediction.matching(&decomposition, genus.value) {
            Some(o) => {
                matched_outcome = Some(o.to_string());
                if let Some(stated) = stated_genus(case, o) {
                    if stated != genus.value {
                        mismatches.push(format!(
                            "closed form gives {stated}, computed {}",
                            genus.value
                        ));
                    }
                }
                if let Some(bound) = stated_lower_bound(case, o) {
                    if genus.value < bound {
                        mismatches.push(format!(
                            "genus {} is below the stated bound {bound}",
                            genus.value
                        ));
                    }
                }
            }
            None => mismatches.push(format!(
                "({decomposition}, genus {}) is not a predicted outcome of {case}",
                genus.value
            )),
        }
    }

    Ok(EntryReport {
        name: entry.name.clone(),
        recipe: entry.recipe.to_string(),
        theorem_case: entry.case.clone(),
        hypothesis,
        order: ring.order(),
        center_size: ring.center().len(),
        vertex_count: graph.vertex_count(),
        genus_terms: genus_terms(&decomposition),
        decomposition,
        genus,
        euler_bound,
        predicted_outcomes,
        matched_outcome,
        mismatches,
    })
}

/// Verification rows ordered by entry name, with summary counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub rows: Vec<EntryReport>,
    pub matched: usize,
    pub mismatched: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatched == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    /// Fixed-width table, one line per entry, then a summary line.
    pub fn table(&self) -> String {
        let header = [
            "entry",
            "case",
            "|R|",
            "|Z|",
            "decomposition",
            "genus",
            "class",
            "result",
        ];
        let mut lines: Vec<[String; 8]> = vec![header.map(String::from)];
        for r in &self.rows {
            lines.push([
                r.name.clone(),
                r.theorem_case
                    .as_ref()
                    .map_or("-".into(), ToString::to_string),
                r.order.to_string(),
                r.center_size.to_string(),
                r.decomposition.to_string(),
                r.genus.value.to_string(),
                r.genus.classification.to_string(),
                if r.passed() {
                    "ok".into()
                } else {
                    "MISMATCH".into()
                },
            ]);
        }
        let widths: Vec<usize> = (0..8)
            .map(|i| {
                lines
                    .iter()
                    .map(|l| l[i].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        for l in &lines {
            let cells: Vec<String> = l
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            out.push_str(cells.join("  ").trim_end());
            out.push('\n');
        }
        for r in self.rows.iter().filter(|r| !r.passed()) {
            for m in &r.mismatches {
                out.push_str(&format!("{}: {m}\n", r.name));
            }
        }
        out.push_str(&format!(
            "{} matched, {} mismatched\n",
            self.matched, self.mismatched
        ));
        out
    }
}

/// Verifies every entry. Rows are sorted by name.
pub fn verify_all(entries: &[CatalogEntry]) -> Result<VerificationReport, CatalogError> {
    let mut rows = entries
        .iter()
        .map(verify_entry)
        .collect::<Result<Vec<_>, _>>()?;
    rows.sort_by(|a, b| a.name.cmp(&b.name));
    let matched = rows.iter().filter(|r| r.passed()).count();
    Ok(VerificationReport {
        mismatched: rows.len() - matched,
        matched,
        rows,
    })
}
