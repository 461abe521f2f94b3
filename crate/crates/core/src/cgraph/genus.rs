use std::fmt;

use serde::Serialize;

use super::decompose::CliqueDecomposition;
use super::graph::{components, Graph};
use super::GraphError;
use crate::arith::ceil_div;

/// Planar (genus 0), toroidal (genus 1), or higher genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Planar,
    Toroidal,
    Genus(u64),
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Planar => f.write_str("planar"),
            Classification::Toroidal => f.write_str("toroidal"),
            Classification::Genus(g) => write!(f, "genus {g}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GenusMethod {
    /// Complete-graph formula summed over clique components.
    CliqueFormula,
    /// Exhaustive rotation-system search.
    Oracle,
    /// Euler-characteristic bound only; the true genus may be larger.
    LowerBound,
}

impl fmt::Display for GenusMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenusMethod::CliqueFormula => "clique_formula",
            GenusMethod::Oracle => "oracle",
            GenusMethod::LowerBound => "lower_bound",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GenusResult {
    pub value: u64,
    pub method: GenusMethod,
    pub classification: Classification,
}

impl GenusResult {
    pub fn new(value: u64, method: GenusMethod) -> Self {
        GenusResult {
            value,
            method,
            classification: classify(value),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.method != GenusMethod::LowerBound
    }
}

pub fn classify(genus: u64) -> Classification {
    match genus {
        0 => Classification::Planar,
        1 => Classification::Toroidal,
        g => Classification::Genus(g),
    }
}

/// Genus of `K_n`: `⌈(n-3)(n-4)/12⌉` for `n ≥ 3`, and 0 for `K_1`, `K_2`.
pub fn genus_complete(n: u64) -> u64 {
    if n < 3 {
        return 0;
    }
    let n = n as i128;
    ceil_div((n - 3) * (n - 4), 12) as u64
}

/// Sum of [`genus_complete`] over the components of a clique union.
pub fn genus_clique_union(d: &CliqueDecomposition) -> Result<GenusResult, GraphError> {
    if !d.all_cliques() {
        return Err(GraphError::NotCliqueUnion);
    }
    let value = d
        .terms()
        .map(|(size, count)| count as u64 * genus_complete(size as u64))
        .sum();
    Ok(GenusResult::new(value, GenusMethod::CliqueFormula))
}

/// Per-component Euler bound `max(0, ⌈(m - 3n + 6)/6⌉)` summed over
/// components with at least three vertices.
pub fn euler_lower_bound(g: &Graph) -> u64 {
    components(g)
        .iter()
        .filter(|c| c.len() >= 3)
        .map(|c| {
            let n = c.len() as i128;
            let m = c.iter().map(|&v| g.degree(v)).sum::<usize>() as i128 / 2;
            ceil_div(m - 3 * n + 6, 6).max(0) as u64
        })
        .sum()
}
