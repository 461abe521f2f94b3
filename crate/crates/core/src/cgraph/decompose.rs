use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::graph::{components, Graph};

/// Component sizes of a graph as a multiset, with a flag recording whether
/// every component is complete.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliqueDecomposition {
    sizes: BTreeMap<usize, usize>,
    all_cliques: bool,
}

impl CliqueDecomposition {
    /// A disjoint union of complete graphs with the given `(size, count)`
    /// terms. Zero counts are dropped.
    pub fn cliques(terms: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut sizes = BTreeMap::new();
        for (size, count) in terms {
            assert!(size >= 1, "components are non-empty");
            if count > 0 {
                *sizes.entry(size).or_insert(0) += count;
            }
        }
        CliqueDecomposition {
            sizes,
            all_cliques: true,
        }
    }

    pub fn all_cliques(&self) -> bool {
        self.all_cliques
    }

    /// `(size, multiplicity)` in ascending size.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.sizes.iter().map(|(&s, &m)| (s, m))
    }

    pub fn vertex_count(&self) -> usize {
        self.terms().map(|(s, m)| s * m).sum()
    }

    pub fn component_count(&self) -> usize {
        self.sizes.values().sum()
    }
}

/// `4K2 + K6`; an empty decomposition prints as `0`.
impl fmt::Display for CliqueDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sizes.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(s, m)| {
                if m == 1 {
                    format!("K{s}")
                } else {
                    format!("{m}K{s}")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))?;
        if !self.all_cliques {
            f.write_str(" (not all complete)")?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct Term {
    size: usize,
    multiplicity: usize,
}

impl Serialize for CliqueDecomposition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            terms: Vec<Term>,
            all_cliques: bool,
        }
        Repr {
            terms: self
                .terms()
                .map(|(size, multiplicity)| Term { size, multiplicity })
                .collect(),
            all_cliques: self.all_cliques,
        }
        .serialize(s)
    }
}

/// Component sizes of `g`; a component of size `s` counts as a clique when
/// it has exactly `s(s-1)/2` edges.
pub fn clique_decomposition(g: &Graph) -> CliqueDecomposition {
    let mut sizes = BTreeMap::new();
    let mut all_cliques = true;
    for comp in components(g) {
        let s = comp.len();
        let degree_sum: usize = comp.iter().map(|&v| g.degree(v)).sum();
        if degree_sum != s * (s - 1) {
            all_cliques = false;
        }
        *sizes.entry(s).or_insert(0) += 1;
    }
    CliqueDecomposition { sizes, all_cliques }
}
