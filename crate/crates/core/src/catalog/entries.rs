use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::arith::factorize;
use crate::cgraph::{classify, Classification, CliqueDecomposition};
use crate::finring::{
    direct_product, integers_mod, matrix_ring, row_ring, upper_triangular_ring, AdditiveGroup,
    Limits, RingError, RingTable,
};
use crate::theorems::{CaseId, TheoremCase};

/// How to build a catalog ring from the [`finring`](crate::finring)
/// constructors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Recipe {
    Integers(u64),
    Matrix(u64),
    UpperTriangular(u64),
    Row(u64),
    Product(Box<Recipe>, Box<Recipe>),
}

impl Recipe {
    pub fn product(a: Recipe, b: Recipe) -> Recipe {
        Recipe::Product(Box::new(a), Box::new(b))
    }

    pub fn build(&self, limits: &Limits) -> Result<RingTable, RingError> {
        match self {
            Recipe::Integers(n) => integers_mod(*n, limits),
            Recipe::Matrix(p) => matrix_ring(*p, limits),
            Recipe::UpperTriangular(p) => upper_triangular_ring(*p, limits),
            Recipe::Row(p) => row_ring(*p, limits),
            Recipe::Product(a, b) => direct_product(&a.build(limits)?, &b.build(limits)?, limits),
        }
    }

    fn elementary_divisors(&self) -> Vec<u64> {
        let copies = |p: u64, k: usize| vec![p; k];
        match self {
            Recipe::Integers(n) => factorize(*n).into_iter().map(|(p, e)| p.pow(e)).collect(),
            Recipe::Matrix(p) => copies(*p, 4),
            Recipe::UpperTriangular(p) => copies(*p, 3),
            Recipe::Row(p) => copies(*p, 2),
            Recipe::Product(a, b) => {
                let mut v = a.elementary_divisors();
                v.extend(b.elementary_divisors());
                v
            }
        }
    }

    /// Additive group of the built ring in invariant-factor form.
    pub fn additive_group(&self) -> AdditiveGroup {
        let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for q in self.elementary_divisors() {
            let p = factorize(q)[0].0;
            by_prime.entry(p).or_default().push(q);
        }
        let rank = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut invariants = vec![1u64; rank];
        for powers in by_prime.values_mut() {
            powers.sort_unstable_by(|a, b| b.cmp(a));
            for (i, q) in powers.iter().enumerate() {
                invariants[i] *= q;
            }
        }
        invariants.reverse();
        AdditiveGroup::new(invariants).expect("elementary divisors merge into invariant factors")
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Integers(n) => write!(f, "integers_mod({n})"),
            Recipe::Matrix(p) => write!(f, "matrix_ring({p})"),
            Recipe::UpperTriangular(p) => write!(f, "upper_triangular_ring({p})"),
            Recipe::Row(p) => write!(f, "row_ring({p})"),
            Recipe::Product(a, b) => write!(f, "direct_product({a}, {b})"),
        }
    }
}

/// What the harness should compute for an entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub z_order: usize,
    pub decomposition: CliqueDecomposition,
    pub genus: u64,
    pub classification: Classification,
}

impl Expected {
    pub fn cliques(z_order: usize, terms: &[(usize, usize)], genus: u64) -> Self {
        Expected {
            z_order,
            decomposition: CliqueDecomposition::cliques(terms.iter().copied()),
            genus,
            classification: classify(genus),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub recipe: Recipe,
    /// `None` for fixtures that exercise the pipeline without a theorem.
    pub case: Option<TheoremCase>,
    pub expected: Expected,
}

fn case(id: CaseId, p: u64, q: Option<u64>) -> Option<TheoremCase> {
    Some(TheoremCase::new(id, p, q, None, None).expect("builtin cases are well-formed"))
}

/// The built-in catalog, in a fixed order.
pub fn builtin_entries() -> Vec<CatalogEntry> {
    use Recipe::*;
    let t2 = |p| UpperTriangular(p);
    let entry = |name: &str, recipe, case, expected| CatalogEntry {
        name: name.to_string(),
        recipe,
        case,
        expected,
    };
    vec![
        entry(
            "M2(F2)",
            Matrix(2),
            case(CaseId::T21a, 2, None),
            Expected::cliques(2, &[(2, 7)], 0),
        ),
        entry(
            "M2(F3)",
            Matrix(3),
            case(CaseId::T21a, 3, None),
            Expected::cliques(3, &[(6, 13)], 13),
        ),
        entry(
            "T2(F2)xZ2",
            Recipe::product(t2(2), Integers(2)),
            case(CaseId::T21b, 2, None),
            Expected::cliques(4, &[(4, 3)], 0),
        ),
        entry(
            "M2(F2)xZ2",
            Recipe::product(Matrix(2), Integers(2)),
            case(CaseId::T22a, 2, None),
            Expected::cliques(4, &[(4, 7)], 0),
        ),
        entry(
            "T2(F2)xZ4",
            Recipe::product(t2(2), Integers(4)),
            case(CaseId::T22b, 2, None),
            Expected::cliques(8, &[(8, 3)], 6),
        ),
        entry(
            "T2(F2)xZ3",
            Recipe::product(t2(2), Integers(3)),
            case(CaseId::T24, 2, Some(3)),
            Expected::cliques(6, &[(6, 3)], 3),
        ),
        entry(
            "T2(F3)xZ2",
            Recipe::product(t2(3), Integers(2)),
            case(CaseId::T24, 3, Some(2)),
            Expected::cliques(6, &[(12, 4)], 24),
        ),
        entry("Row(F2)", Row(2), None, Expected::cliques(1, &[(1, 3)], 0)),
        entry("Row(F3)", Row(3), None, Expected::cliques(1, &[(2, 4)], 0)),
    ]
}

/// Built-in entry by exact name.
pub fn find_entry(name: &str) -> Option<CatalogEntry> {
    builtin_entries().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_match_constructed_rings() {
        let limits = Limits::default();
        for e in builtin_entries() {
            let ring = e.recipe.build(&limits).unwrap();
            assert_eq!(ring.name(), e.name);
            assert_eq!(e.recipe.additive_group().order(), ring.order());
        }
    }

    #[test]
    fn additive_groups() {
        let g = Recipe::product(Recipe::UpperTriangular(2), Recipe::Integers(4)).additive_group();
        assert_eq!(g.invariants(), &[2, 2, 2, 4]);
        let g = Recipe::product(Recipe::UpperTriangular(2), Recipe::Integers(3)).additive_group();
        assert_eq!(g.invariants(), &[2, 2, 6]);
        let g = Recipe::product(Recipe::Integers(4), Recipe::Integers(6)).additive_group();
        assert_eq!(g.invariants(), &[2, 12]);
    }
}
