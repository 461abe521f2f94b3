use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::diophantine::enumerate_l;
use super::{CaseId, TheoremCase, TheoremError};
use crate::arith::divides;
use crate::cgraph::{genus_clique_union, Classification, CliqueDecomposition};

/// One commuting-graph shape a theorem case permits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    /// `case 1`, `case 2`, or empty for single-template cases.
    pub form: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<Vec<u64>>,
    pub decomposition: CliqueDecomposition,
    /// Genus term of each clique size, `(size, multiplicity, genus of one)`.
    pub terms: Vec<(usize, usize, u64)>,
    pub genus: u64,
    pub classification: Classification,
}

impl Outcome {
    fn new(form: &str, t: Option<u64>, l: Option<Vec<u64>>, terms: &[(u64, u64)]) -> Self {
        let decomposition =
            CliqueDecomposition::cliques(terms.iter().map(|&(s, m)| (s as usize, m as usize)));
        let genus = genus_clique_union(&decomposition).expect("templates are clique unions");
        let terms = decomposition
            .terms()
            .map(|(s, m)| (s, m, crate::cgraph::genus_complete(s as u64)))
            .collect();
        Outcome {
            form: form.to_string(),
            t,
            l,
            decomposition,
            terms,
            genus: genus.value,
            classification: genus.classification,
        }
    }

    /// Human label such as `case 2, l=(4,1)`.
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        if !self.form.is_empty() {
            parts.push(self.form.clone());
        }
        if let Some(t) = self.t {
            parts.push(format!("t={t}"));
        }
        if let Some(l) = &self.l {
            let v: Vec<String> = l.iter().map(u64::to_string).collect();
            parts.push(format!("l=({})", v.join(",")));
        }
        parts.join(", ")
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label = self.label();
        if !label.is_empty() {
            write!(f, "[{label}] ")?;
        }
        write!(
            f,
            "{} -> genus {} ({})",
            self.decomposition, self.genus, self.classification
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub case: TheoremCase,
    pub outcomes: Vec<Outcome>,
}

impl Prediction {
    /// The outcome whose decomposition and genus match, if any.
    pub fn matching(&self, decomposition: &CliqueDecomposition, genus: u64) -> Option<&Outcome> {
        self.outcomes
            .iter()
            .find(|o| &o.decomposition == decomposition && o.genus == genus)
    }

    pub fn genera(&self) -> BTreeSet<u64> {
        self.outcomes.iter().map(|o| o.genus).collect()
    }
}

/// Values of `t ∈ {p, q, p², pq}` with `(t − 1) | (p²q − 1)`.
pub fn t_candidates(p: u64, q: u64) -> BTreeSet<u64> {
    let n = p * p * q - 1;
    [p, q, p * p, p * q]
        .into_iter()
        .filter(|&t| t >= 2 && divides(t - 1, n))
        .collect()
}

/// Every outcome the case permits. Missing `t` or `l` parameters are
/// expanded over all feasible values.
pub fn predict(case: &TheoremCase) -> Result<Prediction, TheoremError> {
    let p = case.p;
    let q = case.q();
    let l_vectors = |case: &TheoremCase| -> Result<Vec<Vec<u64>>, TheoremError> {
        match &case.l {
            Some(l) => Ok(vec![l.clone()]),
            None => {
                let s = enumerate_l(case.id, p, case.q)?;
                if s.is_vacuous() {
                    return Err(TheoremError::NoSolutions(format!(
                        "no positive l satisfies {:?} . l = {} for {case}",
                        s.coefficients, s.total
                    )));
                }
                Ok(s.vectors)
            }
        }
    };

    let mut outcomes = Vec::new();
    match case.id {
        CaseId::T21a | CaseId::T22a => {
            let small = if case.id == CaseId::T21a {
                p * p - p
            } else {
                p.pow(3) - p * p
            };
            if case.l.is_none() {
                outcomes.push(Outcome::new(
                    "case 1",
                    None,
                    None,
                    &[(small, p * p + p + 1)],
                ));
            }
            for l in l_vectors(case)? {
                let terms = [(small, l[0]), (p.pow(3) - p, l[1])];
                outcomes.push(Outcome::new("case 2", None, Some(l), &terms));
            }
        }
        CaseId::T21b => outcomes.push(Outcome::new("", None, None, &[(p.pow(3) - p * p, p + 1)])),
        CaseId::T22b => outcomes.push(Outcome::new(
            "",
            None,
            None,
            &[(p.pow(4) - p.pow(3), p + 1)],
        )),
        CaseId::T23a => {
            let ts: Vec<u64> = match case.t {
                Some(t) => vec![t],
                None => t_candidates(p, q).into_iter().collect(),
            };
            if ts.is_empty() {
                return Err(TheoremError::NoSolutions(format!(
                    "no t in {{p, q, p^2, pq}} has (t - 1) | (p^2 q - 1) for {case}"
                )));
            }
            for t in ts {
                let count = (p * p * q - 1) / (t - 1);
                outcomes.push(Outcome::new("", Some(t), None, &[(t - 1, count)]));
            }
        }
        CaseId::T23b => {
            for l in l_vectors(case)? {
                let terms = [
                    (p - 1, l[0]),
                    (q - 1, l[1]),
                    (p * p - 1, l[2]),
                    (p * q - 1, l[3]),
                ];
                outcomes.push(Outcome::new("", None, Some(l), &terms));
            }
        }
        CaseId::T24 => outcomes.push(Outcome::new("", None, None, &[(p * p * q - p * q, p + 1)])),
        CaseId::T25a => {
            let count = (p * q - 1) / (q - 1);
            outcomes.push(Outcome::new("", None, None, &[(p * p * q - p * p, count)]));
        }
        CaseId::T25b => {
            let count = (p * q - 1) / (p - 1);
            outcomes.push(Outcome::new("", None, None, &[(p.pow(3) - p * p, count)]));
        }
        CaseId::T25c => {
            for l in l_vectors(case)? {
                let terms = [(p.pow(3) - p * p, l[0]), (p * p * q - p * p, l[1])];
                outcomes.push(Outcome::new("", None, Some(l), &terms));
            }
        }
    }
    Ok(Prediction {
        case: case.clone(),
        outcomes,
    })
}

/// Whether the case forces a toroidal commuting graph. The case must pin
/// down a single genus value.
pub fn toroidality_condition(case: &TheoremCase) -> Result<bool, TheoremError> {
    let genera = predict(case)?.genera();
    match genera.len() {
        1 => Ok(genera.contains(&1)),
        _ => Err(TheoremError::NotFullyParameterized(case.id)),
    }
}
