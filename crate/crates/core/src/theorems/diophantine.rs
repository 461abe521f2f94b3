use serde::Serialize;

use super::{CaseId, TheoremError};

/// Positive solutions of an l-constraint `Σ cᵢ lᵢ = total`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LSolutions {
    pub coefficients: Vec<u64>,
    pub total: u64,
    /// Lexicographically ordered.
    pub vectors: Vec<Vec<u64>>,
}

impl LSolutions {
    /// No positive vector satisfies the constraint, so the case says nothing.
    pub fn is_vacuous(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// `(coefficients, total)` of the case's l-constraint.
pub(crate) fn l_constraint(id: CaseId, p: u64, q: Option<u64>) -> Option<(Vec<u64>, u64)> {
    let q = q.unwrap_or(0);
    match id {
        CaseId::T21a | CaseId::T22a => Some((vec![1, p + 1], p * p + p + 1)),
        CaseId::T23b => Some((vec![p - 1, q - 1, p * p - 1, p * q - 1], p * p * q - 1)),
        CaseId::T25c => Some((vec![p - 1, q - 1], p * q - 1)),
        _ => None,
    }
}

/// All vectors of positive integers with `Σ coeffs[i]·l[i] = total`, in
/// lexicographic order. Every coefficient must be positive.
pub fn solve_positive(coeffs: &[u64], total: u64) -> Vec<Vec<u64>> {
    fn go(coeffs: &[u64], remaining: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        let (&c, rest) = coeffs.split_first().expect("non-empty coefficient list");
        if rest.is_empty() {
            if remaining >= c && remaining.is_multiple_of(c) {
                prefix.push(remaining / c);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        // the remaining variables need at least one unit each
        let reserve: u64 = rest.iter().sum();
        let mut l = 1;
        while c * l + reserve <= remaining {
            prefix.push(l);
            go(rest, remaining - c * l, prefix, out);
            prefix.pop();
            l += 1;
        }
    }
    assert!(
        coeffs.iter().all(|&c| c > 0),
        "coefficients must be positive"
    );
    let mut out = Vec::new();
    if !coeffs.is_empty() {
        go(coeffs, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Every positive l-vector allowed by the case's constraint.
pub fn enumerate_l(id: CaseId, p: u64, q: Option<u64>) -> Result<LSolutions, TheoremError> {
    if id.uses_q() && q.is_none() {
        return Err(TheoremError::MissingParameter {
            case: id,
            param: "q",
        });
    }
    let (coefficients, total) =
        l_constraint(id, p, q).ok_or(TheoremError::NotLParameterized(id))?;
    if coefficients.contains(&0) {
        return Err(TheoremError::HypothesisViolated(format!(
            "p = {p} and q = {q:?} must be primes"
        )));
    }
    let vectors = solve_positive(&coefficients, total);
    Ok(LSolutions {
        coefficients,
        total,
        vectors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_p4_constraint() {
        let s = enumerate_l(CaseId::T21a, 2, None).unwrap();
        assert_eq!(s.vectors, vec![vec![1, 2], vec![4, 1]]);
        let s = enumerate_l(CaseId::T21a, 3, None).unwrap();
        assert_eq!(s.vectors, vec![vec![1, 3], vec![5, 2], vec![9, 1]]);
    }

    #[test]
    fn order_p3q_constraint() {
        let s = enumerate_l(CaseId::T25c, 2, Some(3)).unwrap();
        assert_eq!(s.vectors, vec![vec![1, 2], vec![3, 1]]);
    }

    #[test]
    fn vacuous_four_term_case() {
        // l1 + l2 + 3 l3 + 3 l4 = 7 has no positive solution
        let s = enumerate_l(CaseId::T23b, 2, Some(2)).unwrap();
        assert!(s.is_vacuous());
        let s = enumerate_l(CaseId::T23b, 2, Some(3)).unwrap();
        assert_eq!(s.vectors, vec![vec![1, 1, 1, 1]]);
    }

    #[test]
    fn cases_without_l() {
        assert_eq!(
            enumerate_l(CaseId::T24, 2, Some(3)),
            Err(TheoremError::NotLParameterized(CaseId::T24))
        );
    }
}
