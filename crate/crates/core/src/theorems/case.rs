use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::diophantine::l_constraint;
use super::TheoremError;
use crate::arith::{divides, is_prime};

/// The result families, each fixing an order shape and a center size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CaseId {
    /// |R| = p⁴ with unity, |Z| = p.
    T21a,
    /// |R| = p⁴ with unity, |Z| = p².
    T21b,
    /// |R| = p⁵ with unity, Z not a field, |Z| = p².
    T22a,
    /// |R| = p⁵ with unity, Z not a field, |Z| = p³.
    T22b,
    /// |R| = p²q, Z = {0}, components `K_{t-1}`.
    T23a,
    /// |R| = p²q, Z = {0}, four component sizes weighted by l.
    T23b,
    /// |R| = p³q with unity, |Z| = pq.
    T24,
    /// |R| = p³q, |Z| = p², (q-1) | (pq-1).
    T25a,
    /// |R| = p³q, |Z| = p², (p-1) | (pq-1).
    T25b,
    /// |R| = p³q, |Z| = p², two component sizes weighted by l.
    T25c,
}

impl CaseId {
    pub const ALL: [CaseId; 10] = [
        CaseId::T21a,
        CaseId::T21b,
        CaseId::T22a,
        CaseId::T22b,
        CaseId::T23a,
        CaseId::T23b,
        CaseId::T24,
        CaseId::T25a,
        CaseId::T25b,
        CaseId::T25c,
    ];

    pub fn uses_q(self) -> bool {
        !matches!(
            self,
            CaseId::T21a | CaseId::T21b | CaseId::T22a | CaseId::T22b
        )
    }

    pub fn uses_l(self) -> bool {
        matches!(
            self,
            CaseId::T21a | CaseId::T22a | CaseId::T23b | CaseId::T25c
        )
    }

    pub fn requires_unity(self) -> bool {
        matches!(
            self,
            CaseId::T21a | CaseId::T21b | CaseId::T22a | CaseId::T22b | CaseId::T24
        )
    }

    /// The p⁵ cases additionally require the center not to be a field.
    pub fn requires_nonfield_center(self) -> bool {
        matches!(self, CaseId::T22a | CaseId::T22b)
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for CaseId {
    type Err = TheoremError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseId::ALL
            .into_iter()
            .find(|c| c.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| TheoremError::UnknownCase(s.to_string()))
    }
}

/// A theorem case with concrete parameters. Construction checks primality and
/// the case's divisibility hypotheses; an `l` vector, when given, must be
/// positive and satisfy the case's linear constraint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TheoremCase {
    pub id: CaseId,
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<Vec<u64>>,
}

impl TheoremCase {
    pub fn new(
        id: CaseId,
        p: u64,
        q: Option<u64>,
        t: Option<u64>,
        l: Option<Vec<u64>>,
    ) -> Result<Self, TheoremError> {
        let violated = |msg: String| Err(TheoremError::HypothesisViolated(msg));
        if !is_prime(p) {
            return violated(format!("p = {p} is not prime"));
        }
        let q = match (id.uses_q(), q) {
            (true, Some(q)) if is_prime(q) => Some(q),
            (true, Some(q)) => return violated(format!("q = {q} is not prime")),
            (true, None) => {
                return Err(TheoremError::MissingParameter {
                    case: id,
                    param: "q",
                })
            }
            (false, Some(_)) => {
                return Err(TheoremError::UnexpectedParameter {
                    case: id,
                    param: "q",
                })
            }
            (false, None) => None,
        };
        if t.is_some() && id != CaseId::T23a {
            return Err(TheoremError::UnexpectedParameter {
                case: id,
                param: "t",
            });
        }
        if l.is_some() && !id.uses_l() {
            return Err(TheoremError::UnexpectedParameter {
                case: id,
                param: "l",
            });
        }
        let case = TheoremCase { id, p, q, t, l };
        let qv = q.unwrap_or(0);
        match id {
            CaseId::T23a => {
                if let Some(t) = t {
                    if ![p, qv, p * p, p * qv].contains(&t) {
                        return violated(format!("t = {t} is not one of p, q, p^2, pq"));
                    }
                    if !divides(t - 1, p * p * qv - 1) {
                        return violated(format!(
                            "t - 1 = {} does not divide p^2 q - 1 = {}",
                            t - 1,
                            p * p * qv - 1
                        ));
                    }
                }
            }
            CaseId::T25a if !divides(qv - 1, p * qv - 1) => {
                return violated(format!(
                    "(q - 1) = {} does not divide (pq - 1) = {}",
                    qv - 1,
                    p * qv - 1
                ));
            }
            CaseId::T25b if !divides(p - 1, p * qv - 1) => {
                return violated(format!(
                    "(p - 1) = {} does not divide (pq - 1) = {}",
                    p - 1,
                    p * qv - 1
                ));
            }
            _ => {}
        }
        if let Some(l) = &case.l {
            let (coeffs, total) = l_constraint(id, p, q).expect("case uses l");
            if l.len() != coeffs.len() {
                return violated(format!("l must have {} entries", coeffs.len()));
            }
            if l.contains(&0) {
                return violated("l entries must be positive".into());
            }
            let lhs: u64 = l.iter().zip(&coeffs).map(|(a, c)| a * c).sum();
            if lhs != total {
                return violated(format!(
                    "l = {l:?} gives {lhs}, the constraint requires {total}"
                ));
            }
        }
        Ok(case)
    }

    pub fn q(&self) -> u64 {
        self.q.unwrap_or(0)
    }

    /// Order of the rings the case is about.
    pub fn ring_order(&self) -> u64 {
        let (p, q) = (self.p, self.q());
        match self.id {
            CaseId::T21a | CaseId::T21b => p.pow(4),
            CaseId::T22a | CaseId::T22b => p.pow(5),
            CaseId::T23a | CaseId::T23b => p * p * q,
            CaseId::T24 | CaseId::T25a | CaseId::T25b | CaseId::T25c => p.pow(3) * q,
        }
    }

    /// Required `|Z(R)|`; the `Z(R) = {0}` cases give 1.
    pub fn center_size(&self) -> u64 {
        let (p, q) = (self.p, self.q());
        match self.id {
            CaseId::T21a => p,
            CaseId::T21b | CaseId::T22a => p * p,
            CaseId::T22b => p.pow(3),
            CaseId::T23a | CaseId::T23b => 1,
            CaseId::T24 => p * q,
            CaseId::T25a | CaseId::T25b | CaseId::T25c => p * p,
        }
    }
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} p={}", self.id, self.p)?;
        if let Some(q) = self.q {
            write!(f, " q={q}")?;
        }
        if let Some(t) = self.t {
            write!(f, " t={t}")?;
        }
        if let Some(l) = &self.l {
            let parts: Vec<String> = l.iter().map(u64::to_string).collect();
            write!(f, " l=({})", parts.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_case_ids() {
        assert_eq!("T21a".parse::<CaseId>().unwrap(), CaseId::T21a);
        assert_eq!("t25C".parse::<CaseId>().unwrap(), CaseId::T25c);
        assert!("T26".parse::<CaseId>().is_err());
    }

    #[test]
    fn parameter_checks() {
        assert!(TheoremCase::new(CaseId::T21a, 4, None, None, None).is_err());
        assert!(matches!(
            TheoremCase::new(CaseId::T21a, 2, Some(3), None, None),
            Err(TheoremError::UnexpectedParameter { param: "q", .. })
        ));
        assert!(matches!(
            TheoremCase::new(CaseId::T24, 2, None, None, None),
            Err(TheoremError::MissingParameter { param: "q", .. })
        ));
        assert!(matches!(
            TheoremCase::new(CaseId::T24, 2, Some(3), Some(2), None),
            Err(TheoremError::UnexpectedParameter { param: "t", .. })
        ));
    }

    #[test]
    fn divisibility_hypotheses() {
        // (q-1) does not divide (2q-1) for q >= 3
        assert!(matches!(
            TheoremCase::new(CaseId::T25a, 2, Some(3), None, None),
            Err(TheoremError::HypothesisViolated(_))
        ));
        assert!(TheoremCase::new(CaseId::T25a, 3, Some(2), None, None).is_ok());
        assert!(TheoremCase::new(CaseId::T25b, 3, Some(2), None, None).is_err());
        assert!(TheoremCase::new(CaseId::T25b, 2, Some(7), None, None).is_ok());
        assert!(TheoremCase::new(CaseId::T23a, 2, Some(3), Some(3), None).is_err());
        assert!(TheoremCase::new(CaseId::T23a, 2, Some(3), Some(5), None).is_err());
        assert!(TheoremCase::new(CaseId::T23a, 2, Some(3), Some(2), None).is_ok());
    }

    #[test]
    fn l_vectors_are_checked() {
        assert!(TheoremCase::new(CaseId::T21a, 2, None, None, Some(vec![4, 1])).is_ok());
        assert!(TheoremCase::new(CaseId::T21a, 2, None, None, Some(vec![7, 0])).is_err());
        assert!(TheoremCase::new(CaseId::T21a, 2, None, None, Some(vec![2, 1])).is_err());
        assert!(TheoremCase::new(CaseId::T21a, 2, None, None, Some(vec![4])).is_err());
        assert!(TheoremCase::new(CaseId::T21b, 2, None, None, Some(vec![4, 1])).is_err());
    }

    #[test]
    fn orders_and_centers() {
        let c = TheoremCase::new(CaseId::T24, 3, Some(2), None, None).unwrap();
        assert_eq!((c.ring_order(), c.center_size()), (54, 6));
        let c = TheoremCase::new(CaseId::T22b, 2, None, None, None).unwrap();
        assert_eq!((c.ring_order(), c.center_size()), (32, 8));
        assert_eq!(c.to_string(), "T22b p=2");
    }
}
