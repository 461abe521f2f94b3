//! The genus values exactly as the theorems state them, case by case.
//!
//! These are written out independently of the template expansion in
//! [`predict`](super::predict) so the two can be compared: `predict` sums the
//! complete-graph formula over the template, while this module evaluates the
//! stated closed forms (and the literal values stated for p = 2).

use super::{CaseId, Outcome, TheoremCase};

/// `⌈a·b / 12⌉` with signed factors.
fn c12(a: i128, b: i128) -> i128 {
    crate::arith::ceil_div(a * b, 12)
}

/// Genus the theorem states for `outcome` of `case`, or `None` where the
/// statement gives no value for those parameters.
pub fn stated_genus(case: &TheoremCase, outcome: &Outcome) -> Option<u64> {
    let p = case.p as i128;
    let q = case.q() as i128;
    let l: Vec<i128> = outcome
        .l
        .as_ref()
        .map(|v| v.iter().map(|&x| x as i128).collect())
        .unwrap_or_default();
    let case1 = outcome.form == "case 1";
    let value: i128 = match case.id {
        CaseId::T21a => match (p, case1) {
            (2, true) => 0,
            (2, false) => match l.as_slice() {
                [4, 1] => 1,
                [1, 2] => 2,
                _ => return None,
            },
            (_, true) => (p * p + p + 1) * c12(p * p - p - 3, p * p - p - 4),
            (_, false) => {
                l[0] * c12(p * p - p - 3, p * p - p - 4)
                    + l[1] * c12(p.pow(3) - p - 3, p.pow(3) - p - 4)
            }
        },
        CaseId::T21b => {
            if p == 2 {
                0
            } else {
                (p + 1) * c12(p.pow(3) - p * p - 3, p.pow(3) - p * p - 4)
            }
        }
        CaseId::T22a => match (p, case1) {
            (2, true) => 0,
            (2, false) => match l.as_slice() {
                [4, 1] => 1,
                [1, 2] => 2,
                _ => return None,
            },
            (_, true) => (p * p + p + 1) * c12(p.pow(3) - p * p - 3, p.pow(3) - p * p - 4),
            (_, false) => {
                l[0] * c12(p.pow(3) - p * p - 3, p.pow(3) - p * p - 4)
                    + l[1] * c12(p.pow(3) - p - 3, p.pow(3) - p - 4)
            }
        },
        CaseId::T22b => (p + 1) * c12(p.pow(4) - p.pow(3) - 3, p.pow(4) - p.pow(3) - 4),
        CaseId::T23a => {
            let t = outcome.t? as i128;
            let planar = (t == 2 && p == 2 && q == 2)
                || (t == 4 && p == 2 && q >= 3)
                || (t == p && [2, 3, 5].contains(&t) && q >= 3)
                || (t == q && [2, 3, 5].contains(&t) && p >= 3);
            let formula = (t == p && t >= 7 && q >= 3)
                || (t == q && t >= 7 && p >= 3)
                || (p >= 3 && q >= 3 && (t == p * p || t == p * q));
            if planar {
                0
            } else if formula {
                (p * p * q - 1) / (t - 1) * c12(t - 4, t - 5)
            } else {
                return None;
            }
        }
        CaseId::T23b => {
            let [l1, l2, l3, l4] = l.as_slice() else {
                return None;
            };
            match (p, q) {
                (2, 2) => 0,
                (2, 3) => *l4,
                (2, _) => l2 * c12(q - 4, q - 5) + l4 * c12(2 * q - 4, 2 * q - 5),
                (3, 2) => 2 * l3 + l4,
                (_, 2) => {
                    l1 * c12(p - 4, p - 5)
                        + l3 * c12(p * p - 4, p * p - 5)
                        + l4 * c12(2 * p - 4, 2 * p - 5)
                }
                (3, 3) => 2 * (l3 + l4),
                (3, _) => l2 * c12(q - 4, q - 5) + 2 * l3 + l4 * c12(3 * q - 4, 3 * q - 5),
                (_, 3) => {
                    l1 * c12(p - 4, p - 5)
                        + l3 * c12(p * p - 4, p * p - 5)
                        + l4 * c12(3 * p - 4, 3 * p - 5)
                }
                _ => {
                    l1 * c12(p - 4, p - 5)
                        + l2 * c12(q - 4, q - 5)
                        + l3 * c12(p * p - 4, p * p - 5)
                        + l4 * c12(p * q - 4, p * q - 5)
                }
            }
        }
        CaseId::T24 => match (p, q) {
            (2, 2) => 0,
            (2, _) => 3 * c12(2 * q - 3, 2 * q - 4),
            (_, 2) => (p + 1) * c12(2 * p * p - 2 * p - 3, 2 * p * p - 2 * p - 4),
            _ => (p + 1) * c12(p * p * q - p * q - 3, p * p * q - p * q - 4),
        },
        CaseId::T25a => match (p, q) {
            (2, 2) => 0,
            (2, _) => return None,
            (_, 2) => (2 * p - 1) * c12(p * p - 3, p * p - 4),
            _ => (p * q - 1) / (q - 1) * c12(p * p * q - p * p - 3, p * p * q - p * p - 4),
        },
        CaseId::T25b => match (p, q) {
            (2, _) => 0,
            (_, 2) => return None,
            _ => (p * q - 1) / (p - 1) * c12(p.pow(3) - p * p - 3, p.pow(3) - p * p - 4),
        },
        CaseId::T25c => {
            let [l1, l2] = l.as_slice() else { return None };
            match (p, q) {
                (2, 2) => 0,
                (2, _) => l2 * c12(4 * q - 7, 4 * q - 8),
                (_, 2) => {
                    l1 * c12(p.pow(3) - p * p - 3, p.pow(3) - p * p - 4)
                        + l2 * c12(p * p - 3, p * p - 4)
                }
                _ => {
                    l1 * c12(p.pow(3) - p * p - 3, p.pow(3) - p * p - 4)
                        + l2 * c12(p * p * q - p * p - 3, p * p * q - p * p - 4)
                }
            }
        }
    };
    Some(value as u64)
}

/// Lower bound asserted for `outcome`, where one is stated.
pub fn stated_lower_bound(case: &TheoremCase, outcome: &Outcome) -> Option<u64> {
    let (p, q) = (case.p, case.q());
    match case.id {
        CaseId::T21a if p >= 3 => Some(13),
        CaseId::T21b if p >= 3 => Some(72),
        CaseId::T22a if p >= 3 && outcome.form == "case 1" => Some(234),
        CaseId::T22b => Some(6),
        CaseId::T24 if p == 2 && q >= 3 => Some(3),
        CaseId::T25c if q == 2 && p >= 3 => Some(21),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theorems::predict;

    #[test]
    fn stated_values_at_small_primes() {
        let stated = |id, p, q: Option<u64>| {
            let case = TheoremCase::new(id, p, q, None, None).unwrap();
            let pred = predict(&case).unwrap();
            pred.outcomes
                .iter()
                .map(|o| stated_genus(&case, o).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(stated(CaseId::T21a, 2, None), vec![0, 2, 1]);
        assert_eq!(stated(CaseId::T21a, 3, None)[0], 13);
        assert_eq!(stated(CaseId::T21b, 3, None), vec![72]);
        assert_eq!(stated(CaseId::T22b, 2, None), vec![6]);
        assert_eq!(stated(CaseId::T24, 2, Some(3)), vec![3]);
        assert_eq!(stated(CaseId::T24, 3, Some(2)), vec![24]);
        assert_eq!(stated(CaseId::T23b, 2, Some(3)), vec![1]);
    }
}
