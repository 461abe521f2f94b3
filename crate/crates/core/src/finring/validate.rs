use serde::Serialize;

use super::{Element, RingTable};

/// Outcome of one axiom check. `Failed` carries the offending element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AxiomCheck {
    Passed,
    Failed { witness: Vec<u32> },
    Skipped,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomCheck::Passed)
    }

    fn from_witness(w: Option<Vec<u32>>) -> Self {
        match w {
            None => AxiomCheck::Passed,
            Some(witness) => AxiomCheck::Failed { witness },
        }
    }
}

/// Per-axiom verdicts for a pair of operation tables. Each check runs
/// independently so one failure does not hide another.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub order: usize,
    /// Both tables are `N × N` with entries in `[0, N)`.
    pub well_formed: AxiomCheck,
    pub abelian_group: AxiomCheck,
    pub zero: Option<Element>,
    pub associativity: AxiomCheck,
    pub left_distributivity: AxiomCheck,
    pub right_distributivity: AxiomCheck,
    pub unity: Option<Element>,
    pub center_size: usize,
    pub commutative: bool,
}

impl ValidationReport {
    pub fn is_ring(&self) -> bool {
        self.well_formed.passed()
            && self.abelian_group.passed()
            && self.associativity.passed()
            && self.left_distributivity.passed()
            && self.right_distributivity.passed()
    }
}

/// Re-checks every axiom on an already constructed ring.
pub fn validate(ring: &RingTable) -> ValidationReport {
    validate_tables(ring.order(), ring.add_table(), ring.mul_table())
}

/// Checks the ring axioms on raw row-major `order × order` tables.
pub fn validate_tables(order: usize, add: &[u32], mul: &[u32]) -> ValidationReport {
    let n = order;
    let shaped = add.len() == n * n && mul.len() == n * n;
    let in_range = shaped && add.iter().chain(mul).all(|&e| (e as usize) < n);
    if !in_range {
        let witness = if shaped {
            add.iter()
                .chain(mul)
                .find(|&&e| (e as usize) >= n)
                .map(|&e| vec![e])
                .unwrap_or_default()
        } else {
            vec![]
        };
        return ValidationReport {
            order,
            well_formed: AxiomCheck::Failed { witness },
            abelian_group: AxiomCheck::Skipped,
            zero: None,
            associativity: AxiomCheck::Skipped,
            left_distributivity: AxiomCheck::Skipped,
            right_distributivity: AxiomCheck::Skipped,
            unity: None,
            center_size: 0,
            commutative: false,
        };
    }

    let a = |x: usize, y: usize| add[x * n + y] as usize;
    let m = |x: usize, y: usize| mul[x * n + y] as usize;
    let w = |v: &[usize]| Some(v.iter().map(|&i| i as u32).collect::<Vec<_>>());

    let zero = (0..n).find(|&z| (0..n).all(|x| a(z, x) == x && a(x, z) == x));
    let abelian = match zero {
        None => AxiomCheck::Failed { witness: vec![] },
        Some(z) => AxiomCheck::from_witness((|| {
            for x in 0..n {
                if !(0..n).any(|y| a(x, y) == z) {
                    return w(&[x]);
                }
                for y in 0..n {
                    if a(x, y) != a(y, x) {
                        return w(&[x, y]);
                    }
                    for c in 0..n {
                        if a(a(x, y), c) != a(x, a(y, c)) {
                            return w(&[x, y, c]);
                        }
                    }
                }
            }
            None
        })()),
    };

    let associativity = AxiomCheck::from_witness((|| {
        for x in 0..n {
            for y in 0..n {
                let xy = m(x, y);
                for c in 0..n {
                    if m(xy, c) != m(x, m(y, c)) {
                        return w(&[x, y, c]);
                    }
                }
            }
        }
        None
    })());
    let left = AxiomCheck::from_witness((|| {
        for x in 0..n {
            for y in 0..n {
                for c in 0..n {
                    if m(x, a(y, c)) != a(m(x, y), m(x, c)) {
                        return w(&[x, y, c]);
                    }
                }
            }
        }
        None
    })());
    let right = AxiomCheck::from_witness((|| {
        for x in 0..n {
            for y in 0..n {
                for c in 0..n {
                    if m(a(x, y), c) != a(m(x, c), m(y, c)) {
                        return w(&[x, y, c]);
                    }
                }
            }
        }
        None
    })());

    let unity = (0..n).find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x));
    let center_size = (0..n)
        .filter(|&z| (0..n).all(|r| m(z, r) == m(r, z)))
        .count();

    ValidationReport {
        order,
        well_formed: AxiomCheck::Passed,
        abelian_group: abelian,
        zero: zero.map(|z| Element(z as u32)),
        associativity,
        left_distributivity: left,
        right_distributivity: right,
        unity: unity.map(|e| Element(e as u32)),
        center_size,
        commutative: center_size == n,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn_tables(n: usize) -> (Vec<u32>, Vec<u32>) {
        let add = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        let mul = (0..n * n).map(|i| ((i / n) * (i % n) % n) as u32).collect();
        (add, mul)
    }

    #[test]
    fn integers_mod_six_pass() {
        let (add, mul) = zn_tables(6);
        let r = validate_tables(6, &add, &mul);
        assert!(r.is_ring());
        assert_eq!(r.unity, Some(Element(1)));
        assert_eq!(r.zero, Some(Element(0)));
        assert!(r.commutative);
        assert_eq!(r.center_size, 6);
    }

    #[test]
    fn zero_ring_of_order_five_is_commutative_without_unity() {
        let (add, _) = zn_tables(5);
        let mul = vec![0; 25];
        let r = validate_tables(5, &add, &mul);
        assert!(r.is_ring());
        assert!(r.commutative);
        assert_eq!(r.unity, None);
    }

    #[test]
    fn broken_distributivity_is_reported_independently() {
        let (add, mut mul) = zn_tables(3);
        // 2*2 = 4 = 1 in Z3; make it 0. Still commutative, no longer distributive.
        mul[2 * 3 + 2] = 0;
        let r = validate_tables(3, &add, &mul);
        assert!(r.abelian_group.passed());
        assert!(!r.left_distributivity.passed());
        assert!(!r.right_distributivity.passed());
        assert!(!r.is_ring());
    }

    #[test]
    fn out_of_range_entries_skip_the_rest() {
        let (add, mut mul) = zn_tables(2);
        mul[3] = 7;
        let r = validate_tables(2, &add, &mul);
        assert_eq!(r.well_formed, AxiomCheck::Failed { witness: vec![7] });
        assert_eq!(r.associativity, AxiomCheck::Skipped);
    }

    #[test]
    fn missing_inverse_is_not_a_group() {
        // max on {0,1,2} has identity 0 but 1 has no inverse
        let add: Vec<u32> = (0..9).map(|i| (i / 3).max(i % 3) as u32).collect();
        let mul = vec![0; 9];
        let r = validate_tables(3, &add, &mul);
        assert!(!r.abelian_group.passed());
    }
}
