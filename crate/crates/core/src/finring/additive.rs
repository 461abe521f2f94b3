use std::fmt;

use serde::{Deserialize, Serialize};

use super::RingError;
use crate::arith::factorize;

/// A finite abelian group `Z_{n1} × … × Z_{nk}` in invariant-factor form,
/// `n1 | n2 | … | nk`, every `ni ≥ 2`. The empty list is the trivial group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct AdditiveGroup {
    invariants: Vec<u64>,
}

impl AdditiveGroup {
    pub fn new(invariants: Vec<u64>) -> Result<Self, RingError> {
        if let Some(&n) = invariants.iter().find(|&&n| n < 2) {
            return Err(RingError::InvalidAdditiveGroup(format!(
                "invariant factor {n} is below 2"
            )));
        }
        for w in invariants.windows(2) {
            if w[1] % w[0] != 0 {
                return Err(RingError::InvalidAdditiveGroup(format!(
                    "{} does not divide {}",
                    w[0], w[1]
                )));
            }
        }
        let order = invariants
            .iter()
            .try_fold(1u128, |acc, &n| acc.checked_mul(n as u128));
        if order.is_none_or(|o| o > usize::MAX as u128) {
            return Err(RingError::InvalidAdditiveGroup("order overflows".into()));
        }
        Ok(AdditiveGroup { invariants })
    }

    /// `Z_n`; `n = 1` gives the trivial group.
    pub fn cyclic(n: u64) -> Result<Self, RingError> {
        match n {
            0 => Err(RingError::InvalidAdditiveGroup("order 0".into())),
            1 => AdditiveGroup::new(vec![]),
            n => AdditiveGroup::new(vec![n]),
        }
    }

    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    /// Number of generators.
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn order(&self) -> usize {
        self.invariants.iter().product::<u64>() as usize
    }

    pub fn is_cyclic(&self) -> bool {
        self.rank() <= 1
    }

    /// Coordinates of the element with mixed-radix index `index`.
    pub fn decode(&self, mut index: usize) -> Vec<u64> {
        let mut coords = vec![0; self.rank()];
        for (c, &n) in coords.iter_mut().zip(&self.invariants).rev() {
            *c = (index as u64) % n;
            index /= n as usize;
        }
        coords
    }

    /// Mixed-radix index of `coords`; each coordinate is reduced first.
    pub fn encode(&self, coords: &[u64]) -> usize {
        debug_assert_eq!(coords.len(), self.rank());
        coords
            .iter()
            .zip(&self.invariants)
            .fold(0usize, |acc, (&c, &n)| acc * n as usize + (c % n) as usize)
    }

    /// Every abelian group of the given order, each once, in invariant-factor
    /// form. Ordered by rank, then lexicographically by invariant factors.
    pub fn all_of_order(order: u64) -> Vec<AdditiveGroup> {
        if order == 0 {
            return vec![];
        }
        let mut per_prime: Vec<Vec<Vec<u64>>> = Vec::new();
        for (p, e) in factorize(order) {
            // partitions of e, each rendered as descending prime powers
            per_prime.push(
                partitions(e)
                    .into_iter()
                    .map(|parts| parts.iter().map(|&k| p.pow(k)).collect())
                    .collect(),
            );
        }
        let mut groups = vec![Vec::<u64>::new()];
        for choices in per_prime {
            let mut next = Vec::new();
            for acc in &groups {
                for powers in &choices {
                    // acc and powers are descending; merge position-wise
                    let len = acc.len().max(powers.len());
                    let merged = (0..len)
                        .map(|i| {
                            acc.get(i).copied().unwrap_or(1) * powers.get(i).copied().unwrap_or(1)
                        })
                        .collect();
                    next.push(merged);
                }
            }
            groups = next;
        }
        let mut out: Vec<AdditiveGroup> = groups
            .into_iter()
            .map(|mut desc| {
                desc.reverse();
                AdditiveGroup { invariants: desc }
            })
            .collect();
        out.sort_by(|a, b| {
            a.rank()
                .cmp(&b.rank())
                .then_with(|| a.invariants.cmp(&b.invariants))
        });
        out
    }
}

/// Partitions of `n` as descending part lists.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl TryFrom<Vec<u64>> for AdditiveGroup {
    type Error = RingError;

    fn try_from(v: Vec<u64>) -> Result<Self, Self::Error> {
        AdditiveGroup::new(v)
    }
}

impl From<AdditiveGroup> for Vec<u64> {
    fn from(g: AdditiveGroup) -> Self {
        g.invariants
    }
}

impl fmt::Display for AdditiveGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariants.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.invariants.iter().map(|n| format!("Z{n}")).collect();
        f.write_str(&parts.join("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_dividing_factors() {
        assert!(AdditiveGroup::new(vec![2, 3]).is_err());
        assert!(AdditiveGroup::new(vec![1]).is_err());
        assert!(AdditiveGroup::new(vec![2, 6]).is_ok());
    }

    #[test]
    fn mixed_radix_puts_coordinate_zero_first() {
        let g = AdditiveGroup::new(vec![2, 6]).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.encode(&[1, 0]), 6);
        assert_eq!(g.encode(&[0, 5]), 5);
        assert_eq!(g.decode(11), vec![1, 5]);
        for i in 0..12 {
            assert_eq!(g.encode(&g.decode(i)), i);
        }
    }

    #[test]
    fn abelian_groups_by_order() {
        let show = |n| {
            AdditiveGroup::all_of_order(n)
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(show(1), vec!["0"]);
        assert_eq!(show(4), vec!["Z4", "Z2xZ2"]);
        assert_eq!(show(12), vec!["Z12", "Z2xZ6"]);
        assert_eq!(
            show(16),
            vec!["Z16", "Z2xZ8", "Z4xZ4", "Z2xZ2xZ4", "Z2xZ2xZ2xZ2"]
        );
        assert_eq!(show(72).len(), 6);
        for g in AdditiveGroup::all_of_order(72) {
            assert_eq!(g.order(), 72);
            AdditiveGroup::new(g.invariants().to_vec()).unwrap();
        }
    }
}
