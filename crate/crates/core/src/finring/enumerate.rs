//! Exhaustive enumeration of ring structures on a fixed additive group.
//!
//! A ring on `Z_{n1} × … × Z_{nk}` is determined by the `k²` generator
//! products. Only well-defined choices are visited: `g_i g_j` must be killed
//! by `gcd(n_i, n_j) = n_min(i,j)`. Isomorphic rings are not identified.

use super::spec::Bilinear;
use super::{AdditiveGroup, Limits, RingError, RingTable};

/// Default cap on `order^(k²)` for a single enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RingFilter {
    pub noncommutative: Option<bool>,
    pub center_size: Option<usize>,
    pub has_unity: Option<bool>,
}

impl RingFilter {
    pub fn accepts(&self, ring: &RingTable) -> bool {
        self.noncommutative
            .is_none_or(|nc| nc != ring.is_commutative())
            && self.center_size.is_none_or(|z| z == ring.center().len())
            && self.has_unity.is_none_or(|u| u == ring.unity().is_some())
    }
}

/// Counters for one enumeration run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct EnumerationStats {
    /// `order^(k²)`: every structure-constant table, well-defined or not.
    pub candidates: u128,
    pub well_defined: u64,
    pub associative: u64,
    pub emitted: u64,
}

/// `order^(k²)`, saturating.
pub fn candidate_count(group: &AdditiveGroup) -> u128 {
    let k = group.rank() as u32;
    (group.order() as u128)
        .checked_pow(k * k)
        .unwrap_or(u128::MAX)
}

/// Lazily emits every ring on `additive` that passes `filter`, in
/// lexicographic order of the structure constants (each product compared by
/// element index).
pub fn enumerate_rings(
    additive: &AdditiveGroup,
    filter: RingFilter,
    budget: u128,
    limits: &Limits,
) -> Result<RingEnumeration, RingError> {
    limits.check(additive.order() as u128)?;
    let candidates = candidate_count(additive);
    if candidates > budget {
        return Err(RingError::BudgetExceeded { candidates, budget });
    }
    let inv = additive.invariants();
    let k = inv.len();
    let mut choices = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            let kill = inv[i.min(j)];
            let allowed: Vec<Vec<u64>> = (0..additive.order())
                .map(|x| additive.decode(x))
                .filter(|c| {
                    c.iter()
                        .zip(inv)
                        .all(|(&x, &m)| (x * kill).is_multiple_of(m))
                })
                .collect();
            choices.push(allowed);
        }
    }
    Ok(RingEnumeration {
        group: additive.clone(),
        filter,
        limits: *limits,
        odometer: vec![0; choices.len()],
        choices,
        done: false,
        stats: EnumerationStats {
            candidates,
            ..Default::default()
        },
    })
}

pub struct RingEnumeration {
    group: AdditiveGroup,
    filter: RingFilter,
    limits: Limits,
    choices: Vec<Vec<Vec<u64>>>,
    odometer: Vec<usize>,
    done: bool,
    stats: EnumerationStats,
}

impl RingEnumeration {
    pub fn stats(&self) -> EnumerationStats {
        self.stats
    }

    pub fn group(&self) -> &AdditiveGroup {
        &self.group
    }

    fn advance(&mut self) {
        for pos in (0..self.odometer.len()).rev() {
            self.odometer[pos] += 1;
            if self.odometer[pos] < self.choices[pos].len() {
                return;
            }
            self.odometer[pos] = 0;
        }
        self.done = true;
    }

    fn try_current(&mut self) -> Option<RingTable> {
        let constants: Vec<Vec<u64>> = self
            .odometer
            .iter()
            .zip(&self.choices)
            .map(|(&d, c)| c[d].clone())
            .collect();
        self.stats.well_defined += 1;
        let bilinear = Bilinear::new(&self.group, &constants);
        if !bilinear.generators_associate() {
            return None;
        }
        self.stats.associative += 1;
        let k = self.group.rank();
        let symmetric =
            (0..k).all(|i| (0..k).all(|j| constants[i * k + j] == constants[j * k + i]));
        if self.filter.noncommutative == Some(true) && symmetric {
            return None;
        }
        if self.filter.noncommutative == Some(false) && !symmetric {
            return None;
        }
        let (add, mul) = bilinear.tables();
        let label: Vec<String> = constants
            .iter()
            .map(|c| self.group.encode(c).to_string())
            .collect();
        let name = format!("{}[{}]", self.group, label.join(","));
        let ring = RingTable::from_tables(name, self.group.order(), add, mul, &self.limits)
            .expect("bilinear extension of associative well-defined constants is a ring");
        self.filter.accepts(&ring).then_some(ring)
    }
}

impl Iterator for RingEnumeration {
    type Item = RingTable;

    fn next(&mut self) -> Option<RingTable> {
        while !self.done {
            let found = self.try_current();
            self.advance();
            if let Some(ring) = found {
                self.stats.emitted += 1;
                return Some(ring);
            }
        }
        None
    }
}
