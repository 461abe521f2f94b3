//! Ring spec documents and construction from structure constants.

use serde::{Deserialize, Serialize};

use super::{AdditiveGroup, Limits, RingError, RingTable};

/// A ring description as stored in a ring file.
///
/// ```json
/// { "name": "Row(F2)", "additive": [2, 2],
///   "mult": { "constants": [[[1, 0], [0, 1]], [[0, 0], [0, 0]]] } }
/// ```
///
/// `constants[i][j]` is the product of generators `i` and `j` as a
/// coordinate vector. The alternative `{"tables": {"add": .., "mul": ..}}`
/// gives both operation tables over mixed-radix element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub name: String,
    pub additive: AdditiveGroup,
    pub mult: Multiplication,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum Multiplication {
    Constants(Vec<Vec<Vec<u64>>>),
    Tables {
        add: Vec<Vec<u32>>,
        mul: Vec<Vec<u32>>,
    },
}

impl RingSpec {
    pub fn from_json(text: &str) -> Result<Self, RingError> {
        serde_json::from_str(text).map_err(|e| RingError::InvalidSpec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ring specs always serialize")
    }

    /// Full-table spec for an existing ring over the given additive group.
    pub fn from_table(ring: &RingTable, additive: AdditiveGroup) -> Result<Self, RingError> {
        if additive.order() != ring.order() {
            return Err(RingError::InvalidSpec(format!(
                "additive group {additive} has order {}, ring has order {}",
                additive.order(),
                ring.order()
            )));
        }
        let rows = |t: &[u32]| t.chunks(ring.order()).map(<[u32]>::to_vec).collect();
        Ok(RingSpec {
            name: ring.name().to_string(),
            additive,
            mult: Multiplication::Tables {
                add: rows(ring.add_table()),
                mul: rows(ring.mul_table()),
            },
        })
    }
}

/// Bilinear extension of generator products over an additive group.
pub(crate) struct Bilinear<'a> {
    group: &'a AdditiveGroup,
    /// `constants[i * k + j]` = coordinates of `g_i · g_j`.
    constants: &'a [Vec<u64>],
}

impl<'a> Bilinear<'a> {
    pub(crate) fn new(group: &'a AdditiveGroup, constants: &'a [Vec<u64>]) -> Self {
        debug_assert_eq!(constants.len(), group.rank() * group.rank());
        Bilinear { group, constants }
    }

    /// First generator pair `(i, j)` whose product is not killed by both
    /// `n_i` and `n_j`.
    pub(crate) fn ill_defined_pair(&self) -> Option<(usize, usize)> {
        let inv = self.group.invariants();
        let k = inv.len();
        for i in 0..k {
            for j in 0..k {
                let c = &self.constants[i * k + j];
                let killed = |n: u64| c.iter().zip(inv).all(|(&x, &m)| (x * n).is_multiple_of(m));
                if !killed(inv[i]) || !killed(inv[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub(crate) fn product(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let inv = self.group.invariants();
        let k = inv.len();
        let mut out = vec![0u64; k];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let s = ai * bj;
                for ((o, &c), &m) in out.iter_mut().zip(&self.constants[i * k + j]).zip(inv) {
                    *o = (*o + s % m * c) % m;
                }
            }
        }
        out
    }

    /// `(g_i g_j) g_l = g_i (g_j g_l)` on all generator triples; enough for
    /// associativity of the bilinear extension.
    pub(crate) fn generators_associate(&self) -> bool {
        let k = self.group.rank();
        let unit = |i: usize| {
            let mut v = vec![0; k];
            v[i] = 1;
            v
        };
        (0..k).all(|i| {
            (0..k).all(|j| {
                let ij = &self.constants[i * k + j];
                (0..k).all(|l| {
                    let jl = &self.constants[j * k + l];
                    self.product(ij, &unit(l)) == self.product(&unit(i), jl)
                })
            })
        })
    }

    /// Row-major addition and multiplication tables over mixed-radix indices.
    pub(crate) fn tables(&self) -> (Vec<u32>, Vec<u32>) {
        let n = self.group.order();
        let coords: Vec<Vec<u64>> = (0..n).map(|i| self.group.decode(i)).collect();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in &coords {
            for b in &coords {
                let sum: Vec<u64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                add.push(self.group.encode(&sum) as u32);
                mul.push(self.group.encode(&self.product(a, b)) as u32);
            }
        }
        (add, mul)
    }
}

/// Raw `(order, add, mul)` tables described by `spec`, without checking the
/// ring axioms. Shape errors, unreduced coefficients and ill-defined
/// structure constants are still rejected.
pub fn spec_tables(spec: &RingSpec) -> Result<(usize, Vec<u32>, Vec<u32>), RingError> {
    let group = &spec.additive;
    let n = group.order();
    match &spec.mult {
        Multiplication::Constants(rows) => {
            let inv = group.invariants();
            let k = inv.len();
            if rows.len() != k || rows.iter().any(|r| r.len() != k) {
                return Err(RingError::InvalidSpec(format!(
                    "constants must be a {k}x{k} array of coefficient vectors"
                )));
            }
            let mut flat = Vec::with_capacity(k * k);
            for (i, row) in rows.iter().enumerate() {
                for (j, c) in row.iter().enumerate() {
                    if c.len() != k {
                        return Err(RingError::InvalidSpec(format!(
                            "constants[{i}][{j}] must have {k} coordinates"
                        )));
                    }
                    if let Some((m, _)) = c.iter().zip(inv).enumerate().find(|(_, (&x, &m))| x >= m)
                    {
                        return Err(RingError::InvalidSpec(format!(
                            "constants[{i}][{j}][{m}] = {} is not reduced modulo {}",
                            c[m], inv[m]
                        )));
                    }
                    flat.push(c.clone());
                }
            }
            let bilinear = Bilinear::new(group, &flat);
            if let Some((i, j)) = bilinear.ill_defined_pair() {
                return Err(RingError::NotWellDefined { i, j });
            }
            let (add, mul) = bilinear.tables();
            Ok((n, add, mul))
        }
        Multiplication::Tables { add, mul } => {
            let square = |t: &Vec<Vec<u32>>| t.len() == n && t.iter().all(|r| r.len() == n);
            if !square(add) || !square(mul) {
                return Err(RingError::InvalidSpec(format!(
                    "tables must be {n}x{n} to match the additive group {group}"
                )));
            }
            Ok((n, add.concat(), mul.concat()))
        }
    }
}

/// Builds and exhaustively validates the ring described by `spec`.
pub fn build_from_spec(spec: &RingSpec, limits: &Limits) -> Result<RingTable, RingError> {
    limits.check(spec.additive.order() as u128)?;
    let (n, add, mul) = spec_tables(spec)?;
    RingTable::from_tables(spec.name.clone(), n, add, mul, limits)
}
