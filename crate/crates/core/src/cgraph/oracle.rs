//! Exact orientable genus by exhaustive search over rotation systems.
//!
//! Each rotation system fixes a cyclic order of the neighbours around every
//! vertex and so determines an embedding; its faces are the orbits of the
//! dart map `(u → v) ↦ (v → succ_v(u))`. For a connected component,
//! `V − E + F = 2 − 2g`, and the genus is minimised over all rotations.

use super::decompose::clique_decomposition;
use super::genus::{euler_lower_bound, genus_clique_union, GenusMethod, GenusResult};
use super::graph::{components, Graph};
use super::GraphError;

/// Default cap on rotation systems per component.
pub const DEFAULT_ORACLE_BUDGET: u128 = 10_000_000;

fn factorial(n: usize) -> u128 {
    (1..=n as u128)
        .try_fold(1u128, |acc, k| acc.checked_mul(k))
        .unwrap_or(u128::MAX)
}

/// `∏ (deg(v) − 1)!` over the vertices of `g` with positive degree.
pub fn embedding_count(g: &Graph) -> u128 {
    (0..g.vertex_count())
        .filter(|&v| g.degree(v) > 0)
        .map(|v| factorial(g.degree(v) - 1))
        .fold(1u128, |acc, f| acc.saturating_mul(f))
}

/// Minimum genus of `g`, component by component. Each component's
/// embedding count must be within `budget`.
pub fn genus_oracle(g: &Graph, budget: u128) -> Result<GenusResult, GraphError> {
    let comps: Vec<Graph> = components(g).iter().map(|c| g.induced(c)).collect();
    for c in &comps {
        let embeddings = embedding_count(c);
        if embeddings > budget {
            return Err(GraphError::BudgetExceeded { embeddings, budget });
        }
    }
    let value = comps.iter().map(connected_genus).sum();
    Ok(GenusResult::new(value, GenusMethod::Oracle))
}

/// Best available genus: the clique formula when every component is
/// complete, else the oracle, else the Euler lower bound when the oracle
/// budget is exceeded.
pub fn compute_genus(g: &Graph, budget: u128) -> GenusResult {
    let d = clique_decomposition(g);
    if let Ok(r) = genus_clique_union(&d) {
        return r;
    }
    genus_oracle(g, budget)
        .unwrap_or_else(|_| GenusResult::new(euler_lower_bound(g), GenusMethod::LowerBound))
}

/// Cyclic orders of `0..d` starting at 0, lexicographic in the tail.
fn cyclic_orders(d: usize) -> Vec<Vec<usize>> {
    fn go(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            go(rest, prefix, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    if d == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    go(&mut (1..d).collect(), &mut vec![0], &mut out);
    out
}

struct Darts {
    /// First dart of each vertex; darts of `v` are `offset[v]..offset[v+1]`.
    offset: Vec<usize>,
    rev: Vec<usize>,
    succ: Vec<usize>,
}

impl Darts {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut offset = Vec::with_capacity(n + 1);
        offset.push(0);
        for v in 0..n {
            offset.push(offset[v] + g.degree(v));
        }
        let total = offset[n];
        let mut rev = vec![0; total];
        for v in 0..n {
            for (i, &u) in g.neighbors(v).iter().enumerate() {
                let j = g
                    .neighbors(u)
                    .binary_search(&v)
                    .expect("adjacency is symmetric");
                rev[offset[v] + i] = offset[u] + j;
            }
        }
        let succ = (0..total).collect();
        Darts { offset, rev, succ }
    }

    fn set_rotation(&mut self, v: usize, order: &[usize]) {
        let base = self.offset[v];
        let d = order.len();
        for t in 0..d {
            self.succ[base + order[t]] = base + order[(t + 1) % d];
        }
    }

    fn count_faces(&self, stamp: &mut [u32], generation: u32) -> usize {
        let mut faces = 0;
        for start in 0..self.rev.len() {
            if stamp[start] == generation {
                continue;
            }
            faces += 1;
            let mut d = start;
            while stamp[d] != generation {
                stamp[d] = generation;
                d = self.succ[self.rev[d]];
            }
        }
        faces
    }
}

fn connected_genus(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let e = g.edge_count();
    if e == 0 {
        return 0;
    }
    let floor = euler_lower_bound(g);
    let mut darts = Darts::new(g);

    // Symmetry reduction at one maximum-degree vertex. In a complete graph any
    // permutation of its neighbours extends to an automorphism, so a single
    // rotation there suffices. Otherwise only the mirror symmetry (reverse
    // every rotation) is available, which halves that vertex's choices.
    let complete = (0..n).all(|v| g.degree(v) == n - 1);
    let pinned = (0..n)
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap();
    let mut free: Vec<(usize, Vec<Vec<usize>>)> = Vec::new();
    for v in 0..n {
        let d = g.degree(v);
        let mut orders = cyclic_orders(d);
        if v == pinned {
            if complete {
                orders.truncate(1);
            } else {
                orders.retain(|o| d < 3 || o[1] < o[d - 1]);
            }
        }
        darts.set_rotation(v, &orders[0]);
        if orders.len() > 1 {
            free.push((v, orders));
        }
    }

    let mut stamp = vec![0u32; darts.rev.len()];
    let mut generation = 0u32;
    let mut digits = vec![0usize; free.len()];
    let mut best = u64::MAX;
    loop {
        generation = generation.wrapping_add(1);
        if generation == 0 {
            stamp.fill(0);
            generation = 1;
        }
        let f = darts.count_faces(&mut stamp, generation);
        let genus = ((2 + e) as i64 - n as i64 - f as i64) / 2;
        best = best.min(genus as u64);
        if best <= floor {
            break;
        }
        // odometer step, last free vertex fastest
        let mut pos = free.len();
        loop {
            if pos == 0 {
                return best;
            }
            pos -= 1;
            digits[pos] += 1;
            let (v, orders) = &free[pos];
            if digits[pos] < orders.len() {
                darts.set_rotation(*v, &orders[digits[pos]]);
                break;
            }
            digits[pos] = 0;
            darts.set_rotation(*v, &orders[0]);
        }
    }
    best
}
