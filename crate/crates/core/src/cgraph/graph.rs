use std::collections::VecDeque;

use super::GraphError;
use crate::finring::{Element, RingTable};

/// A simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// `n` isolated vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Rejects self-loops, repeated edges and out-of-range endpoints.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::InvalidEdge(format!(
                    "{u} -- {v} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(GraphError::InvalidEdge(format!("self-loop at {u}")));
            }
            if g.adj[u].contains(&v) {
                return Err(GraphError::InvalidEdge(format!("repeated edge {u} -- {v}")));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        for nbrs in &mut g.adj {
            nbrs.sort_unstable();
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Graph {
            adj: (0..n)
                .map(|v| (0..n).filter(|&u| u != v).collect())
                .collect(),
        }
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path edges are simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs three vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle edges are simple")
    }

    /// Vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.vertex_count();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nbrs| nbrs.iter().map(|&u| u + shift).collect()),
        );
        Graph { adj }
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.vertex_count());
        let mut adj = vec![Vec::new(); perm.len()];
        for (v, nbrs) in self.adj.iter().enumerate() {
            adj[perm[v]] = nbrs.iter().map(|&u| perm[u]).collect();
            adj[perm[v]].sort_unstable();
        }
        Graph { adj }
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        Graph {
            adj: vertices
                .iter()
                .map(|&v| {
                    let mut nbrs: Vec<usize> = self.adj[v]
                        .iter()
                        .filter(|&&u| local[u] != usize::MAX)
                        .map(|&u| local[u])
                        .collect();
                    nbrs.sort_unstable();
                    nbrs
                })
                .collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }
}

/// Commuting graph of a ring: vertices are the non-central elements in
/// ascending index order; graph vertex `i` is `vertices[i]`.
#[derive(Clone, Debug)]
pub struct CommutingGraph {
    ring_name: String,
    vertices: Vec<Element>,
    graph: Graph,
}

impl CommutingGraph {
    pub fn ring_name(&self) -> &str {
        &self.ring_name
    }

    pub fn vertices(&self) -> &[Element] {
        &self.vertices
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

impl std::ops::Deref for CommutingGraph {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

/// Builds the commuting graph of `ring` on `R \ Z(R)`.
pub fn commuting_graph(ring: &RingTable) -> Result<CommutingGraph, GraphError> {
    let vertices: Vec<Element> = ring.elements().filter(|&x| !ring.is_central(x)).collect();
    if vertices.is_empty() {
        return Err(GraphError::CommutativeRing(ring.name().to_string()));
    }
    let mut adj = vec![Vec::new(); vertices.len()];
    for (i, &x) in vertices.iter().enumerate() {
        for (j, &y) in vertices.iter().enumerate().skip(i + 1) {
            if ring.commute(x, y) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    for nbrs in &mut adj {
        nbrs.sort_unstable();
    }
    Ok(CommutingGraph {
        ring_name: ring.name().to_string(),
        vertices,
        graph: Graph { adj },
    })
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        queue.push_back(start);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
