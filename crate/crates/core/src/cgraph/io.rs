//! Graph import/export: DOT and a plain adjacency-list text format.
//!
//! The adjacency-list format is the vertex count on the first line, then one
//! `u v` pair per edge. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use super::graph::{CommutingGraph, Graph};
use super::GraphError;

/// DOT export of a commuting graph; node ids are ring element indices.
pub fn commuting_graph_to_dot(g: &CommutingGraph) -> String {
    let labels: Vec<String> = g.vertices().iter().map(|e| e.to_string()).collect();
    dot(
        &format!("commuting graph of {}", g.ring_name()),
        g.graph(),
        &labels,
    )
}

pub fn graph_to_dot(g: &Graph) -> String {
    let labels: Vec<String> = (0..g.vertex_count()).map(|v| v.to_string()).collect();
    dot("G", g, &labels)
}

fn dot(name: &str, g: &Graph, labels: &[String]) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\"")).unwrap();
    for l in labels {
        writeln!(out, "  {l};").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {} -- {};", labels[u], labels[v]).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn to_adjacency_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_adjacency_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, header) = lines.next().ok_or(GraphError::Parse {
        line: 1,
        message: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| GraphError::Parse {
        line,
        message: format!("expected a vertex count, found {header:?}"),
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let fields: Vec<&str> = l.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| GraphError::Parse {
                line,
                message: format!("expected a vertex index, found {s:?}"),
            })
        };
        match fields.as_slice() {
            [u, v] => edges.push((parse(u)?, parse(v)?)),
            _ => {
                return Err(GraphError::Parse {
                    line,
                    message: format!("expected \"u v\", found {l:?}"),
                })
            }
        }
    }
    Graph::from_edges(n, edges).map_err(|e| match e {
        GraphError::InvalidEdge(message) => GraphError::Parse { line: 0, message },
        other => other,
    })
}
