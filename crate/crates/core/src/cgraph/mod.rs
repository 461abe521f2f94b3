//! Commuting graphs, clique decompositions and graph genus.

mod decompose;
mod genus;
mod graph;
mod io;
mod oracle;

pub use decompose::{clique_decomposition, CliqueDecomposition};
pub use genus::{
    classify, euler_lower_bound, genus_clique_union, genus_complete, Classification, GenusMethod,
    GenusResult,
};
pub use graph::{commuting_graph, components, CommutingGraph, Graph};
pub use io::{commuting_graph_to_dot, graph_to_dot, parse_adjacency_list, to_adjacency_list};
pub use oracle::{compute_genus, embedding_count, genus_oracle, DEFAULT_ORACLE_BUDGET};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("CommutativeRing: {0} is commutative, its commuting graph has no vertices")]
    CommutativeRing(String),
    #[error("NotCliqueUnion: some component is not a complete graph")]
    NotCliqueUnion,
    #[error("BudgetExceeded: {embeddings} rotation systems exceed the budget {budget}")]
    BudgetExceeded { embeddings: u128, budget: u128 },
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
    #[error("graph parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
