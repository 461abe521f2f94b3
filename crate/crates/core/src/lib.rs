//! Finite non-commutative rings, their commuting graphs, and the genus of
//! those graphs.
//!
//! The crate is split into four layers:
//!
//! * [`finring`] builds rings as explicit addition/multiplication tables,
//!   either from structure constants over a finite abelian group or from
//!   full tables, and enumerates all rings on a small additive group.
//! * [`cgraph`] builds the commuting graph on the non-central elements,
//!   splits it into complete components, and computes genus both from the
//!   complete-graph formula and from an exhaustive rotation-system search.
//! * [`theorems`] encodes the known genus results for rings of order
//!   p⁴, p⁵, p²q and p³q as predictions over their parameters.
//! * [`catalog`] holds concrete witness rings and the harness that checks
//!   computed results against predictions.

pub mod arith;
pub mod catalog;
pub mod cgraph;
pub mod finring;
pub mod theorems;

pub use catalog::{builtin_entries, search_witnesses, verify_entry, CatalogEntry, CatalogError};
pub use cgraph::{
    classify, clique_decomposition, commuting_graph, components, euler_lower_bound,
    genus_clique_union, genus_complete, genus_oracle, Classification, CliqueDecomposition,
    CommutingGraph, GenusMethod, GenusResult, Graph, GraphError,
};
pub use finring::{
    build_from_spec, center, centralizer, direct_product, enumerate_rings, matrix_ring, row_ring,
    upper_triangular_ring, validate, AdditiveGroup, Element, Limits, RingError, RingFilter,
    RingSpec, RingTable, ValidationReport,
};
pub use theorems::{
    enumerate_l, predict, t_candidates, toroidality_condition, CaseId, Outcome, Prediction,
    TheoremCase, TheoremError,
};
