//! Genus predictions for commuting graphs of non-commutative rings of order
//! p⁴, p⁵, p²q and p³q.
//!
//! Each [`CaseId`] names one family of rings by order and center size. For
//! those families the commuting graph is known to be a disjoint union of
//! complete graphs from a short list of templates; [`predict`] expands the
//! templates for concrete primes and evaluates the genus of each outcome.

mod case;
mod closed_form;
mod diophantine;
mod predict;

pub use case::{CaseId, TheoremCase};
pub use closed_form::{stated_genus, stated_lower_bound};
pub use diophantine::{enumerate_l, solve_positive, LSolutions};
pub use predict::{predict, t_candidates, toroidality_condition, Outcome, Prediction};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TheoremError {
    #[error("unknown theorem case {0:?}")]
    UnknownCase(String),
    #[error("HypothesisViolated: {0}")]
    HypothesisViolated(String),
    #[error("missing parameter {param} for case {case}")]
    MissingParameter { case: CaseId, param: &'static str },
    #[error("case {case} takes no parameter {param}")]
    UnexpectedParameter { case: CaseId, param: &'static str },
    #[error("NoSolutions: {0}")]
    NoSolutions(String),
    #[error("case {0} has no l-parameterization")]
    NotLParameterized(CaseId),
    #[error("NotFullyParameterized: case {0} permits outcomes of different genus")]
    NotFullyParameterized(CaseId),
}
