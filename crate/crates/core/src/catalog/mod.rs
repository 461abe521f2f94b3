//! Concrete witness rings and the harness that checks them.
//!
//! Each [`CatalogEntry`] names a ring by a construction [`Recipe`], the
//! theorem case it instantiates, and the decomposition and genus it is
//! expected to have. [`verify_entry`] rebuilds the ring from scratch and
//! compares every computed quantity against both the expectation and the
//! case's prediction. [`search_witnesses`] hunts for rings that no recipe
//! provides.

mod entries;
mod search;
mod verify;

pub use entries::{builtin_entries, find_entry, CatalogEntry, Expected, Recipe};
pub use search::{applicable_cases, search_witnesses, GroupSearch, Witness, WitnessSearch};
pub use verify::{
    center_is_field, verify_all, verify_entry, EntryReport, HypothesisCheck, VerificationReport,
};

use thiserror::Error;

use crate::cgraph::GraphError;
use crate::finring::RingError;
use crate::theorems::TheoremError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("ConstructionFailed: {name}: {source}")]
    ConstructionFailed { name: String, source: RingError },
    #[error("HypothesisMismatch: {name}: {detail}")]
    HypothesisMismatch { name: String, detail: String },
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Theorem(#[from] TheoremError),
}
