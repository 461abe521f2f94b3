//! Finite rings as explicit operation tables.
//!
//! Every ring is stored as two `N × N` tables of element indices. Elements
//! of a ring built over an [`AdditiveGroup`] are encoded mixed-radix over the
//! invariant factors, coordinate 0 most significant, so generator `i` is the
//! unit vector in coordinate `i`.

mod additive;
mod construct;
mod enumerate;
mod spec;
mod table;
mod validate;

pub use additive::AdditiveGroup;
pub use construct::{
    direct_product, integers_mod, matrix_ring, row_ring, upper_triangular_ring, zero_ring,
};
pub use enumerate::{
    candidate_count, enumerate_rings, EnumerationStats, RingEnumeration, RingFilter,
    DEFAULT_ENUMERATION_BUDGET,
};
pub use spec::{build_from_spec, spec_tables, Multiplication, RingSpec};
pub use table::{Element, RingTable};
pub use validate::{validate, validate_tables, AxiomCheck, ValidationReport};

use thiserror::Error;

/// Default cap on ring order for construction and exhaustive axiom checks.
pub const DEFAULT_MAX_ORDER: usize = 256;

/// Size limits applied when constructing rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl Limits {
    pub(crate) fn check(&self, order: u128) -> Result<usize, RingError> {
        if order > self.max_order as u128 {
            return Err(RingError::SizeLimitExceeded {
                order,
                limit: self.max_order,
            });
        }
        Ok(order as usize)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("invalid additive group: {0}")]
    InvalidAdditiveGroup(String),
    #[error("invalid ring spec: {0}")]
    InvalidSpec(String),
    #[error(
        "NotWellDefined: product of generators {i} and {j} is not killed by both generator orders"
    )]
    NotWellDefined { i: usize, j: usize },
    #[error("NotAbelianGroup: {0}")]
    NotAbelianGroup(String),
    #[error("NotAssociative: (a*b)*c != a*(b*c) for (a, b, c) = ({a}, {b}, {c})")]
    NotAssociative { a: u32, b: u32, c: u32 },
    #[error("NotDistributive: {side} distributivity fails for ({a}, {b}, {c})")]
    NotDistributive {
        side: &'static str,
        a: u32,
        b: u32,
        c: u32,
    },
    #[error("SizeLimitExceeded: ring order {order} exceeds the limit {limit}")]
    SizeLimitExceeded { order: u128, limit: usize },
    #[error("BudgetExceeded: {candidates} candidate structure-constant tables exceed the budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },
    #[error("InvalidElement: index {index} is out of range for a ring of order {order}")]
    InvalidElement { index: usize, order: usize },
    #[error("NotPrime: {0} is not prime")]
    NotPrime(u64),
}

/// The center of `ring`, in ascending index order.
pub fn center(ring: &RingTable) -> &[Element] {
    ring.center()
}

/// The centralizer `{ y : xy = yx }` of `x` in `ring`.
pub fn centralizer(ring: &RingTable, x: Element) -> Result<Vec<Element>, RingError> {
    ring.centralizer(x)
}
