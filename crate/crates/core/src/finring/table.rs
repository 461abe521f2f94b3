use std::fmt;

use serde::{Deserialize, Serialize};

use super::validate::{validate_tables, AxiomCheck};
use super::{Limits, RingError};

/// An element of a [`RingTable`], identified by its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(pub u32);

impl Element {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A validated finite ring stored as row-major operation tables.
///
/// Immutable once built. The zero, the unity (if any) and the center are
/// computed during construction.
#[derive(Clone, Debug)]
pub struct RingTable {
    name: String,
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    zero: Element,
    unity: Option<Element>,
    center: Vec<Element>,
    central: Vec<bool>,
}

impl RingTable {
    /// Validates `add`/`mul` exhaustively and builds the ring, failing on the
    /// first violated axiom.
    pub fn from_tables(
        name: impl Into<String>,
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        limits: &Limits,
    ) -> Result<Self, RingError> {
        limits.check(order as u128)?;
        if order == 0 {
            return Err(RingError::InvalidSpec(
                "a ring needs at least one element".into(),
            ));
        }
        let report = validate_tables(order, &add, &mul);
        if let AxiomCheck::Failed { witness } = &report.well_formed {
            return Err(RingError::InvalidSpec(if witness.is_empty() {
                format!("tables must be {order}x{order}")
            } else {
                format!("table entry {} out of range for order {order}", witness[0])
            }));
        }
        if let AxiomCheck::Failed { witness } = &report.abelian_group {
            return Err(RingError::NotAbelianGroup(if witness.is_empty() {
                "no additive identity".into()
            } else {
                format!("group law fails at {witness:?}")
            }));
        }
        let triple = |w: &[u32]| (w[0], w[1], w[2]);
        if let AxiomCheck::Failed { witness } = &report.associativity {
            let (a, b, c) = triple(witness);
            return Err(RingError::NotAssociative { a, b, c });
        }
        for (side, check) in [
            ("left", &report.left_distributivity),
            ("right", &report.right_distributivity),
        ] {
            if let AxiomCheck::Failed { witness } = check {
                let (a, b, c) = triple(witness);
                return Err(RingError::NotDistributive { side, a, b, c });
            }
        }
        let zero = report.zero.expect("abelian group check found a zero");
        Ok(Self::assemble(
            name.into(),
            order,
            add,
            mul,
            zero,
            report.unity,
        ))
    }

    fn assemble(
        name: String,
        order: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: Element,
        unity: Option<Element>,
    ) -> Self {
        let n = order;
        let central: Vec<bool> = (0..n)
            .map(|z| (0..n).all(|r| mul[z * n + r] == mul[r * n + z]))
            .collect();
        let center = (0..n)
            .filter(|&z| central[z])
            .map(|z| Element(z as u32))
            .collect();
        RingTable {
            name,
            order,
            add,
            mul,
            zero,
            unity,
            center,
            central,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.order as u32).map(Element)
    }

    pub fn element(&self, index: usize) -> Result<Element, RingError> {
        if index < self.order {
            Ok(Element(index as u32))
        } else {
            Err(RingError::InvalidElement {
                index,
                order: self.order,
            })
        }
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        Element(self.add[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element(self.mul[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn commute(&self, a: Element, b: Element) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn zero(&self) -> Element {
        self.zero
    }

    pub fn unity(&self) -> Option<Element> {
        self.unity
    }

    pub fn center(&self) -> &[Element] {
        &self.center
    }

    pub fn is_central(&self, x: Element) -> bool {
        self.central[x.index()]
    }

    pub fn is_commutative(&self) -> bool {
        self.center.len() == self.order
    }

    /// `{ y : xy = yx }` in ascending order.
    pub fn centralizer(&self, x: Element) -> Result<Vec<Element>, RingError> {
        self.element(x.index())?;
        Ok(self.elements().filter(|&y| self.commute(x, y)).collect())
    }

    pub fn add_table(&self) -> &[u32] {
        &self.add
    }

    pub fn mul_table(&self) -> &[u32] {
        &self.mul
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_zero_ring() -> RingTable {
        RingTable::from_tables("0[Z2]", 2, vec![0, 1, 1, 0], vec![0; 4], &Limits::default())
            .unwrap()
    }

    #[test]
    fn zero_ring_on_z2() {
        let r = z2_zero_ring();
        assert_eq!(r.order(), 2);
        assert_eq!(r.unity(), None);
        assert_eq!(r.center(), &[Element(0), Element(1)]);
        assert!(r.is_commutative());
    }

    #[test]
    fn centralizer_rejects_bad_index() {
        let r = z2_zero_ring();
        assert_eq!(
            r.centralizer(Element(2)),
            Err(RingError::InvalidElement { index: 2, order: 2 })
        );
        assert_eq!(r.centralizer(Element(1)).unwrap().len(), 2);
    }

    #[test]
    fn size_limit_applies_before_validation() {
        let limits = Limits { max_order: 1 };
        let err =
            RingTable::from_tables("x", 2, vec![0, 1, 1, 0], vec![0; 4], &limits).unwrap_err();
        assert!(matches!(
            err,
            RingError::SizeLimitExceeded { order: 2, limit: 1 }
        ));
    }
}
