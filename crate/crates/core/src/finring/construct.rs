//! Concrete ring families.

use std::collections::HashMap;
use std::hash::Hash;

use super::{AdditiveGroup, Limits, RingError, RingTable};
use crate::arith::is_prime;

/// Builds a ring from an explicit element list and closures for the two
/// operations. Element `i` of `elements` becomes index `i`.
fn from_elements<T, A, M>(
    name: String,
    elements: Vec<T>,
    add: A,
    mul: M,
    limits: &Limits,
) -> Result<RingTable, RingError>
where
    T: Clone + Eq + Hash,
    A: Fn(&T, &T) -> T,
    M: Fn(&T, &T) -> T,
{
    let n = limits.check(elements.len() as u128)?;
    let index: HashMap<&T, u32> = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e, i as u32))
        .collect();
    let lookup = |t: T| -> Result<u32, RingError> {
        index.get(&t).copied().ok_or_else(|| {
            RingError::InvalidSpec(format!("{name}: operation leaves the element set"))
        })
    };
    let mut add_table = Vec::with_capacity(n * n);
    let mut mul_table = Vec::with_capacity(n * n);
    for x in &elements {
        for y in &elements {
            add_table.push(lookup(add(x, y))?);
            mul_table.push(lookup(mul(x, y))?);
        }
    }
    RingTable::from_tables(name, n, add_table, mul_table, limits)
}

fn require_prime(p: u64) -> Result<(), RingError> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(RingError::NotPrime(p))
    }
}

fn pow_order(p: u64, e: u32, limits: &Limits) -> Result<usize, RingError> {
    let order = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
    limits.check(order)
}

/// Every tuple of `len` residues mod `p`, lexicographic (first coordinate
/// most significant).
fn tuples(p: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..p).map(move |a| {
                    let mut t = t.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}

/// The ring with the given additive group and all products zero.
pub fn zero_ring(additive: &AdditiveGroup, limits: &Limits) -> Result<RingTable, RingError> {
    let n = limits.check(additive.order() as u128)?;
    let mut add = Vec::with_capacity(n * n);
    for x in 0..n {
        let a = additive.decode(x);
        for y in 0..n {
            let b = additive.decode(y);
            let sum: Vec<u64> = a.iter().zip(&b).map(|(u, v)| u + v).collect();
            add.push(additive.encode(&sum) as u32);
        }
    }
    RingTable::from_tables(format!("0[{additive}]"), n, add, vec![0; n * n], limits)
}

/// `Z/nZ` with its usual multiplication.
pub fn integers_mod(n: u64, limits: &Limits) -> Result<RingTable, RingError> {
    if n == 0 {
        return Err(RingError::InvalidSpec("Z_0 is infinite".into()));
    }
    limits.check(n as u128)?;
    from_elements(
        format!("Z{n}"),
        (0..n).collect(),
        |a, b| (a + b) % n,
        |a, b| (a * b) % n,
        limits,
    )
}

/// Full 2×2 matrix ring over `F_p`; elements `[a, b, c, d]` for
/// `[[a, b], [c, d]]`, in lexicographic order.
pub fn matrix_ring(p: u64, limits: &Limits) -> Result<RingTable, RingError> {
    require_prime(p)?;
    pow_order(p, 4, limits)?;
    from_elements(
        format!("M2(F{p})"),
        tuples(p, 4),
        |x, y| x.iter().zip(y).map(|(a, b)| (a + b) % p).collect(),
        |x, y| {
            vec![
                (x[0] * y[0] + x[1] * y[2]) % p,
                (x[0] * y[1] + x[1] * y[3]) % p,
                (x[2] * y[0] + x[3] * y[2]) % p,
                (x[2] * y[1] + x[3] * y[3]) % p,
            ]
        },
        limits,
    )
}

/// Upper-triangular 2×2 matrices over `F_p`; elements `[a, b, d]` for
/// `[[a, b], [0, d]]`.
pub fn upper_triangular_ring(p: u64, limits: &Limits) -> Result<RingTable, RingError> {
    require_prime(p)?;
    pow_order(p, 3, limits)?;
    from_elements(
        format!("T2(F{p})"),
        tuples(p, 3),
        |x, y| x.iter().zip(y).map(|(a, b)| (a + b) % p).collect(),
        |x, y| {
            vec![
                (x[0] * y[0]) % p,
                (x[0] * y[1] + x[1] * y[2]) % p,
                (x[2] * y[2]) % p,
            ]
        },
        limits,
    )
}

/// Pairs over `F_p` with `(a, b)(c, d) = (ac, ad)`: order `p²`, trivial
/// center, no unity. Index of `(a, b)` is `a·p + b`, matching the
/// mixed-radix encoding on `Z_p × Z_p`.
pub fn row_ring(p: u64, limits: &Limits) -> Result<RingTable, RingError> {
    require_prime(p)?;
    pow_order(p, 2, limits)?;
    from_elements(
        format!("Row(F{p})"),
        tuples(p, 2),
        |x, y| vec![(x[0] + y[0]) % p, (x[1] + y[1]) % p],
        |x, y| vec![(x[0] * y[0]) % p, (x[0] * y[1]) % p],
        limits,
    )
}

/// `R × S` with componentwise operations. `(r, s)` has index `r·|S| + s`.
pub fn direct_product(
    r: &RingTable,
    s: &RingTable,
    limits: &Limits,
) -> Result<RingTable, RingError> {
    let n = limits.check(r.order() as u128 * s.order() as u128)?;
    let m = s.order();
    let split = |i: usize| (r.element(i / m).unwrap(), s.element(i % m).unwrap());
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (r1, s1) = split(x);
        for y in 0..n {
            let (r2, s2) = split(y);
            add.push((r.add(r1, r2).index() * m + s.add(s1, s2).index()) as u32);
            mul.push((r.mul(r1, r2).index() * m + s.mul(s1, s2).index()) as u32);
        }
    }
    RingTable::from_tables(format!("{}x{}", r.name(), s.name()), n, add, mul, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::Element;

    fn lim() -> Limits {
        Limits::default()
    }

    /// Brute-force center scan straight off the tables.
    fn brute_center_size(r: &RingTable) -> usize {
        r.elements()
            .filter(|&z| r.elements().all(|x| r.mul(z, x) == r.mul(x, z)))
            .count()
    }

    #[test]
    fn matrix_rings() {
        let m2 = matrix_ring(2, &lim()).unwrap();
        assert_eq!(m2.order(), 16);
        // identity [1,0,0,1] -> 8 + 1
        assert_eq!(m2.unity(), Some(Element(9)));
        assert_eq!(m2.center(), &[Element(0), Element(9)]);
        assert_eq!(brute_center_size(&m2), 2);

        let m3 = matrix_ring(3, &lim()).unwrap();
        assert_eq!(m3.order(), 81);
        assert_eq!(brute_center_size(&m3), 3);
        assert!(m3.unity().is_some());
    }

    #[test]
    fn upper_triangular_rings() {
        let t2 = upper_triangular_ring(2, &lim()).unwrap();
        assert_eq!(t2.order(), 8);
        assert_eq!(brute_center_size(&t2), 2);
        assert!(t2.unity().is_some());
        let t3 = upper_triangular_ring(3, &lim()).unwrap();
        assert_eq!(t3.order(), 27);
        assert_eq!(brute_center_size(&t3), 3);
    }

    #[test]
    fn centralizer_of_strictly_upper_unit() {
        let t2 = upper_triangular_ring(2, &lim()).unwrap();
        // E12 = [a=0, b=1, d=0] -> index 2; aI + bE12 = [a, b, a]
        let c = t2.centralizer(Element(2)).unwrap();
        assert_eq!(c, vec![Element(0), Element(2), Element(5), Element(7)]);
    }

    #[test]
    fn centralizer_of_diagonal_idempotent() {
        let t2 = upper_triangular_ring(2, &lim()).unwrap();
        // diag(1,0) = [1,0,0] -> index 4; diagonal matrices are [a,0,d]
        let c = t2.centralizer(Element(4)).unwrap();
        assert_eq!(c, vec![Element(0), Element(1), Element(4), Element(5)]);
    }

    #[test]
    fn row_rings_have_trivial_center() {
        for p in [2, 3] {
            let r = row_ring(p, &lim()).unwrap();
            assert_eq!(r.order() as u64, p * p);
            assert_eq!(r.center(), &[Element(0)]);
            assert_eq!(r.unity(), None);
        }
        let r = row_ring(2, &lim()).unwrap();
        // (1,0)=2, (0,1)=1
        assert_eq!(r.mul(Element(2), Element(1)), Element(1));
        assert_eq!(r.mul(Element(1), Element(2)), Element(0));
    }

    #[test]
    fn products() {
        let t2 = upper_triangular_ring(2, &lim()).unwrap();
        let z3 = integers_mod(3, &lim()).unwrap();
        let p = direct_product(&t2, &z3, &lim()).unwrap();
        assert_eq!(p.order(), 24);
        assert_eq!(brute_center_size(&p), 6);
        assert_eq!(p.center().len(), 6);

        let m2 = matrix_ring(2, &lim()).unwrap();
        let z2 = integers_mod(2, &lim()).unwrap();
        let q = direct_product(&m2, &z2, &lim()).unwrap();
        assert_eq!(q.order(), 32);
        assert_eq!(brute_center_size(&q), 4);
        assert!(q.unity().is_some());

        let g = AdditiveGroup::cyclic(2).unwrap();
        let zr = zero_ring(&g, &lim()).unwrap();
        let zz = direct_product(&zr, &zr, &lim()).unwrap();
        assert!(zz.is_commutative());
        assert_eq!(zz.unity(), None);
        let mixed = direct_product(&m2, &zr, &lim()).unwrap();
        assert_eq!(mixed.unity(), None);
    }

    #[test]
    fn limits_and_primes() {
        assert_eq!(matrix_ring(4, &lim()).unwrap_err(), RingError::NotPrime(4));
        assert!(matches!(
            matrix_ring(5, &lim()),
            Err(RingError::SizeLimitExceeded { order: 625, .. })
        ));
        let small = Limits { max_order: 16 };
        assert!(matches!(
            matrix_ring(3, &small),
            Err(RingError::SizeLimitExceeded {
                order: 81,
                limit: 16
            })
        ));
    }

    #[test]
    fn corrupted_matrix_table_is_not_associative() {
        let m2 = matrix_ring(2, &lim()).unwrap();
        let mut mul = m2.mul_table().to_vec();
        let add = m2.add_table().to_vec();
        // I*I := 0, so (I*I)*E11 = 0 while I*(I*E11) = E11
        mul[9 * 16 + 9] = 0;
        let report = crate::finring::validate_tables(16, &add, &mul);
        assert!(!report.associativity.passed());
        let err = RingTable::from_tables("bad", 16, add, mul, &lim()).unwrap_err();
        assert!(matches!(err, RingError::NotAssociative { .. }));
    }
}
