//! Arithmetic over a prime field GF(q) and row spans of coefficient vectors.
//!
//! A broadcast is a length-`k` coefficient vector over GF(q); what a vertex
//! "knows" is the row span of the vectors it started with and has received.
//! [`SpanBasis`] maintains that span in reduced row-echelon form, which makes
//! rank queries O(1), membership tests O(k^2), and the representation
//! canonical (two equal subspaces produce identical rows).

use crate::error::{Error, Result};

/// A prime modulus with the field operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    q: u32,
}

impl PrimeField {
    pub fn new(q: u32) -> Result<Self> {
        if !is_prime(q) {
            return Err(Error::NonPrimeModulus { q });
        }
        Ok(PrimeField { q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        (a + b) % self.q
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        (a + self.q - b % self.q) % self.q
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.q as u64) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        (self.q - a % self.q) % self.q
    }

    /// Multiplicative inverse of `a != 0` via the extended Euclidean
    /// algorithm.
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.q), "zero has no inverse");
        let (mut r0, mut r1) = (self.q as i64, (a % self.q) as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let quot = r0 / r1;
            (r0, r1) = (r1, r0 - quot * r1);
            (t0, t1) = (t1, t0 - quot * t1);
        }
        debug_assert_eq!(r0, 1, "gcd(a, q) = 1 for prime q");
        t0.rem_euclid(self.q as i64) as u32
    }
}

pub fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= q as u64 {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Row span of coefficient vectors in GF(q)^k, kept in reduced row-echelon
/// form with rows ordered by pivot column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanBasis {
    field: PrimeField,
    k: usize,
    rows: Vec<Vec<u32>>,
}

impl SpanBasis {
    pub fn empty(field: PrimeField, k: usize) -> Self {
        SpanBasis {
            field,
            k,
            rows: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.k
    }

    /// Reduce `vec` against the basis; the result is zero iff `vec` lies in
    /// the span.
    fn residual(&self, vec: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut v: Vec<u32> = vec.iter().map(|&c| c % f.q()).collect();
        for row in &self.rows {
            let p = pivot(row).expect("basis rows are non-zero");
            if v[p] != 0 {
                let factor = v[p]; // row has a unit pivot
                for i in 0..self.k {
                    v[i] = f.sub(v[i], f.mul(factor, row[i]));
                }
            }
        }
        v
    }

    pub fn contains(&self, vec: &[u32]) -> bool {
        self.residual(vec).iter().all(|&c| c == 0)
    }

    /// True iff unit vector `e_j` lies in the span, i.e. packet `j` is
    /// decodable.
    pub fn can_decode(&self, j: usize) -> bool {
        let mut e = vec![0u32; self.k];
        e[j] = 1;
        self.contains(&e)
    }

    /// Insert a vector; returns true iff the rank grew.
    pub fn insert(&mut self, vec: &[u32]) -> bool {
        let f = self.field;
        let mut v = self.residual(vec);
        let Some(p) = pivot(&v) else {
            return false;
        };
        // normalize the pivot to 1
        let inv = f.inv(v[p]);
        for c in v.iter_mut() {
            *c = f.mul(*c, inv);
        }
        // back-eliminate to keep the reduced form canonical
        for row in &mut self.rows {
            if row[p] != 0 {
                let factor = row[p];
                for i in 0..self.k {
                    row[i] = f.sub(row[i], f.mul(factor, v[i]));
                }
            }
        }
        let pos = self
            .rows
            .iter()
            .position(|r| pivot(r).unwrap() > p)
            .unwrap_or(self.rows.len());
        self.rows.insert(pos, v);
        true
    }
}

fn pivot(row: &[u32]) -> Option<usize> {
    row.iter().position(|&c| c != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(13));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(9));
    }

    #[test]
    fn field_inverses() {
        for q in [2u32, 3, 5, 7, 11] {
            let f = PrimeField::new(q).unwrap();
            for a in 1..q {
                assert_eq!(f.mul(a, f.inv(a)), 1, "a = {a}, q = {q}");
            }
        }
        assert!(matches!(
            PrimeField::new(6),
            Err(Error::NonPrimeModulus { q: 6 })
        ));
    }

    #[test]
    fn span_maintains_reduced_echelon_form() {
        let f = PrimeField::new(5).unwrap();
        let mut b = SpanBasis::empty(f, 3);
        assert!(b.insert(&[2, 1, 0]));
        assert!(b.insert(&[0, 0, 3]));
        // dependent: 2*(2,1,0) + (0,0,3) scaled
        assert!(!b.insert(&[4, 2, 0]));
        assert_eq!(b.rank(), 2);
        // rows are unit-pivot and mutually reduced
        assert_eq!(b.rows(), &[vec![1, 3, 0], vec![0, 0, 1]]);
        assert!(b.contains(&[2, 1, 3]));
        assert!(!b.contains(&[0, 1, 0]));
        assert!(!b.can_decode(0));
        assert!(b.insert(&[0, 1, 0]));
        assert!(b.is_full());
        assert!(b.can_decode(0) && b.can_decode(1) && b.can_decode(2));
        // full basis reduces to the identity
        assert_eq!(b.rows(), &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn canonical_representation_is_order_independent() {
        let f = PrimeField::new(2).unwrap();
        let mut a = SpanBasis::empty(f, 3);
        a.insert(&[1, 1, 0]);
        a.insert(&[0, 1, 1]);
        let mut b = SpanBasis::empty(f, 3);
        b.insert(&[1, 0, 1]);
        b.insert(&[1, 1, 0]);
        assert_eq!(a.rows(), b.rows(), "same subspace, same reduced rows");
    }
}
