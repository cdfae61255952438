//! Finite fields `GF(p^m)` in polynomial basis, univariate polynomials over
//! them, and the small amount of linear algebra the scheme verifiers need.

mod fp_poly;
mod poly;

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactmath::is_prime;
use fp_poly::FpPoly;

pub use poly::Poly;

/// Largest characteristic accepted by [`make_field`].
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field GF({p}^{m}) is too large for this implementation")]
    TooLarge { p: u64, m: usize },
    #[error("no monic irreducible polynomial of degree {m} over GF({p})")]
    NoIrreducibleFound { p: u64, m: usize },
    #[error("modulus {0:?} is not a monic irreducible of the stated degree")]
    BadModulus(Vec<u64>),
    #[error("division by zero")]
    DivisionByZero,
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(FieldElement),
    #[error("{0:?} is not an element of this field")]
    ForeignElement(Vec<u64>),
}

/// `GF(p^m) = GF(p)[x] / (modulus)`.
///
/// The modulus is the first monic irreducible of degree `m` when the
/// coefficient lists (low degree first) are compared lexicographically; for
/// `m = 1` it is `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawFieldSpec")]
pub struct FieldSpec {
    p: u64,
    m: usize,
    modulus: Vec<u64>,
}

#[derive(Deserialize)]
struct RawFieldSpec {
    p: u64,
    m: usize,
    modulus: Vec<u64>,
}

impl TryFrom<RawFieldSpec> for FieldSpec {
    type Error = FieldError;

    fn try_from(raw: RawFieldSpec) -> Result<Self, FieldError> {
        let spec = make_field(raw.p, raw.m)?;
        if spec.modulus != raw.modulus {
            return Err(FieldError::BadModulus(raw.modulus));
        }
        Ok(spec)
    }
}

/// Element of `GF(p^m)`: `m` coefficients in `0..p`, low degree first.
///
/// The derived ordering is the canonical element order used for point
/// assignment.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(Vec<u64>);

impl FieldElement {
    pub fn coefficients(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Builds `GF(p^m)` deterministically.
pub fn make_field(p: u64, m: usize) -> Result<FieldSpec, FieldError> {
    if m == 0 {
        return Err(FieldError::ZeroDegree);
    }
    if p >= MAX_CHARACTERISTIC {
        return Err(FieldError::TooLarge { p, m });
    }
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if p.checked_pow(m as u32).is_none_or(|q| q > 1 << 62) {
        return Err(FieldError::TooLarge { p, m });
    }
    if m == 1 {
        return Ok(FieldSpec { p, m, modulus: vec![0, 1] });
    }
    let count = p.pow(m as u32);
    for idx in 0..count {
        let mut candidate = digits_low_first(idx, p, m);
        if candidate[0] == 0 {
            continue; // divisible by x
        }
        candidate.push(1);
        if fp_poly::is_irreducible(&candidate, p) {
            return Ok(FieldSpec { p, m, modulus: candidate });
        }
    }
    Err(FieldError::NoIrreducibleFound { p, m })
}

/// Base-`p` digits of `idx` with the most significant digit first, read as
/// coefficients `c_0, c_1, ...`. Enumerating `idx = 0, 1, ...` walks the
/// coefficient lists in lexicographic order.
fn digits_low_first(mut idx: u64, p: u64, m: usize) -> Vec<u64> {
    let mut out = vec![0u64; m];
    for slot in out.iter_mut().rev() {
        *slot = idx % p;
        idx /= p;
    }
    out
}

impl FieldSpec {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Number of elements `q = p^m`.
    pub fn order(&self) -> u64 {
        self.p.pow(self.m as u32)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(vec![0; self.m])
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Image of an integer under `Z -> GF(p) -> GF(p^m)`.
    pub fn from_int(&self, v: i64) -> FieldElement {
        let mut c = vec![0; self.m];
        c[0] = v.rem_euclid(self.p as i64) as u64;
        FieldElement(c)
    }

    /// Validates a coefficient list (low degree first, length `m`).
    pub fn element(&self, coefficients: Vec<u64>) -> Result<FieldElement, FieldError> {
        if coefficients.len() != self.m || coefficients.iter().any(|&c| c >= self.p) {
            return Err(FieldError::ForeignElement(coefficients));
        }
        Ok(FieldElement(coefficients))
    }

    pub fn contains(&self, a: &FieldElement) -> bool {
        a.0.len() == self.m && a.0.iter().all(|&c| c < self.p)
    }

    /// The `idx`-th element in canonical order.
    pub fn element_at(&self, idx: u64) -> FieldElement {
        assert!(idx < self.order(), "element index out of range");
        FieldElement(digits_low_first(idx, self.p, self.m))
    }

    /// Position of `a` in canonical order.
    pub fn index_of(&self, a: &FieldElement) -> u64 {
        a.0.iter().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(|i| self.element_at(i))
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElement {
        FieldElement((0..self.m).map(|_| rng.random_range(0..self.p)).collect())
    }

    fn to_poly(&self, a: &FieldElement) -> FpPoly {
        let mut v = a.0.clone();
        fp_poly::trim(&mut v);
        v
    }

    fn wrap_poly(&self, mut v: FpPoly) -> FieldElement {
        v.resize(self.m, 0);
        FieldElement(v)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement(a.0.iter().zip(&b.0).map(|(&x, &y)| (x + y) % self.p).collect())
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement(a.0.iter().zip(&b.0).map(|(&x, &y)| (x + self.p - y) % self.p).collect())
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement(a.0.iter().map(|&x| (self.p - x) % self.p).collect())
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        if self.m == 1 {
            return FieldElement(vec![fp_poly::mul_mod(a.0[0], b.0[0], self.p)]);
        }
        let prod = fp_poly::mulmod(&self.to_poly(a), &self.to_poly(b), &self.modulus, self.p);
        self.wrap_poly(prod)
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        if self.m == 1 {
            return Ok(FieldElement(vec![fp_poly::inv_mod(a.0[0], self.p)]));
        }
        fp_poly::inv_poly_mod(&self.to_poly(a), &self.modulus, self.p)
            .map(|v| self.wrap_poly(v))
            .ok_or(FieldError::DivisionByZero)
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u64) -> FieldElement {
        let mut acc = self.one();
        let mut base = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    /// Horner evaluation of `f` at `a`.
    pub fn poly_eval(&self, f: &Poly, a: &FieldElement) -> FieldElement {
        f.coefficients().iter().rev().fold(self.zero(), |acc, c| self.add(&self.mul(&acc, a), c))
    }

    /// The unique polynomial of degree `< points.len()` through `points`.
    pub fn poly_interpolate(&self, points: &[(FieldElement, FieldElement)]) -> Result<Poly, FieldError> {
        for (i, (xi, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(xj, _)| xj == xi) {
                return Err(FieldError::DuplicateAbscissa(xi.clone()));
            }
        }
        if points.is_empty() {
            return Ok(Poly::zero());
        }
        // master(x) = prod (x - x_j), coefficients low degree first
        let mut master = vec![self.one()];
        for (xj, _) in points {
            let mut next = vec![self.zero(); master.len() + 1];
            for (k, c) in master.iter().enumerate() {
                next[k + 1] = self.add(&next[k + 1], c);
                next[k] = self.sub(&next[k], &self.mul(c, xj));
            }
            master = next;
        }
        let n = points.len();
        let mut acc = vec![self.zero(); n];
        for (xi, yi) in points {
            // basis = master / (x - xi) by synthetic division
            let mut basis = vec![self.zero(); n];
            let mut carry = self.zero();
            for k in (0..n).rev() {
                carry = self.add(&master[k + 1], &self.mul(&carry, xi));
                basis[k] = carry.clone();
            }
            let weight = basis.iter().rev().fold(self.zero(), |a, c| self.add(&self.mul(&a, xi), c));
            let factor = self.div(yi, &weight)?;
            for (slot, b) in acc.iter_mut().zip(&basis) {
                *slot = self.add(slot, &self.mul(b, &factor));
            }
        }
        Ok(Poly::from_coefficients(acc))
    }

    /// Rank of a matrix given as rows, by Gaussian elimination.
    pub fn rank(&self, rows: &[Vec<FieldElement>]) -> usize {
        let mut mat: Vec<Vec<FieldElement>> = rows.to_vec();
        let cols = mat.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..cols {
            let Some(pivot) = (rank..mat.len()).find(|&r| !mat[r][col].is_zero()) else {
                continue;
            };
            mat.swap(rank, pivot);
            let inv = self.inv(&mat[rank][col]).expect("pivot is nonzero");
            let pivot_row: Vec<FieldElement> = mat[rank].iter().map(|v| self.mul(v, &inv)).collect();
            for (r, row) in mat.iter_mut().enumerate() {
                if r != rank && !row[col].is_zero() {
                    let factor = row[col].clone();
                    for (v, pv) in row.iter_mut().zip(&pivot_row) {
                        *v = self.sub(v, &self.mul(&factor, pv));
                    }
                }
            }
            mat[rank] = pivot_row;
            rank += 1;
            if rank == mat.len() {
                break;
            }
        }
        rank
    }

    /// Row `(1, a, a^2, ..., a^degree)` of an evaluation matrix.
    pub fn powers(&self, a: &FieldElement, degree: usize) -> Vec<FieldElement> {
        let mut row = Vec::with_capacity(degree + 1);
        let mut acc = self.one();
        for _ in 0..=degree {
            row.push(acc.clone());
            acc = self.mul(&acc, a);
        }
        row
    }
}
