use serde::{Deserialize, Serialize};

use super::{FieldElement, FieldSpec};

/// Univariate polynomial over a finite field, coefficients low degree
/// first with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn from_coefficients(mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coefficients(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, field: &FieldSpec, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = field.zero();
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                field.add(a, b)
            })
            .collect();
        Poly::from_coefficients(coeffs)
    }

    pub fn mul(&self, field: &FieldSpec, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(&out[i + j], &field.mul(a, b));
            }
        }
        Poly::from_coefficients(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    #[test]
    fn trims_and_multiplies() {
        let f = make_field(13, 1).unwrap();
        let c = |v| f.from_int(v);
        let p = Poly::from_coefficients(vec![c(3), c(2), c(0)]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Poly::from_coefficients(vec![c(0)]), Poly::zero());
        let q = Poly::from_coefficients(vec![c(1), c(1)]);
        let prod = p.mul(&f, &q);
        assert_eq!(prod, Poly::from_coefficients(vec![c(3), c(5), c(2)]));
        for x in 0..13 {
            let lhs = f.poly_eval(&prod, &c(x));
            let rhs = f.mul(&f.poly_eval(&p, &c(x)), &f.poly_eval(&q, &c(x)));
            assert_eq!(lhs, rhs);
        }
        assert_eq!(p.add(&f, &p.mul(&f, &Poly::from_coefficients(vec![c(12)]))), Poly::zero());
    }
}
