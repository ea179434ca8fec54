//! Exact polynomials over the rationals, stored lowest-degree first.

use std::fmt;

use crate::matrix::{LinalgError, LinearMap};
use crate::scalar::Scalar;

/// Coefficient list with the constant term first. The leading (last)
/// coefficient is nonzero unless the polynomial is zero, in which case the
/// list is empty.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Polynomial {
        Polynomial { coeffs: vec![Scalar::ONE] }
    }

    /// Builds from coefficients (lowest first), trimming any trailing
    /// zeros.
    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Polynomial {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// `λ^m − 1`: the characteristic polynomial of a single `m`-cycle.
    pub fn cycle(m: usize) -> Polynomial {
        assert!(m > 0);
        let mut coeffs = vec![Scalar::ZERO; m + 1];
        coeffs[0] = -Scalar::ONE;
        coeffs[m] = Scalar::ONE;
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().copied().unwrap_or(Scalar::ZERO)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    /// Scales so the leading coefficient is 1. The zero polynomial is
    /// returned unchanged.
    pub fn monic(&self) -> Polynomial {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.leading().recip();
        Polynomial { coeffs: self.coeffs.iter().map(|&c| c * inv).collect() }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Scalar::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        Polynomial::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![Scalar::ZERO; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        Polynomial::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![Scalar::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// Exact Euclidean division; panics when dividing by zero.
    pub fn divrem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let d = divisor.coeffs.len();
        if self.coeffs.len() < d {
            return (Polynomial::zero(), self.clone());
        }
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::ZERO; self.coeffs.len() - d + 1];
        for top in (d - 1..rem.len()).rev() {
            let factor = rem[top] * lead_inv;
            if factor.is_zero() {
                continue;
            }
            let shift = top + 1 - d;
            quot[shift] = factor;
            for (k, &dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] -= factor * dc;
            }
        }
        (Polynomial::from_coeffs(quot), Polynomial::from_coeffs(rem))
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let g = self.gcd(other);
        let (q, r) = self.mul(other).divrem(&g);
        debug_assert!(r.is_zero());
        q.monic()
    }

    pub fn eval(&self, x: Scalar) -> Scalar {
        let mut acc = Scalar::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Evaluates `p(A)·v` by Horner's rule using only matrix-vector
    /// products.
    pub fn eval_apply(
        &self,
        a: &LinearMap,
        v: &crate::element::AlgebraElement,
    ) -> Result<crate::element::AlgebraElement, LinalgError> {
        let mut acc = crate::element::AlgebraElement::zero(v.space().clone());
        for &c in self.coeffs.iter().rev() {
            acc = a.apply(&acc)?;
            acc = acc.add(&v.scale(c));
        }
        Ok(acc)
    }

    /// Evaluates `p(A)` as a matrix (Horner's rule with compositions).
    pub fn eval_map(&self, a: &LinearMap) -> Result<LinearMap, LinalgError> {
        let id = LinearMap::identity(a.domain().clone());
        let mut acc = LinearMap::zero(a.domain().clone(), a.domain().clone());
        for &c in self.coeffs.iter().rev() {
            acc = a.compose(&acc)?;
            acc = acc.add(&id.scale(c))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match deg {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "λ")?,
                1 => write!(f, "{c}·λ")?,
                _ if c.is_one() => write!(f, "λ^{deg}")?,
                _ => write!(f, "{c}·λ^{deg}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(cs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(cs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(ints(&[1, 2, 0, 0]), ints(&[1, 2]));
        assert!(ints(&[0, 0]).is_zero());
        assert_eq!(ints(&[0]).degree(), None);
    }

    #[test]
    fn division_with_remainder_reconstructs() {
        let p = ints(&[-1, 0, 0, 0, 0, 0, 1]); // λ⁶ − 1
        let d = ints(&[-1, 1]); // λ − 1
        let (q, r) = p.divrem(&d);
        assert!(r.is_zero());
        assert_eq!(q.mul(&d), p);
        assert_eq!(q, ints(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn gcd_and_lcm_of_cycle_polynomials() {
        let p2 = Polynomial::cycle(2);
        let p3 = Polynomial::cycle(3);
        assert_eq!(p2.gcd(&p3), ints(&[-1, 1]));
        // lcm(λ²−1, λ³−1) = (λ²−1)(λ³−1)/(λ−1), degree 4.
        let l = p2.lcm(&p3);
        assert_eq!(l.degree(), Some(4));
        let (_, r) = l.divrem(&p2);
        assert!(r.is_zero());
        let (_, r) = l.divrem(&p3);
        assert!(r.is_zero());
        assert!(l.is_monic());
    }

    #[test]
    fn evaluation_agrees_with_direct_substitution() {
        let p = ints(&[3, -2, 1]); // λ² − 2λ + 3
        assert_eq!(p.eval(Scalar::from_int(5)), Scalar::from_int(18));
        assert_eq!(p.eval(Scalar::new(1, 2)), Scalar::new(9, 4));
    }
}
