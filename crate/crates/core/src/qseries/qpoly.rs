//! Dense polynomials in `q` with exact big-integer coefficients.
//!
//! `QPoly` is the universal univariate coefficient object of the crate: the
//! Gaussian polynomials, the length generating functions `f_n(q)`, and every
//! per-rank summand of the assembly live here.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// Polynomial in `q`, stored densely: `coeffs[d]` is the coefficient of `q^d`.
///
/// Invariant: the last stored coefficient is nonzero; the zero polynomial has
/// an empty coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::monomial(0, BigInt::one())
    }

    /// `c * q^degree`.
    pub fn monomial(degree: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        QPoly { coeffs }
    }

    /// Builds a polynomial from low-to-high coefficients, trimming zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Discards every coefficient of degree above `cap`.
    pub fn truncated(&self, cap: usize) -> Self {
        let take = self.coeffs.len().min(cap + 1);
        QPoly::from_coeffs(self.coeffs[..take].to_vec())
    }

    /// Multiplies by `q^k`.
    pub fn shifted(&self, k: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        QPoly { coeffs }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Schoolbook product truncated at degree `cap`.
    pub fn mul_trunc(&self, other: &QPoly, cap: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); cap + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > cap || a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > cap {
                    break;
                }
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }

    /// Multiplies by the geometric series `1/(1 - q^period)`, truncated at `cap`.
    pub fn geometric_mul_trunc(&self, period: usize, cap: usize) -> Self {
        assert!(period > 0, "geometric period must be positive");
        let mut coeffs = vec![BigInt::zero(); cap + 1];
        for (d, c) in self.coeffs.iter().enumerate() {
            if d > cap {
                break;
            }
            coeffs[d] += c;
        }
        for d in period..=cap {
            let prev = coeffs[d - period].clone();
            coeffs[d] += prev;
        }
        QPoly::from_coeffs(coeffs)
    }

    /// Exact division by `(1 - q^k)`; panics if the division leaves a remainder.
    pub fn div_exact_one_minus_qk(&self, k: usize) -> Self {
        assert!(k > 0);
        if self.is_zero() {
            return QPoly::zero();
        }
        let deg = self.coeffs.len() - 1;
        assert!(deg >= k, "divisor degree exceeds dividend");
        // p = r - q^k r, so r_d = p_d + r_{d-k}.
        let mut r = vec![BigInt::zero(); deg - k + 1];
        for d in 0..=deg {
            let mut v = self.coeffs[d].clone();
            if d >= k {
                v += &r[d - k];
            }
            if d <= deg - k {
                r[d] = v;
            } else {
                assert!(v.is_zero(), "inexact division by 1 - q^{k}");
            }
        }
        QPoly::from_coeffs(r)
    }

    /// Sum of all coefficients (the value at `q = 1`).
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.sign() != num_bigint::Sign::Minus)
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, other: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); len];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        for (d, c) in other.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, other: &QPoly) -> QPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = vec![BigInt::zero(); len];
        for (d, c) in self.coeffs.iter().enumerate() {
            coeffs[d] += c;
        }
        for (d, c) in other.coeffs.iter().enumerate() {
            coeffs[d] -= c;
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let cap = self.coeffs.len() + other.coeffs.len() - 2;
        self.mul_trunc(other, cap)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{d}")?,
            }
        }
        Ok(())
    }
}

/// The Gaussian polynomial (q-binomial coefficient).
///
/// Computed from the product formula with exact polynomial division; the
/// result has degree `k(n-k)`.  Returns zero when `k < 0` or `k > n`.
pub fn q_binomial(n: usize, k: i64) -> QPoly {
    if k < 0 || k as usize > n {
        return QPoly::zero();
    }
    let k = k as usize;
    let k = k.min(n - k);
    let mut num = QPoly::one();
    for i in 1..=k {
        // factor 1 - q^{n-k+i}
        let mut f = QPoly::monomial(n - k + i, -BigInt::one());
        f = &f + &QPoly::one();
        num = &num * &f;
    }
    let mut result = num;
    for i in 1..=k {
        result = result.div_exact_one_minus_qk(i);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn qp(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert!(QPoly::zero().is_zero());
        assert_eq!(QPoly::zero().degree(), None);
        assert_eq!(qp(&[0, 0, 0]), QPoly::zero());
    }

    #[test]
    fn q_binomial_edges() {
        assert_eq!(q_binomial(0, 0), QPoly::one());
        assert_eq!(q_binomial(4, 5), QPoly::zero());
        assert_eq!(q_binomial(4, -1), QPoly::zero());
        assert_eq!(q_binomial(2, 1), qp(&[1, 1]));
        assert_eq!(q_binomial(4, 2), qp(&[1, 1, 2, 1, 1]));
    }

    #[test]
    fn q_binomial_degree_is_k_times_n_minus_k() {
        for n in 0..=8usize {
            for k in 0..=n {
                let b = q_binomial(n, k as i64);
                assert_eq!(b.degree(), Some(k * (n - k)));
                assert!(b.has_nonnegative_coeffs());
            }
        }
    }

    #[test]
    fn product_and_exact_division_round_trip() {
        let a = qp(&[1, -2, 0, 5]);
        let f = qp(&[1, 0, 0, -1]); // 1 - q^3
        let p = &a * &f;
        assert_eq!(p.div_exact_one_minus_qk(3), a);
    }

    #[test]
    fn geometric_mul_matches_explicit_series() {
        // (1 - q) * 1/(1 - q) = 1 within the cap
        let p = qp(&[1, -1]).geometric_mul_trunc(1, 10);
        assert_eq!(p, QPoly::one());
        // q^2 / (1 - q^2) = q^2 + q^4 + ...
        let p = qp(&[0, 0, 1]).geometric_mul_trunc(2, 8);
        assert_eq!(p, qp(&[0, 0, 1, 0, 1, 0, 1, 0, 1]));
    }

    #[test]
    fn eval_one_is_binomial() {
        assert_eq!(q_binomial(6, 2).eval_one(), BigInt::from(15));
        assert_eq!(q_binomial(10, 5).eval_one(), BigInt::from(252));
    }
}
