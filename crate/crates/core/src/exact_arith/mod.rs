//! Exact coefficient arithmetic and exact linear algebra.
//!
//! Integers and rationals come from `num-bigint` / `num-rational`. Everything
//! built on top of them (dense polynomials, Laurent polynomials, small number
//! fields, fraction-free elimination, factorization over the rationals) lives
//! in the submodules.

mod factor;
mod fp;
mod laurent;
mod matrix;
mod number_field;
mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use factor::{factor_rational, rational_roots, FactorError, Factorization, MAX_FACTOR_DEGREE};
pub use fp::{rank_mod_p, rank_mod_p_rational, PrimeField};
pub use laurent::{bracket2, quantum_int, LaurentInt};
pub use matrix::{
    det_domain, integer_rows, matrix_det, matrix_rank, minimal_polynomial, nullspace, rank_domain, rank_field,
    rank_rational, ExactEntry, ExactMatrix, MatrixError,
};
pub use number_field::{NfElem, NumberField, NumberFieldError, MAX_FIELD_DEGREE};
pub use poly::{chebyshev_u, poly_gcd, IntPoly, Poly, RatPoly};

/// Arbitrary-precision integer.
pub type ArbInt = BigInt;
/// Reduced fraction with positive denominator.
pub type Rational = BigRational;

/// Minimal ring interface used by the generic elimination and polynomial code.
///
/// Methods take references so big values are never moved by accident.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn is_zero_s(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
}

/// A [`Scalar`] with a context-free zero and one, usable as a polynomial coefficient.
pub trait Coeff: Scalar {
    fn zero_c() -> Self;
    fn one_c() -> Self;
    fn from_i64(v: i64) -> Self;
}

/// Field operations.
pub trait FieldOps: Scalar {
    /// Multiplicative inverse. Panics on zero.
    fn inv_ref(&self) -> Self;
    fn div_ref(&self, rhs: &Self) -> Self {
        self.mul_ref(&rhs.inv_ref())
    }
}

/// Integral domains with exact division (quotient known to exist).
pub trait DomainOps: Scalar {
    fn div_exact(&self, rhs: &Self) -> Self;
}

impl Scalar for BigInt {
    fn is_zero_s(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
}

impl Coeff for BigInt {
    fn zero_c() -> Self {
        BigInt::zero()
    }
    fn one_c() -> Self {
        BigInt::one()
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
}

impl DomainOps for BigInt {
    fn div_exact(&self, rhs: &Self) -> Self {
        debug_assert!(Zero::is_zero(&(self % rhs)), "inexact integer division");
        self / rhs
    }
}

impl Scalar for BigRational {
    fn is_zero_s(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
}

impl Coeff for BigRational {
    fn zero_c() -> Self {
        BigRational::zero()
    }
    fn one_c() -> Self {
        BigRational::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl FieldOps for BigRational {
    fn inv_ref(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
}

/// Build a rational from numerator and denominator.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parse `num` or `num/den` (arbitrary precision, optional sign).
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if Zero::is_zero(&d) {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Render a rational as `n` or `n/d`.
pub fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests;
