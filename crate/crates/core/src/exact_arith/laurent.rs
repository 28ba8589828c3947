use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{render_terms, IntPoly};
use super::{Coeff, DomainOps, Scalar};

/// Laurent polynomial `Σ coeffs[i]·v^(low+i)` over ℤ.
///
/// The first and last stored coefficients are nonzero; the zero element has
/// no coefficients and `low == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentInt {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentInt {
    pub fn new(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut l = LaurentInt { low, coeffs };
        l.normalize();
        l
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn zero() -> Self {
        LaurentInt { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        LaurentInt::new(0, vec![c])
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }

    /// `c·v^k`.
    pub fn monomial(c: BigInt, k: i64) -> Self {
        LaurentInt::new(k, vec![c])
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(LaurentInt::zero(), |acc, &(k, c)| acc.add(&LaurentInt::monomial(BigInt::from(c), k)))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero element).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        let i = k - self.low;
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Nonzero terms as (exponent, coefficient), ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().max(rhs.high());
        LaurentInt::new(low, (low..=high).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentInt { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return LaurentInt::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentInt::new(self.low + rhs.low, out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        LaurentInt::new(self.low, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(LaurentInt::one(), |acc, _| acc.mul(self))
    }

    /// Bar involution `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return LaurentInt::zero();
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        LaurentInt::new(-self.high(), c)
    }

    /// Value at `v = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at a nonzero rational `v`.
    pub fn eval_rat(&self, v: &BigRational) -> BigRational {
        assert!(!v.is_zero(), "Laurent polynomial evaluated at zero");
        let mut acc = BigRational::zero();
        for (k, c) in self.terms() {
            let p =
                if k >= 0 { num_traits::pow(v.clone(), k as usize) } else { num_traits::pow(v.recip(), (-k) as usize) };
            acc += p * BigRational::from_integer(c.clone());
        }
        acc
    }

    /// `self = v^low · poly(v)`.
    pub fn to_shifted_poly(&self) -> (i64, IntPoly) {
        (self.low, IntPoly::new(self.coeffs.clone()))
    }

    /// Exact quotient in ℤ[v, v⁻¹]; `None` if `d` does not divide `self`.
    pub fn checked_div(&self, d: &LaurentInt) -> Option<LaurentInt> {
        assert!(!d.is_zero(), "Laurent division by zero");
        if self.is_zero() {
            return Some(LaurentInt::zero());
        }
        let (la, pa) = self.to_shifted_poly();
        let (ld, pd) = d.to_shifted_poly();
        let q = pa.checked_div(&pd)?;
        Some(LaurentInt::new(la - ld, q.into_coeffs()))
    }

    /// Invariant under `v ↦ v⁻¹`.
    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Render in `v`, highest exponent first (`v^2+2+v^-2`).
    pub fn render(&self) -> String {
        let terms: Vec<_> = self.terms().collect();
        render_terms(
            terms.into_iter().rev().map(|(k, c)| (c.is_negative(), c.abs().to_string(), c.abs().is_one(), k)),
            "v",
        )
    }
}

impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Scalar for LaurentInt {
    fn is_zero_s(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn zero_like(&self) -> Self {
        LaurentInt::zero()
    }
    fn one_like(&self) -> Self {
        LaurentInt::one()
    }
}

impl Coeff for LaurentInt {
    fn zero_c() -> Self {
        LaurentInt::zero()
    }
    fn one_c() -> Self {
        LaurentInt::one()
    }
    fn from_i64(v: i64) -> Self {
        LaurentInt::from_int(v)
    }
}

impl DomainOps for LaurentInt {
    fn div_exact(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("inexact Laurent division")
    }
}

/// Quantum integer `[a] = v^(a−1) + v^(a−3) + … + v^(1−a)`; `[0] = 0`.
pub fn quantum_int(a: u32) -> LaurentInt {
    if a == 0 {
        return LaurentInt::zero();
    }
    let a = a as i64;
    let mut coeffs = vec![BigInt::zero(); (2 * a - 1) as usize];
    for i in (0..coeffs.len()).step_by(2) {
        coeffs[i] = BigInt::one();
    }
    LaurentInt::new(1 - a, coeffs)
}

/// `[2]_i = v^i + v^(−i)`, so `[2]_0 = 2` and `[2]_1 = [2]`.
pub fn bracket2(i: u32) -> LaurentInt {
    let i = i as i64;
    LaurentInt::monomial(BigInt::one(), i).add(&LaurentInt::monomial(BigInt::one(), -i))
}
