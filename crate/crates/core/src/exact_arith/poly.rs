use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Coeff, DomainOps, FieldOps, Scalar};

/// Dense univariate polynomial, coefficients stored lowest degree first with
/// trailing zeros stripped.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Polynomial over the integers (the loop parameter δ, Chebyshev polynomials, ...).
pub type IntPoly = Poly<BigInt>;
/// Polynomial over the rationals.
pub type RatPoly = Poly<BigRational>;

impl<R: Coeff> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero_s()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(R::one_c())
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly::new(vec![R::zero_c(), R::one_c()])
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero_c(); k];
        v.push(c);
        Poly::new(v)
    }

    /// `x - a`.
    pub fn linear_root(a: R) -> Self {
        Poly::new(vec![a.neg_ref(), R::one_c()])
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Poly::new(cs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == R::one_c()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero_c)
    }

    pub fn leading(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero_c)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).add_ref(&rhs.coeff(i))).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i).sub_ref(&rhs.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        Poly::new(self.coeffs.iter().map(|c| c.neg_ref()).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero_c(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero_s() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![R::zero_c(); k];
        v.extend(self.coeffs.iter().cloned());
        Poly::new(v)
    }

    /// Horner evaluation at a value of the coefficient type.
    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero_c();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(at).add_ref(c);
        }
        acc
    }

    /// Horner evaluation in any ring that can absorb the coefficients.
    pub fn eval_in<S: Scalar>(&self, at: &S, embed: impl Fn(&R) -> S) -> S {
        let mut acc = at.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(at).add_ref(&embed(c));
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul_ref(&R::from_i64(i as i64))).collect())
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Poly::constant(c.clone()));
        }
        acc
    }
}

impl<R: Coeff + FieldOps> Poly<R> {
    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let lead_inv = d.leading().inv_ref();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![R::zero_c(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].mul_ref(&lead_inv);
            if !c.is_zero_s() {
                for (i, b) in d.coeffs.iter().enumerate() {
                    rem[k + i] = rem[k + i].sub_ref(&c.mul_ref(b));
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.leading().inv_ref();
        self.scale(&inv)
    }

    /// Monic greatest common divisor (zero only if both inputs vanish).
    pub fn gcd_field(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.leading().inv_ref();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }
}

impl<R: Coeff> Scalar for Poly<R> {
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
        Poly::zero()
    }
    fn one_like(&self) -> Self {
        Poly::one()
    }
}

impl IntPoly {
    /// Gcd of the coefficients, carrying the sign of the leading coefficient.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading().is_negative() {
            -g
        } else {
            g
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Exact division over ℤ; `None` when the quotient is not an integer polynomial.
    pub fn checked_div(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let (c, r) = rem[k + dd].div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (i, b) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &c * b;
                }
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }

    /// Pseudo-remainder `lc(d)^(deg a - deg d + 1) · a mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        assert!(!d.is_zero());
        let dd = d.coeffs.len() - 1;
        let lead = d.leading();
        let mut rem = self.clone();
        while let Some(dr) = rem.degree() {
            if dr < dd {
                break;
            }
            let c = rem.leading();
            rem = rem.scale(&lead).sub(&d.scale(&c).shift(dr - dd));
        }
        rem
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect())
    }

    /// Evaluate at a rational point.
    pub fn eval_rat(&self, at: &BigRational) -> BigRational {
        self.eval_in(at, |c| BigRational::from_integer(c.clone()))
    }

    /// Max absolute coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }

    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Render with the given variable name, highest degree first (`d^2+d-1`).
    pub fn render(&self, var: &str) -> String {
        render_terms(
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (c.is_negative(), c.abs().to_string(), c.abs().is_one(), k as i64)),
            var,
        )
    }

    /// Canonical ordering key for factors in a factored rendering.
    pub(crate) fn factor_order(&self, other: &IntPoly) -> Ordering {
        let m1 = BigRational::from_integer(BigInt::from(-1));
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.eval_rat(&m1).cmp(&other.eval_rat(&m1)))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl DomainOps for IntPoly {
    fn div_exact(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("inexact polynomial division")
    }
}

impl RatPoly {
    /// Clear denominators: returns the primitive integer polynomial with
    /// positive leading coefficient proportional to `self`.
    pub fn to_primitive_int(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        IntPoly::new(self.coeffs.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect())
            .primitive_part()
    }

    /// Integer polynomial when every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(IntPoly::new(self.coeffs.iter().map(|c| c.to_integer()).collect()))
        } else {
            None
        }
    }

    pub fn render(&self, var: &str) -> String {
        render_terms(
            self.coeffs.iter().enumerate().rev().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
                let a = c.abs();
                (c.is_negative(), super::fmt_rational(&a), a.is_one(), k as i64)
            }),
            var,
        )
    }
}

/// Shared term renderer: items are (negative, |coefficient| text, |c| == 1, exponent).
pub(crate) fn render_terms(terms: impl Iterator<Item = (bool, String, bool, i64)>, var: &str) -> String {
    let mut out = String::new();
    for (neg, mag, unit, k) in terms {
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if k == 0 {
            out.push_str(&mag);
        } else if unit {
            out.push_str(&mono);
        } else {
            out.push_str(&mag);
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("d"))
    }
}

/// Primitive greatest common divisor over ℤ with positive leading coefficient.
///
/// `gcd(p, 0)` is the primitive part of `p`; `gcd(0, 0)` is zero.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return b.primitive_part();
    }
    if b.is_zero() {
        return a.primitive_part();
    }
    let (mut x, mut y) = (a.primitive_part(), b.primitive_part());
    if x.degree() < y.degree() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_zero() {
        let r = x.pseudo_rem(&y);
        x = y;
        y = if r.is_zero() { r } else { r.primitive_part() };
    }
    x.primitive_part()
}

/// Chebyshev polynomial of the second kind: U₀ = 1, U₁ = X, U_k = X·U_{k−1} − U_{k−2}.
pub fn chebyshev_u(k: usize) -> IntPoly {
    let (mut prev, mut cur) = (IntPoly::one(), IntPoly::x());
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = IntPoly::x().mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}
