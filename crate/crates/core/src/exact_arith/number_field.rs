use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::factor::factor_rational;
use super::poly::{IntPoly, RatPoly};
use super::{FieldOps, Scalar};

/// Largest supported extension degree.
pub const MAX_FIELD_DEGREE: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumberFieldError {
    #[error("modulus must be monic of degree 1..={MAX_FIELD_DEGREE}, got {0}")]
    BadModulus(String),
    #[error("modulus {0} is reducible over the rationals")]
    Reducible(String),
}

/// `ℚ[t]/(f)` for a monic irreducible `f` of small degree.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct NumberField {
    modulus: IntPoly,
    modulus_rat: RatPoly,
}

impl NumberField {
    pub fn new(modulus: IntPoly) -> Result<Arc<Self>, NumberFieldError> {
        let deg = modulus.degree().unwrap_or(0);
        if deg == 0 || deg > MAX_FIELD_DEGREE || !modulus.leading().is_one() {
            return Err(NumberFieldError::BadModulus(modulus.render("t")));
        }
        let fac = factor_rational(&modulus).expect("degree within factoring bound");
        if fac.factors.len() != 1 || fac.factors[0].1 != 1 {
            return Err(NumberFieldError::Reducible(modulus.render("t")));
        }
        let modulus_rat = modulus.to_rat();
        Ok(Arc::new(NumberField { modulus, modulus_rat }))
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap_or(0)
    }
}

/// Element of a [`NumberField`], stored as its reduced representative.
#[derive(Clone, Debug)]
pub struct NfElem {
    field: Arc<NumberField>,
    value: RatPoly,
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field) && self.value == other.value
    }
}

impl Eq for NfElem {}

impl NfElem {
    pub fn from_poly(field: &Arc<NumberField>, value: RatPoly) -> Self {
        let value = value.rem(&field.modulus_rat);
        NfElem { field: field.clone(), value }
    }

    pub fn from_rat(field: &Arc<NumberField>, q: BigRational) -> Self {
        NfElem { field: field.clone(), value: RatPoly::constant(q) }
    }

    pub fn from_int(field: &Arc<NumberField>, c: i64) -> Self {
        Self::from_rat(field, BigRational::from_integer(BigInt::from(c)))
    }

    /// The class of `t`.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        Self::from_poly(field, RatPoly::x())
    }

    /// `p(self)` for an integer polynomial `p`.
    pub fn eval_int_poly(&self, p: &IntPoly) -> Self {
        p.eval_in(self, |c| Self::from_rat(&self.field, BigRational::from_integer(c.clone())))
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn value(&self) -> &RatPoly {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The element as a rational, when it lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.value.degree() {
            None => Some(BigRational::zero()),
            Some(0) => Some(self.value.coeff(0)),
            _ => None,
        }
    }

    fn same_field(&self, rhs: &Self) {
        debug_assert!(Arc::ptr_eq(&self.field, &rhs.field) || self.field == rhs.field, "number field mismatch");
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in number field");
        let (g, s, _) = self.value.xgcd(&self.field.modulus_rat);
        debug_assert!(g.is_one());
        Self::from_poly(&self.field, s)
    }
}

impl Scalar for NfElem {
    fn is_zero_s(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        NfElem { field: self.field.clone(), value: self.value.add(&rhs.value) }
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        NfElem { field: self.field.clone(), value: self.value.sub(&rhs.value) }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.same_field(rhs);
        Self::from_poly(&self.field, self.value.mul(&rhs.value))
    }
    fn neg_ref(&self) -> Self {
        NfElem { field: self.field.clone(), value: self.value.neg() }
    }
    fn zero_like(&self) -> Self {
        NfElem { field: self.field.clone(), value: RatPoly::zero() }
    }
    fn one_like(&self) -> Self {
        NfElem { field: self.field.clone(), value: RatPoly::one() }
    }
}

impl FieldOps for NfElem {
    fn inv_ref(&self) -> Self {
        self.inv()
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.value.render("t"))
    }
}
