use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::word::DihedralWord;
use super::DihedralError;
use crate::exact_arith::{bracket2, LaurentInt};

/// Finite combination of KL basis elements with Laurent coefficients. No zero
/// coefficient is ever stored.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct HeckeElement {
    terms: BTreeMap<DihedralWord, LaurentInt>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: DihedralWord) -> Self {
        Self::term(w, LaurentInt::one())
    }

    pub fn term(w: DihedralWord, c: LaurentInt) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (DihedralWord, LaurentInt)>) -> Self {
        let mut out = Self::zero();
        for (w, c) in terms {
            out.add_term(w, c);
        }
        out
    }

    pub fn add_term(&mut self, w: DihedralWord, c: LaurentInt) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&w) {
            Some(old) => old.add(&c),
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &DihedralWord) -> LaurentInt {
        self.terms.get(w).cloned().unwrap_or_else(LaurentInt::zero)
    }

    /// Terms in ascending word order (by length, then last letter).
    pub fn terms(&self) -> impl Iterator<Item = (&DihedralWord, &LaurentInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentInt) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, x)| (*w, x.mul(c))))
    }

    /// Bilinear extension of a product of basis elements.
    pub fn mul_with(
        &self,
        rhs: &Self,
        basis_mul: impl Fn(DihedralWord, DihedralWord) -> Result<HeckeElement, DihedralError>,
    ) -> Result<Self, DihedralError> {
        let mut out = Self::zero();
        for (x, a) in &self.terms {
            for (y, b) in &rhs.terms {
                let ab = a.mul(b);
                for (w, c) in basis_mul(*x, *y)?.terms {
                    out.add_term(w, c.mul(&ab));
                }
            }
        }
        Ok(out)
    }

    /// Every coefficient has nonnegative integer coefficients in `v`.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(LaurentInt::has_nonnegative_coeffs)
    }

    /// Specialization `v = 1`.
    pub fn at_one(&self) -> BTreeMap<DihedralWord, BigInt> {
        self.terms.iter().map(|(w, c)| (*w, c.at_one())).filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Render with quantum-number coefficients, e.g. `[2]b12 + ([2]_3+2[2])b121212`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let (neg, body) = coefficient_text(c);
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            out.push_str(&body);
            out.push_str(&w.basis_name());
        }
        out
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for HeckeElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(self.terms.iter().map(|(w, c)| (w.to_string(), c.render())))
    }
}

/// Writes a bar-invariant Laurent polynomial as `c₀ + Σ cᵢ[2]_i`, highest
/// `i` first, with `[2]_1` shown as `[2]`.
pub fn render_quantum(c: &LaurentInt) -> String {
    if !c.is_bar_invariant() {
        return c.render();
    }
    let mut parts: Vec<(bool, String)> = Vec::new();
    for i in (1..=c.high().max(0)).rev() {
        let k = c.coeff(i);
        if k.is_zero() {
            continue;
        }
        let sym = if i == 1 { "[2]".to_string() } else { format!("[2]_{i}") };
        let mag = k.abs();
        parts.push((k.is_negative(), if mag.is_one() { sym } else { format!("{mag}{sym}") }));
    }
    let c0 = c.coeff(0);
    if !c0.is_zero() {
        parts.push((c0.is_negative(), c0.abs().to_string()));
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (neg, p)) in parts.iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push('-'),
            (_, false) => out.push('+'),
        }
        out.push_str(p);
    }
    out
}

/// (negative?, text) of a coefficient placed in front of a basis name.
fn coefficient_text(c: &LaurentInt) -> (bool, String) {
    let neg = c.coeff(c.high()).is_negative();
    let c = if neg { c.neg() } else { c.clone() };
    if c == LaurentInt::one() {
        return (neg, String::new());
    }
    let text = render_quantum(&c);
    let single = !text[1..].contains(['+', '-']);
    (neg, if single { text } else { format!("({text})") })
}

/// Coefficients by length of `b_x·b_y` in the infinite dihedral group,
/// together with the last letter shared by every result word.
///
/// Same letter at the junction: `[2]` on lengths `|k−j|+1, …, k+j−1`.
/// Different letters: `1, 2, …, 2, 1` on lengths `|k−j|, …, k+j`.
/// Both in steps of two; the length-0 term is dropped.
fn cg_lengths(x: DihedralWord, y: DihedralWord) -> (Vec<LaurentInt>, u8) {
    let (k, j) = (x.len(), y.len());
    let last = y.last().expect("nonidentity");
    let mut c = vec![LaurentInt::zero(); k + j + 1];
    if x.last() == y.first() {
        let two = bracket2(1);
        for l in ((k.abs_diff(j) + 1)..=(k + j - 1)).step_by(2) {
            c[l] = two.clone();
        }
    } else {
        let lo = k.abs_diff(j);
        let hi = k + j;
        for l in (lo..=hi).step_by(2) {
            c[l] = LaurentInt::from_int(if l == lo || l == hi { 1 } else { 2 });
        }
    }
    c[0] = LaurentInt::zero();
    (c, last)
}

/// `b_x·b_y` in the Hecke algebra of the infinite dihedral group.
pub fn cg_multiply_infinite(x: DihedralWord, y: DihedralWord) -> HeckeElement {
    if x.is_identity() {
        return HeckeElement::basis(y);
    }
    if y.is_identity() {
        return HeckeElement::basis(x);
    }
    let (c, last) = cg_lengths(x, y);
    HeckeElement::from_terms(
        c.into_iter().enumerate().skip(1).map(|(l, coef)| (DihedralWord::new(l, last).expect("valid letter"), coef)),
    )
}

/// `b_x·b_y` in the Hecke algebra of `I₂(n)`: the infinite product with
/// `b_{n−d} + b_{n+d}` replaced by `[2]_d·b_{w₀}`, pairs matched from the
/// outside in.
pub fn cg_multiply_finite(n: usize, x: DihedralWord, y: DihedralWord) -> Result<HeckeElement, DihedralError> {
    if n < 2 {
        return Err(DihedralError::BadRank(n));
    }
    for w in [x, y] {
        if w.len() > n {
            return Err(DihedralError::TooLong { word: w.to_string(), n });
        }
    }
    let w0 = DihedralWord::longest(n);
    if x.is_identity() {
        return Ok(HeckeElement::basis(y.in_group(n).expect("checked")));
    }
    if y.is_identity() {
        return Ok(HeckeElement::basis(x.in_group(n).expect("checked")));
    }
    // Either letter may be read at a junction with w₀.
    let (x, y) = match (x.len() == n, y.len() == n) {
        (true, true) => (w0, DihedralWord::new(n, if n % 2 == 1 { 2 } else { 1 })?),
        (true, false) => (DihedralWord::new(n, y.first().expect("nonidentity"))?, y),
        (false, true) => {
            let first = x.last().expect("nonidentity");
            (x, DihedralWord::new(n, if n % 2 == 1 { first } else { 3 - first })?)
        }
        (false, false) => (x, y),
    };
    let (mut c, last) = cg_lengths(x, y);
    let mut top = LaurentInt::zero();
    for l in (n + 1..c.len()).rev() {
        if c[l].is_zero() {
            continue;
        }
        let d = l - n;
        let coef = std::mem::replace(&mut c[l], LaurentInt::zero());
        top = top.add(&coef.mul(&bracket2(d as u32)));
        c[n - d] = c[n - d].sub(&coef);
    }
    if n < c.len() {
        top = top.add(&c[n]);
    }
    let mut out = HeckeElement::term(w0, top);
    for (l, coef) in c.into_iter().enumerate().take(n).skip(1) {
        out.add_term(DihedralWord::new(l, last)?, coef);
    }
    Ok(out)
}
