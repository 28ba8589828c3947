//! Factorization of integer polynomials over ℚ (Zassenhaus).
//!
//! Square-free decomposition, Cantor–Zassenhaus modulo a small prime,
//! quadratic Hensel lifting along a factor tree, then subset recombination.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::fp::{divisible, primes_between, PrimeField};
use super::poly::IntPoly;

/// Largest degree accepted by [`factor_rational`].
pub const MAX_FACTOR_DEGREE: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("cannot factor the zero polynomial")]
    Zero,
    #[error("degree {0} exceeds the supported bound {MAX_FACTOR_DEGREE}")]
    DegreeTooLarge(usize),
}

/// `content · Π factor^multiplicity`, factors primitive, irreducible, with
/// positive leading coefficient, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        self.factors.iter().fold(IntPoly::constant(self.content.clone()), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }

    /// `(d-1)^4*(d+1)^4*(d^2-2)` style rendering in the given variable.
    pub fn render(&self, var: &str) -> String {
        let mut parts = Vec::new();
        if self.factors.is_empty() || !self.content.is_one() {
            if self.content == BigInt::from(-1) && !self.factors.is_empty() {
                parts.push("-1".to_string());
            } else {
                parts.push(self.content.to_string());
            }
        }
        for (f, m) in &self.factors {
            let body = f.render(var);
            let is_var = f.degree() == Some(1) && f.coeff(0).is_zero() && f.leading().is_one();
            let base = if is_var { body } else { format!("({body})") };
            parts.push(if *m == 1 { base } else { format!("{base}^{m}") });
        }
        parts.join("*")
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("d"))
    }
}

/// Factor a nonzero integer polynomial into irreducibles over ℚ.
///
/// The degree bound applies to each square-free part once powers of `x` are
/// removed, so `(x-1)^9*(x+2)^5` factors while an irreducible of degree 13 does not.
pub fn factor_rational(p: &IntPoly) -> Result<Factorization, FactorError> {
    p.degree().ok_or(FactorError::Zero)?;
    let content = p.content();
    let mut g = p.primitive_part();
    let mut factors: Vec<(IntPoly, usize)> = Vec::new();
    let zeros = g.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        factors.push((IntPoly::x(), zeros));
        g = IntPoly::new(g.coeffs()[zeros..].to_vec());
    }
    let parts = squarefree_decomposition(&g);
    if let Some(deg) = parts.iter().filter_map(|(f, _)| f.degree()).find(|&d| d > MAX_FACTOR_DEGREE) {
        return Err(FactorError::DegreeTooLarge(deg));
    }
    for (part, mult) in parts {
        for f in factor_squarefree(&part) {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|a, b| a.0.factor_order(&b.0));
    Ok(Factorization { content, factors })
}

/// Yun's algorithm on a primitive polynomial; parts are primitive with positive
/// leading coefficient and nonconstant.
fn squarefree_decomposition(g: &IntPoly) -> Vec<(IntPoly, usize)> {
    let f = g.to_rat();
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let df = f.derivative();
    let a = f.gcd_field(&df);
    let mut b = f.divrem(&a).0;
    let mut c = df.divrem(&a).0;
    let mut out = Vec::new();
    let mut i = 1;
    loop {
        let d = c.sub(&b.derivative());
        if b.degree() == Some(0) {
            break;
        }
        let a = b.gcd_field(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.to_primitive_int(), i));
        }
        b = b.divrem(&a).0;
        c = d.divrem(&a).0;
        i += 1;
    }
    out
}

/// Factor a primitive square-free polynomial with positive leading coefficient.
fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let d = f.degree().unwrap_or(0);
    if d <= 1 {
        return vec![f.clone()];
    }
    if f.coeff(0).is_zero() {
        let rest = IntPoly::new(f.coeffs()[1..].to_vec());
        let mut out = vec![IntPoly::x()];
        out.extend(factor_squarefree(&rest));
        return out;
    }
    let lc = f.leading();
    let df = f.derivative();

    // Pick the good prime with the fewest modular factors among the first few.
    let mut best: Option<(PrimeField, Vec<Vec<u64>>)> = None;
    let mut tried = 0;
    for p in primes_between(3, 400) {
        if divisible(&lc, p) {
            continue;
        }
        let fp = PrimeField::new(p);
        let fm = fp.poly_from_int(f.coeffs());
        let dm = fp.poly_from_int(df.coeffs());
        if fp.poly_gcd(&fm, &dm).len() != 1 {
            continue;
        }
        let facs = cantor_zassenhaus(&fp, &fp.poly_monic(&fm));
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((fp, facs));
        }
        tried += 1;
        if tried == 5 {
            break;
        }
    }
    let (fp, modular) = best.expect("some small prime is good for a square-free polynomial");
    if modular.len() == 1 {
        return vec![f.clone()];
    }

    // Coefficient bound for lc(f)·(factor)/lc(factor).
    let bound = BigInt::from(2) * lc.abs() * (BigInt::one() << d) * f.l1_norm();
    let p = BigInt::from(fp.modulus());
    let mut modulus = p.clone();
    let mut steps = 0u32;
    while modulus <= bound {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let lifted = hensel_lift(&fp, f, &modular, steps);
    recombine(f, lifted, &modulus)
}

/// Equal-degree and distinct-degree factorization of a monic square-free polynomial mod p.
fn cantor_zassenhaus(fp: &PrimeField, f: &[u64]) -> Vec<Vec<u64>> {
    let p = fp.modulus() as u128;
    let x = vec![0u64, 1];
    let mut rest = f.to_vec();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e_ed0f_fac7);
    let mut i = 0usize;
    while rest.len() > 1 {
        i += 1;
        if 2 * i > rest.len() - 1 {
            out.extend(equal_degree(fp, &rest, rest.len() - 1, &mut rng));
            break;
        }
        h = fp.poly_powmod(&h, p, &rest);
        let g = fp.poly_gcd(&fp.poly_sub(&h, &x), &rest);
        if g.len() > 1 {
            out.extend(equal_degree(fp, &g, i, &mut rng));
            rest = fp.poly_divrem(&rest, &g).0;
            h = fp.poly_rem(&h, &rest);
        }
    }
    out.sort();
    out
}

fn equal_degree(fp: &PrimeField, g: &[u64], d: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<u64>> {
    let n = g.len() - 1;
    if n == d {
        return vec![g.to_vec()];
    }
    let p = fp.modulus();
    let e = ((p as u128).pow(d as u32) - 1) / 2;
    loop {
        let a: Vec<u64> = fp.poly_trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = fp.poly_sub(&fp.poly_powmod(&a, e, g), &[1]);
        let u = fp.poly_gcd(&b, g);
        if u.len() > 1 && u.len() < g.len() {
            let v = fp.poly_monic(&fp.poly_divrem(g, &u).0);
            let mut out = equal_degree(fp, &u, d, rng);
            out.extend(equal_degree(fp, &v, d, rng));
            return out;
        }
    }
}

// Polynomials over ℤ/mℤ, coefficients kept in [0, m).

fn zm_trim(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn zm_reduce(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    zm_trim(a.iter().map(|c| c.mod_floor(m)).collect())
}

fn zm_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    zm_trim((0..n).map(|i| (a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).mod_floor(m)).collect())
}

fn zm_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    zm_trim((0..n).map(|i| (a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).mod_floor(m)).collect())
}

fn zm_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    zm_reduce(&out, m)
}

/// Division by a monic polynomial over ℤ/mℤ.
fn zm_divrem_monic(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    debug_assert!(d.last().is_some_and(|c| c.is_one()));
    if a.len() < d.len() {
        return (Vec::new(), a.to_vec());
    }
    let dd = d.len() - 1;
    let mut rem = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd].mod_floor(m);
        if !c.is_zero() {
            for (i, b) in d.iter().enumerate() {
                rem[k + i] = (&rem[k + i] - &c * b).mod_floor(m);
            }
        }
        q[k] = c;
    }
    rem.truncate(dd);
    (zm_trim(q), zm_reduce(&rem, m))
}

fn lift_u64(a: &[u64]) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lift the monic modular factorization of `lc⁻¹·f` to modulus `p^(2^steps)`.
fn hensel_lift(fp: &PrimeField, f: &IntPoly, factors: &[Vec<u64>], steps: u32) -> Vec<Vec<BigInt>> {
    let p = BigInt::from(fp.modulus());
    let mut target = p.clone();
    for _ in 0..steps {
        target = &target * &target;
    }
    let lc_inv = f.leading().modinv(&target).expect("leading coefficient prime to p");
    let monic: Vec<BigInt> = zm_reduce(&f.coeffs().iter().map(|c| c * &lc_inv).collect::<Vec<_>>(), &target);
    lift_tree(fp, &monic, factors, steps)
}

fn lift_tree(fp: &PrimeField, f: &[BigInt], factors: &[Vec<u64>], steps: u32) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![f.to_vec()];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[Vec<u64>]| fs.iter().fold(vec![1u64], |acc, g| fp.poly_mul(&acc, g));
    let (g0, h0) = (prod(left), prod(right));
    let (one, s0, t0) = fp.poly_xgcd(&g0, &h0);
    debug_assert_eq!(one, vec![1]);

    let mut m = BigInt::from(fp.modulus());
    let (mut g, mut h, mut s, mut t) = (lift_u64(&g0), lift_u64(&h0), lift_u64(&s0), lift_u64(&t0));
    for _ in 0..steps {
        let m2 = &m * &m;
        let fm = zm_reduce(f, &m2);
        let e = zm_sub(&fm, &zm_mul(&g, &h, &m2), &m2);
        let (q, r) = zm_divrem_monic(&zm_mul(&s, &e, &m2), &h, &m2);
        let g_new = zm_add(&zm_add(&g, &zm_mul(&t, &e, &m2), &m2), &zm_mul(&q, &g, &m2), &m2);
        let h_new = zm_add(&h, &r, &m2);
        let b = zm_sub(&zm_add(&zm_mul(&s, &g_new, &m2), &zm_mul(&t, &h_new, &m2), &m2), &[BigInt::one()], &m2);
        let (c, d) = zm_divrem_monic(&zm_mul(&s, &b, &m2), &h_new, &m2);
        s = zm_sub(&s, &d, &m2);
        t = zm_sub(&zm_sub(&t, &zm_mul(&t, &b, &m2), &m2), &zm_mul(&c, &g_new, &m2), &m2);
        g = g_new;
        h = h_new;
        m = m2;
    }
    let mut out = lift_tree(fp, &g, left, steps);
    out.extend(lift_tree(fp, &h, right, steps));
    out
}

fn symmetric(a: &[BigInt], m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        a.iter()
            .map(|c| {
                let c = c.mod_floor(m);
                if c > half {
                    c - m
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// Zassenhaus recombination of lifted monic factors.
fn recombine(f: &IntPoly, mut lifted: Vec<Vec<BigInt>>, m: &BigInt) -> Vec<IntPoly> {
    let mut f = f.clone();
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut found = false;
        let lc = f.leading();
        for subset in combinations(lifted.len(), size) {
            let prod = subset.iter().fold(vec![lc.mod_floor(m)], |acc, &i| zm_mul(&acc, &lifted[i], m));
            let cand = symmetric(&prod, m).primitive_part();
            if let Some(q) = f.checked_div(&cand) {
                out.push(cand);
                f = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    out.push(f.primitive_part());
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Rational roots of an integer polynomial (from its linear factors), ascending.
pub fn rational_roots(p: &IntPoly) -> Vec<num_rational::BigRational> {
    let Ok(fac) = factor_rational(p) else {
        return Vec::new();
    };
    let mut roots: Vec<_> = fac
        .factors
        .iter()
        .filter(|(f, _)| f.degree() == Some(1))
        .map(|(f, _)| num_rational::BigRational::new(-f.coeff(0), f.coeff(1)))
        .collect();
    roots.sort();
    roots
}
