//! Arithmetic in small prime fields and dense polynomials over them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::matrix::ExactMatrix;

/// The field 𝔽_p for a prime `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!((2..1 << 32).contains(&p), "prime out of range");
        PrimeField { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn reduce_int(&self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.p)).to_u64().expect("residue fits")
    }

    /// Image of a rational, `None` if `p` divides the denominator.
    pub fn reduce_rat(&self, x: &BigRational) -> Option<u64> {
        let d = self.reduce_int(x.denom());
        if d == 0 {
            return None;
        }
        Some(self.mul(self.reduce_int(x.numer()), self.inv(d)))
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(&self, mut a: u64, mut e: u128) -> u64 {
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "inverse of zero mod p");
        self.pow(a, (self.p - 2) as u128)
    }

    // Dense polynomials over 𝔽_p, lowest degree first, trimmed.

    pub fn poly_trim(&self, mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn poly_from_int(&self, coeffs: &[BigInt]) -> Vec<u64> {
        self.poly_trim(coeffs.iter().map(|c| self.reduce_int(c)).collect())
    }

    pub fn poly_add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        self.poly_trim((0..n).map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect())
    }

    pub fn poly_sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let n = a.len().max(b.len());
        self.poly_trim((0..n).map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0))).collect())
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        self.poly_trim(out)
    }

    pub fn poly_divrem(&self, a: &[u64], d: &[u64]) -> (Vec<u64>, Vec<u64>) {
        assert!(!d.is_empty(), "polynomial division by zero mod p");
        if a.len() < d.len() {
            return (Vec::new(), a.to_vec());
        }
        let dd = d.len() - 1;
        let inv = self.inv(d[dd]);
        let mut rem = a.to_vec();
        let mut q = vec![0u64; a.len() - dd];
        for k in (0..q.len()).rev() {
            let c = self.mul(rem[k + dd], inv);
            if c != 0 {
                for (i, &b) in d.iter().enumerate() {
                    rem[k + i] = self.sub(rem[k + i], self.mul(c, b));
                }
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (self.poly_trim(q), self.poly_trim(rem))
    }

    pub fn poly_rem(&self, a: &[u64], d: &[u64]) -> Vec<u64> {
        self.poly_divrem(a, d).1
    }

    pub fn poly_monic(&self, a: &[u64]) -> Vec<u64> {
        match a.last() {
            None => Vec::new(),
            Some(&l) => {
                let inv = self.inv(l);
                a.iter().map(|&x| self.mul(x, inv)).collect()
            }
        }
    }

    pub fn poly_gcd(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (mut x, mut y) = (a.to_vec(), b.to_vec());
        while !y.is_empty() {
            let r = self.poly_rem(&x, &y);
            x = y;
            y = r;
        }
        self.poly_monic(&x)
    }

    /// `(g, s, t)` with `s·a + t·b = g` monic.
    pub fn poly_xgcd(&self, a: &[u64], b: &[u64]) -> (Vec<u64>, Vec<u64>, Vec<u64>) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.poly_divrem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = self.poly_sub(&t0, &self.poly_mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("xgcd of two zero polynomials"));
        let sc = |v: Vec<u64>| self.poly_trim(v.iter().map(|&x| self.mul(x, inv)).collect());
        (sc(r0), sc(s0), sc(t0))
    }

    pub fn poly_derivative(&self, a: &[u64]) -> Vec<u64> {
        self.poly_trim(a.iter().enumerate().skip(1).map(|(i, &c)| self.mul(c, i as u64 % self.p)).collect())
    }

    /// `base^e mod m`.
    pub fn poly_powmod(&self, base: &[u64], mut e: u128, m: &[u64]) -> Vec<u64> {
        let mut acc = self.poly_rem(&[1], m);
        let mut b = self.poly_rem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_rem(&self.poly_mul(&acc, &b), m);
            }
            b = self.poly_rem(&self.poly_mul(&b, &b), m);
            e >>= 1;
        }
        acc
    }
}

/// Rank of an integer matrix reduced modulo `p`.
pub fn rank_mod_p(m: &ExactMatrix<BigInt>, p: u64) -> usize {
    let f = PrimeField::new(p);
    let rows: Vec<Vec<u64>> = m.row_vecs().iter().map(|r| r.iter().map(|x| f.reduce_int(x)).collect()).collect();
    rank_fp_rows(&f, rows, m.cols())
}

/// Rank of a rational matrix reduced modulo `p`; `None` if some denominator vanishes mod `p`.
pub fn rank_mod_p_rational(m: &ExactMatrix<BigRational>, p: u64) -> Option<usize> {
    let f = PrimeField::new(p);
    let mut rows = Vec::with_capacity(m.rows());
    for r in m.row_vecs() {
        rows.push(r.iter().map(|x| f.reduce_rat(x)).collect::<Option<Vec<u64>>>()?);
    }
    Some(rank_fp_rows(&f, rows, m.cols()))
}

fn rank_fp_rows(f: &PrimeField, mut a: Vec<Vec<u64>>, cols: usize) -> usize {
    let rows = a.len();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(piv, r);
        let inv = f.inv(a[r][c]);
        for i in r + 1..rows {
            if a[i][c] == 0 {
                continue;
            }
            let k = f.mul(a[i][c], inv);
            for j in c..cols {
                let t = f.mul(k, a[r][j]);
                a[i][j] = f.sub(a[i][j], t);
            }
        }
        r += 1;
    }
    r
}

/// Primes in `[lo, hi)` by trial division.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(2)..hi).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)).collect()
}

/// True if `x` is zero modulo `p`.
pub fn divisible(x: &BigInt, p: u64) -> bool {
    (x % BigInt::from(p)).is_zero()
}
