use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::laurent::LaurentInt;
use super::number_field::NfElem;
use super::poly::{IntPoly, RatPoly};
use super::{DomainOps, FieldOps, Scalar};
use crate::exec::Exec;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix is {0}x{1}, expected square")]
    NotSquare(usize, usize),
    #[error("dimension mismatch: {0}x{1} against {2}x{3}")]
    Mismatch(usize, usize, usize, usize),
}

/// Dense row-major matrix with homogeneous exact entries.
#[derive(Clone, PartialEq, Debug)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<T>>,
}

impl<T: Scalar> ExactMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        ExactMatrix { rows: r, cols: c, data: rows }
    }

    /// Empty matrix with the given shape (only meaningful when a dimension is 0).
    pub fn empty(rows: usize, cols: usize) -> Self {
        assert!(rows == 0 || cols == 0);
        ExactMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let data = (0..rows).map(|i| (0..cols).map(|j| f(i, j)).collect()).collect();
        ExactMatrix { rows, cols, data }
    }

    pub fn from_fn_exec(exec: Exec, rows: usize, cols: usize, f: impl Fn(usize, usize) -> T + Sync + Send) -> Self {
        let data = exec.map_range(rows, |i| (0..cols).map(|j| f(i, j)).collect());
        ExactMatrix { rows, cols, data }
    }

    pub fn identity_like(n: usize, one: &T) -> Self {
        let zero = one.zero_like();
        Self::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i]
    }

    pub fn row_vecs(&self) -> &[Vec<T>] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix {
            rows: self.cols,
            cols: self.rows,
            data: (0..self.cols).map(|j| (0..self.rows).map(|i| self.data[i][j].clone()).collect()).collect(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|r| r.iter().map(&f).collect()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, MatrixError> {
        if self.cols != rhs.rows {
            return Err(MatrixError::Mismatch(self.rows, self.cols, rhs.rows, rhs.cols));
        }
        let Some(zero) = self.data.iter().flatten().chain(rhs.data.iter().flatten()).next() else {
            return Ok(ExactMatrix::empty(self.rows, rhs.cols));
        };
        let zero = zero.zero_like();
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(zero.clone(), |acc, k| acc.add_ref(&self.data[i][k].mul_ref(&rhs.data[k][j])))
        }))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(|x| x.is_zero_s())
    }

    /// Horizontal block concatenation.
    pub fn hconcat(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows);
        ExactMatrix {
            rows: self.rows,
            cols: self.cols + rhs.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.iter().chain(b).cloned().collect()).collect(),
        }
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for ExactMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self.data.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in &cells {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "[{}]", line.join("  "))?;
        }
        Ok(())
    }
}

/// Entry domains that know how to compute their own rank and determinant.
pub trait ExactEntry: Scalar {
    fn rank_of(m: &ExactMatrix<Self>, exec: Exec) -> usize;
    fn det_of(m: &ExactMatrix<Self>, exec: Exec) -> Self;
}

/// Exact rank: fraction-free elimination for integral domains, Gaussian
/// elimination for fields.
pub fn matrix_rank<T: ExactEntry>(m: &ExactMatrix<T>) -> usize {
    T::rank_of(m, Exec::default())
}

/// Exact determinant of a square matrix.
pub fn matrix_det<T: ExactEntry>(m: &ExactMatrix<T>) -> Result<T, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare(m.rows, m.cols));
    }
    Ok(T::det_of(m, Exec::default()))
}

/// Bareiss elimination in place. Returns (rank, sign of the row permutation,
/// last pivot); with full rank on a square input the last pivot is the determinant.
fn bareiss<T: Scalar + DomainOps>(a: &mut [Vec<T>], cols: usize, exec: Exec) -> (usize, bool, Option<T>) {
    let rows = a.len();
    let mut prev: Option<T> = None;
    let mut r = 0;
    let mut negate = false;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero_s()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            negate = !negate;
        }
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let piv = &pivot_row[c];
        let prev_ref = prev.as_ref();
        exec.for_each_mut(tail, |row| {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let mut x = piv.mul_ref(&row[j]);
                if !lead.is_zero_s() {
                    x = x.sub_ref(&lead.mul_ref(&pivot_row[j]));
                }
                if let Some(d) = prev_ref {
                    if !x.is_zero_s() {
                        x = x.div_exact(d);
                    }
                }
                row[j] = x;
            }
            row[c] = lead.zero_like();
        });
        prev = Some(a[r][c].clone());
        r += 1;
    }
    (r, negate, prev)
}

/// Rank over the fraction field of an integral domain, fraction-free.
pub fn rank_domain<T: Scalar + DomainOps>(m: &ExactMatrix<T>, exec: Exec) -> usize {
    let mut a = m.data.clone();
    bareiss(&mut a, m.cols, exec).0
}

/// Determinant over an integral domain, fraction-free. Panics if not square.
pub fn det_domain<T: Scalar + DomainOps>(m: &ExactMatrix<T>, one: &T, exec: Exec) -> T {
    assert!(m.is_square(), "determinant of a non-square matrix");
    if m.rows == 0 {
        return one.clone();
    }
    let mut a = m.data.clone();
    let (r, negate, last) = bareiss(&mut a, m.cols, exec);
    if r < m.rows {
        return one.zero_like();
    }
    let d = last.expect("nonempty full-rank matrix has a pivot");
    if negate {
        d.neg_ref()
    } else {
        d
    }
}

/// Gaussian elimination over a field. Returns (rank, product of pivots with
/// the row-swap sign folded in).
fn gauss<T: Scalar + FieldOps>(a: &mut [Vec<T>], cols: usize, exec: Exec) -> (usize, Option<T>) {
    let rows = a.len();
    let mut r = 0;
    let mut det: Option<T> = None;
    let mut negate = false;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero_s()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            negate = !negate;
        }
        let inv = a[r][c].inv_ref();
        det = Some(match det {
            Some(d) => d.mul_ref(&a[r][c]),
            None => a[r][c].clone(),
        });
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        exec.for_each_mut(tail, |row| {
            if row[c].is_zero_s() {
                return;
            }
            let f = row[c].mul_ref(&inv);
            for j in c + 1..cols {
                if !pivot_row[j].is_zero_s() {
                    row[j] = row[j].sub_ref(&f.mul_ref(&pivot_row[j]));
                }
            }
            row[c] = f.zero_like();
        });
        r += 1;
    }
    (r, if negate { det.map(|d| d.neg_ref()) } else { det })
}

/// Rank over a field by Gaussian elimination.
pub fn rank_field<T: Scalar + FieldOps>(m: &ExactMatrix<T>, exec: Exec) -> usize {
    let mut a = m.data.clone();
    gauss(&mut a, m.cols, exec).0
}

fn det_field<T: Scalar + FieldOps>(m: &ExactMatrix<T>, exec: Exec) -> Option<T> {
    assert!(m.is_square(), "determinant of a non-square matrix");
    let mut a = m.data.clone();
    let (r, d) = gauss(&mut a, m.cols, exec);
    if r < m.rows {
        return d.map(|x| x.zero_like());
    }
    d
}

/// Clear denominators row by row, giving an integer matrix of equal rank.
pub fn integer_rows(m: &ExactMatrix<BigRational>) -> ExactMatrix<BigInt> {
    let data = m
        .data
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            let lq = BigRational::from_integer(l);
            row.iter().map(|x| (x * &lq).to_integer()).collect()
        })
        .collect();
    ExactMatrix { rows: m.rows, cols: m.cols, data }
}

/// Rank over ℚ: scale rows to integers, then fraction-free elimination.
pub fn rank_rational(m: &ExactMatrix<BigRational>, exec: Exec) -> usize {
    rank_domain(&integer_rows(m), exec)
}

impl ExactEntry for BigInt {
    fn rank_of(m: &ExactMatrix<Self>, exec: Exec) -> usize {
        rank_domain(m, exec)
    }
    fn det_of(m: &ExactMatrix<Self>, exec: Exec) -> Self {
        det_domain(m, &BigInt::one(), exec)
    }
}

impl ExactEntry for BigRational {
    fn rank_of(m: &ExactMatrix<Self>, exec: Exec) -> usize {
        rank_rational(m, exec)
    }
    fn det_of(m: &ExactMatrix<Self>, exec: Exec) -> Self {
        if m.rows == 0 {
            return BigRational::one();
        }
        det_field(m, exec).unwrap_or_else(BigRational::zero)
    }
}

impl ExactEntry for IntPoly {
    fn rank_of(m: &ExactMatrix<Self>, exec: Exec) -> usize {
        rank_domain(m, exec)
    }
    fn det_of(m: &ExactMatrix<Self>, exec: Exec) -> Self {
        det_domain(m, &IntPoly::one(), exec)
    }
}

impl ExactEntry for LaurentInt {
    fn rank_of(m: &ExactMatrix<Self>, exec: Exec) -> usize {
        rank_domain(m, exec)
    }
    fn det_of(m: &ExactMatrix<Self>, exec: Exec) -> Self {
        det_domain(m, &LaurentInt::one(), exec)
    }
}

impl ExactEntry for NfElem {
    fn rank_of(m: &ExactMatrix<Self>, exec: Exec) -> usize {
        rank_field(m, exec)
    }
    fn det_of(m: &ExactMatrix<Self>, exec: Exec) -> Self {
        det_field(m, exec).expect("determinant of an empty number-field matrix needs a field handle")
    }
}

/// Basis of the right null space over a field, one vector per free column.
pub fn nullspace<T: Scalar + FieldOps>(m: &ExactMatrix<T>, one: &T) -> Vec<Vec<T>> {
    let mut a = m.data.clone();
    let zero = one.zero_like();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m.cols {
        if r == m.rows {
            break;
        }
        let Some(p) = (r..m.rows).find(|&i| !a[i][c].is_zero_s()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].inv_ref();
        for x in a[r].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        for i in 0..m.rows {
            if i != r && !a[i][c].is_zero_s() {
                let f = a[i][c].clone();
                for j in 0..m.cols {
                    let t = f.mul_ref(&a[r][j]);
                    a[i][j] = a[i][j].sub_ref(&t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![zero.clone(); m.cols];
            v[f] = one.clone();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = a[row][f].neg_ref();
            }
            v
        })
        .collect()
}

/// Minimal polynomial (monic) of a square rational matrix, via the first
/// linear dependency among I, M, M², ….
pub fn minimal_polynomial(m: &ExactMatrix<BigRational>) -> Result<RatPoly, MatrixError> {
    if !m.is_square() {
        return Err(MatrixError::NotSquare(m.rows, m.cols));
    }
    let n = m.rows;
    let one = BigRational::one();
    let flat = |x: &ExactMatrix<BigRational>| -> Vec<BigRational> { x.data.iter().flatten().cloned().collect() };
    let mut powers = vec![flat(&ExactMatrix::identity_like(n, &one))];
    let mut cur = ExactMatrix::identity_like(n, &one);
    for k in 1..=n.max(1) {
        cur = cur.mul(m)?;
        powers.push(flat(&cur));
        let system = ExactMatrix::from_fn(n * n, k + 1, |i, j| powers[j][i].clone());
        let null = nullspace(&system, &one);
        if let Some(v) = null.first() {
            return Ok(RatPoly::new(v.clone()).monic());
        }
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}
