use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::{partitions, PartitionError, YoungPartition};
use super::perm::{factorial, PermError, SymGroup};
use crate::exact_arith::ExactMatrix;

type CharKey = (Vec<usize>, Vec<usize>);

fn cache() -> &'static RwLock<HashMap<CharKey, i64>> {
    static CACHE: OnceLock<RwLock<HashMap<CharKey, i64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Irreducible character `χ^shape` at the class of the given cycle type
/// (Murnaghan–Nakayama on beta-numbers).
pub fn mn_character(shape: &YoungPartition, cycle_type: &YoungPartition) -> Result<i64, PartitionError> {
    if shape.size() != cycle_type.size() {
        return Err(PartitionError::SizeMismatch(shape.size(), cycle_type.size()));
    }
    Ok(mn(shape.parts(), cycle_type.parts()))
}

fn mn(shape: &[usize], mu: &[usize]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (shape.to_vec(), mu.to_vec());
    if let Some(&v) = cache().read().expect("character cache").get(&key) {
        return v;
    }
    let r = mu[0];
    let k = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &l)| l + k - 1 - i).collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[i] = b - r;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let len = nb.len();
        let new_shape: Vec<usize> = nb.iter().enumerate().map(|(j, &c)| c + j + 1 - len).filter(|&x| x > 0).collect();
        total += sign * mn(&new_shape, &mu[1..]);
    }
    cache().write().expect("character cache").insert(key, total);
    total
}

/// Size of the conjugacy class with the given cycle type.
pub fn class_size(cycle_type: &YoungPartition) -> u128 {
    let m = cycle_type.size();
    let mut z: u128 = 1;
    let mut counts: HashMap<usize, u128> = HashMap::new();
    for &p in cycle_type.parts() {
        z *= p as u128;
        *counts.entry(p).or_default() += 1;
    }
    for &c in counts.values() {
        z *= (1..=c).product::<u128>();
    }
    (1..=m as u128).product::<u128>() / z
}

/// Character table of `S_m`: rows and columns both indexed by [`partitions`] order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub m: usize,
    pub shapes: Vec<YoungPartition>,
    pub classes: Vec<YoungPartition>,
    pub values: Vec<Vec<i64>>,
}

pub fn character_table(m: usize) -> CharacterTable {
    let shapes = partitions(m);
    let classes = shapes.clone();
    let values = shapes.iter().map(|s| classes.iter().map(|c| mn(s.parts(), c.parts())).collect()).collect();
    CharacterTable { m, shapes, classes, values }
}

/// Element of `ℚ[S_m]`, coefficients indexed by lexicographic rank.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupAlgebraElem {
    pub m: usize,
    pub coeffs: Vec<BigRational>,
}

impl GroupAlgebraElem {
    pub fn zero(m: usize) -> Self {
        GroupAlgebraElem { m, coeffs: vec![BigRational::zero(); factorial(m)] }
    }

    /// A single group element with coefficient `c`.
    pub fn basis(m: usize, index: usize, c: BigRational) -> Self {
        let mut e = Self::zero(m);
        e.coeffs[index] = c;
        e
    }

    pub fn one(m: usize) -> Self {
        Self::basis(m, 0, BigRational::one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        GroupAlgebraElem { m: self.m, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        GroupAlgebraElem { m: self.m, coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        GroupAlgebraElem { m: self.m, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, PermError> {
        let g = SymGroup::get(self.m)?;
        let mut out = Self::zero(self.m);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[g.mul(i, j)] += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

/// Largest `m` for group-algebra constructions.
pub const MAX_ALGEBRA_DEGREE: usize = 6;

/// `e_χ = χ(1)/m! · Σ_g χ(g⁻¹) g`.
pub fn central_idempotent(shape: &YoungPartition, m: usize) -> Result<GroupAlgebraElem, PermError> {
    if shape.size() != m {
        return Err(PermError::ShapeMismatch(shape.size(), m));
    }
    let g = SymGroup::get(m)?;
    let dim = mn(shape.parts(), &vec![1; m]);
    let scale = BigRational::new(BigInt::from(dim), BigInt::from(g.order()));
    let coeffs = g
        .elements()
        .iter()
        .map(|p| &scale * BigRational::from_integer(BigInt::from(mn(shape.parts(), p.cycle_type().parts()))))
        .collect();
    Ok(GroupAlgebraElem { m, coeffs })
}

/// Matrix of `y ↦ y·x` on `ℚ[S_m]` (columns = images of basis elements).
///
/// Right action, so `ρ(xy) = ρ(y)·ρ(x)`.
pub fn regular_representation(x: &GroupAlgebraElem) -> Result<ExactMatrix<BigRational>, PermError> {
    let g = SymGroup::get(x.m)?;
    let n = g.order();
    let mut rows = vec![vec![BigRational::zero(); n]; n];
    for col in 0..n {
        for (k, c) in x.coeffs.iter().enumerate() {
            if !c.is_zero() {
                rows[g.mul(col, k)][col] += c;
            }
        }
    }
    Ok(ExactMatrix::from_rows(rows))
}
