use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use thiserror::Error;

use crate::exact_arith::{fmt_rational, Scalar};

/// Sparse element: `(coefficient, basis index)` pairs.
pub type SparseVec<C> = Vec<(C, usize)>;

/// Multiplication oracle on basis indices.
pub type Oracle<C> = Arc<dyn Fn(usize, usize) -> SparseVec<C> + Send + Sync>;

/// Largest basis handled when reachability runs over generators.
pub const MAX_BASIS_GENERATORS: usize = 60_000;
/// Largest basis handled when reachability runs over the full basis.
pub const MAX_BASIS_FULL: usize = 5_000;

/// Coefficient ring of a based algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RingTag {
    /// `ℤ[δ]` with `δ` an indeterminate.
    DeltaGeneric,
    /// `ℤ[δ]` specialised at a rational value.
    DeltaAt(BigRational),
    /// `ℤ[v, v⁻¹]`.
    Laurent,
    Rational,
}

impl fmt::Display for RingTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingTag::DeltaGeneric => f.write_str("Z[d]"),
            RingTag::DeltaAt(d) => write!(f, "Z[d]/(d-{})", fmt_rational(d)),
            RingTag::Laurent => f.write_str("Z[v,v^-1]"),
            RingTag::Rational => f.write_str("Q"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CellError {
    #[error("basis of size {size} exceeds the bound {bound} for this closure")]
    BoundExceeded { size: usize, bound: usize },
    #[error("generator closure needs nonnegative structure constants")]
    GeneratorsNeedNonneg,
    #[error("generator closure requested but no generators were supplied")]
    NoGenerators,
    #[error("index {0} is not a J-cell")]
    NoSuchCell(usize),
}

/// A based algebra `(A, B_A)` given by its multiplication oracle.
#[derive(Clone)]
pub struct BasedAlgebra<C> {
    pub basis_size: usize,
    pub ring: RingTag,
    oracle: Oracle<C>,
    pub generators: Option<Vec<usize>>,
    pub nonneg: bool,
    pub star: Option<Vec<usize>>,
    /// Basis index of the unit, when the unit is a basis element.
    pub unit: Option<usize>,
    /// Display names of basis elements.
    pub labels: Option<Vec<String>>,
}

impl<C: Scalar> BasedAlgebra<C> {
    pub fn new(basis_size: usize, ring: RingTag, oracle: Oracle<C>) -> Self {
        BasedAlgebra { basis_size, ring, oracle, generators: None, nonneg: false, star: None, unit: None, labels: None }
    }

    pub fn with_generators(mut self, gens: Vec<usize>, nonneg: bool) -> Self {
        self.generators = Some(gens);
        self.nonneg = nonneg;
        self
    }

    pub fn with_nonneg(mut self, nonneg: bool) -> Self {
        self.nonneg = nonneg;
        self
    }

    pub fn with_star(mut self, star: Vec<usize>) -> Self {
        self.star = Some(star);
        self
    }

    pub fn with_unit(mut self, unit: usize) -> Self {
        self.unit = Some(unit);
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }

    /// Product of two basis elements, zero coefficients removed.
    pub fn mul(&self, i: usize, j: usize) -> SparseVec<C> {
        let mut v = (self.oracle)(i, j);
        v.retain(|(c, _)| !c.is_zero_s());
        v
    }

    /// Basis indices with nonzero coefficient in `b_i · b_j`.
    pub fn support(&self, i: usize, j: usize) -> Vec<usize> {
        let mut s: Vec<usize> = self.mul(i, j).into_iter().map(|(_, k)| k).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Bilinear extension of the oracle to sparse vectors.
    pub fn mul_vec(&self, x: &SparseVec<C>, y: &SparseVec<C>) -> SparseVec<C> {
        let mut acc: BTreeMap<usize, C> = BTreeMap::new();
        for (a, i) in x {
            for (b, j) in y {
                let ab = a.mul_ref(b);
                if ab.is_zero_s() {
                    continue;
                }
                for (c, k) in (self.oracle)(*i, *j) {
                    let term = ab.mul_ref(&c);
                    match acc.get_mut(&k) {
                        Some(v) => *v = v.add_ref(&term),
                        None => {
                            acc.insert(k, term);
                        }
                    }
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero_s()).map(|(k, c)| (c, k)).collect()
    }

    pub fn label(&self, i: usize) -> String {
        self.labels.as_ref().map_or_else(|| format!("#{i}"), |l| l[i].clone())
    }
}

impl<C> fmt::Debug for BasedAlgebra<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BasedAlgebra")
            .field("basis_size", &self.basis_size)
            .field("ring", &self.ring)
            .field("generators", &self.generators)
            .field("nonneg", &self.nonneg)
            .finish_non_exhaustive()
    }
}
