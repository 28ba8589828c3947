use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;

use super::algebra::{BasedAlgebra, RingTag};
use crate::diagrams::{enumerate, generators, multiply, DiagramFamily, FamilyError, PartitionDiagram};
use crate::exact_arith::{fmt_rational, parse_rational, IntPoly};

/// Loop parameter: an indeterminate or a rational value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DeltaSpec {
    Generic,
    Value(BigRational),
}

impl FromStr for DeltaSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("generic") {
            return Ok(DeltaSpec::Generic);
        }
        parse_rational(s)
            .map(DeltaSpec::Value)
            .ok_or_else(|| format!("invalid delta {s:?}: expected 'generic' or a rational such as -3/2"))
    }
}

impl fmt::Display for DeltaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaSpec::Generic => f.write_str("generic"),
            DeltaSpec::Value(v) => f.write_str(&fmt_rational(v)),
        }
    }
}

/// The diagram basis of one family, with index lookup.
#[derive(Debug)]
pub struct DiagramBasis {
    pub family: DiagramFamily,
    pub n: usize,
    pub elements: Vec<PartitionDiagram>,
    index: HashMap<PartitionDiagram, usize>,
}

impl DiagramBasis {
    pub fn new(family: DiagramFamily, n: usize) -> Result<Arc<Self>, FamilyError> {
        let elements = enumerate(family, n)?;
        let index = elements.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();
        Ok(Arc::new(DiagramBasis { family, n, elements, index }))
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, d: &PartitionDiagram) -> Option<usize> {
        self.index.get(d).copied()
    }

    /// `(closed loops, index)` of `b_i · b_j`.
    pub fn product(&self, i: usize, j: usize) -> (usize, usize) {
        let (k, p) = multiply(&self.elements[i], &self.elements[j]).expect("same strand count");
        (k, self.index[&p])
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        generators(self.family, self.n).iter().map(|g| self.index[g]).collect()
    }

    pub fn unit(&self) -> usize {
        self.index[&PartitionDiagram::identity(self.n)]
    }

    pub fn star_permutation(&self) -> Option<Vec<usize>> {
        self.family.is_involutive().then(|| self.elements.iter().map(|d| self.index[&d.star()]).collect())
    }

    fn decorate<C: crate::exact_arith::Scalar>(&self, alg: BasedAlgebra<C>, gens_ok: bool) -> BasedAlgebra<C> {
        let mut alg = alg.with_unit(self.unit()).with_labels(self.elements.iter().map(|d| d.render()).collect());
        if gens_ok {
            alg = alg.with_generators(self.generator_indices(), true);
        }
        if let Some(s) = self.star_permutation() {
            alg = alg.with_star(s);
        }
        alg
    }

    /// Coefficients in `ℤ[δ]`: a product closing `k` loops contributes `δ^k`.
    pub fn algebra_generic(self: &Arc<Self>) -> BasedAlgebra<IntPoly> {
        let me = Arc::clone(self);
        let oracle = Arc::new(move |i: usize, j: usize| {
            let (k, p) = me.product(i, j);
            vec![(IntPoly::monomial(1.into(), k), p)]
        });
        self.decorate(BasedAlgebra::new(self.len(), RingTag::DeltaGeneric, oracle), true)
    }

    /// Coefficients at a rational `δ`. Products stay single terms, so generator
    /// closure is exact whenever `δ ≠ 0`.
    pub fn algebra_at(self: &Arc<Self>, delta: &BigRational) -> BasedAlgebra<BigRational> {
        let me = Arc::clone(self);
        let d = delta.clone();
        let oracle = Arc::new(move |i: usize, j: usize| {
            let (k, p) = me.product(i, j);
            vec![(num_traits::pow(d.clone(), k), p)]
        });
        self.decorate(BasedAlgebra::new(self.len(), RingTag::DeltaAt(delta.clone()), oracle), !delta.is_zero())
    }
}
