use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::counts::apexes_where;
use super::gram::{gram_matrix, GramMatrix};
use super::SandwichError;
use crate::based_cells::DeltaSpec;
use crate::diagrams::{enumerate, in_family, multiply, recompose, DiagramFamily, HalfDiagram, PartitionDiagram};
use crate::exact_arith::{fmt_rational, rank_rational, ExactMatrix};
use crate::exec::Exec;
use crate::symgroup_kit::{
    all_permutations, central_idempotent, partitions, regular_representation, GroupAlgebraElem, Permutation, SymGroup,
    YoungPartition, MAX_ALGEBRA_DEGREE,
};

/// Isomorphism type of the algebra an H-cell carries.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Sandwiched {
    Trivial,
    SymmetricGroup(usize),
}

/// A strict idempotent `T·π⁻¹·B` with `e·e = δ^loops·e`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pub top: HalfDiagram,
    pub bottom: HalfDiagram,
    pub middle: Permutation,
    pub loops: usize,
    pub diagram: PartitionDiagram,
}

#[derive(Clone, Debug)]
pub struct SandwichedAlgebra {
    pub descriptor: Sandwiched,
    pub witness: Witness,
    /// Elements of the H-cell of the witness.
    pub elements: Vec<PartitionDiagram>,
}

fn delta_is_zero(delta: &DeltaSpec) -> bool {
    matches!(delta, DeltaSpec::Value(d) if d.is_zero())
}

fn witness(g: &GramMatrix, delta_zero: bool) -> Option<Witness> {
    for (i, row) in g.entries.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            let Some((k, pi)) = e else { continue };
            if delta_zero && *k > 0 {
                continue;
            }
            let middle = pi.inverse();
            let diagram = recompose(&g.tops[i], &middle, &g.bottoms[j]).ok()?;
            return Some(Witness { top: g.tops[i].clone(), bottom: g.bottoms[j].clone(), middle, loops: *k, diagram });
        }
    }
    None
}

/// Identify the sandwiched algebra of J-cell `lambda`.
///
/// Builds the H-cell of a strict idempotent, checks the group axioms on its
/// multiplication table (products rescaled by the eigenvalue), and checks that
/// `T·σ·B ↦ σ∘π` is a bijective homomorphism onto `S_λ`.
pub fn sandwiched_algebra(
    family: DiagramFamily,
    n: usize,
    lambda: usize,
    delta: &DeltaSpec,
) -> Result<SandwichedAlgebra, SandwichError> {
    let g = gram_matrix(family, n, lambda)?;
    let w =
        witness(&g, delta_is_zero(delta)).ok_or_else(|| SandwichError::NotApex { lambda, delta: delta.to_string() })?;
    let pi = w.middle.inverse();
    let mut middles = Vec::new();
    let mut elements = Vec::new();
    for sigma in all_permutations(lambda) {
        let d = recompose(&w.top, &sigma, &w.bottom)?;
        if in_family(&d, family) {
            middles.push(sigma);
            elements.push(d);
        }
    }
    let index: HashMap<&PartitionDiagram, usize> = elements.iter().enumerate().map(|(i, d)| (d, i)).collect();
    let h = elements.len();
    let fail = |msg: String| SandwichError::Isomorphism(msg);

    let mut table = vec![vec![0usize; h]; h];
    for a in 0..h {
        for b in 0..h {
            let (k, p) = multiply(&elements[a], &elements[b])?;
            if k != w.loops {
                return Err(fail(format!("product closes {k} loops, witness closes {}", w.loops)));
            }
            table[a][b] = *index.get(&p).ok_or_else(|| fail("H-cell not closed under products".into()))?;
        }
    }
    let unit = index[&w.diagram];
    if (0..h).any(|a| table[unit][a] != a || table[a][unit] != a) {
        return Err(fail("witness is not a two-sided unit".into()));
    }
    if (0..h).any(|a| !(0..h).any(|b| table[a][b] == unit)) {
        return Err(fail("an element has no inverse".into()));
    }
    for a in 0..h {
        for b in 0..h {
            for c in 0..h {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(fail("table is not associative".into()));
                }
            }
        }
    }
    let phi: Vec<Permutation> = middles.iter().map(|s| Permutation::compose(s, &pi)).collect();
    for a in 0..h {
        for b in 0..h {
            if phi[table[a][b]] != Permutation::compose(&phi[a], &phi[b]) {
                return Err(fail("middle-permutation map is not multiplicative".into()));
            }
        }
    }
    let mut images = phi.clone();
    images.sort();
    images.dedup();
    let descriptor = if h == 1 {
        Sandwiched::Trivial
    } else if images.len() == h && h == crate::symgroup_kit::factorial(lambda) {
        Sandwiched::SymmetricGroup(lambda)
    } else {
        return Err(fail(format!("H-cell of size {h} is neither trivial nor S_{lambda}")));
    };
    Ok(SandwichedAlgebra { descriptor, witness: w, elements })
}

/// Whether simples with apex `lambda` are labelled by a single "unit".
pub fn has_trivial_sandwich(family: DiagramFamily, lambda: usize) -> bool {
    family.is_planar() || lambda <= 1
}

/// Dimension of the simple module with apex `lambda` and label `chi` at a
/// rational `δ`, in characteristic zero.
///
/// For a trivial sandwiched algebra this is the Gram rank. Otherwise the
/// sandwich matrix over `ℚ[S_λ]` is cut down by the central idempotent of
/// `chi` and pushed through the regular representation; its rank is
/// `χ(1)` times the dimension.
pub fn simple_dimension(
    family: DiagramFamily,
    n: usize,
    lambda: usize,
    chi: Option<&YoungPartition>,
    delta: &BigRational,
) -> Result<usize, SandwichError> {
    simple_dimension_with(&gram_matrix(family, n, lambda)?, chi, delta, Exec::default())
}

pub fn simple_dimension_with(
    g: &GramMatrix,
    chi: Option<&YoungPartition>,
    delta: &BigRational,
    exec: Exec,
) -> Result<usize, SandwichError> {
    let lambda = g.lambda;
    if !g.has_nonzero_entry(delta.is_zero()) {
        return Err(SandwichError::NotApex { lambda, delta: fmt_rational(delta) });
    }
    if has_trivial_sandwich(g.family, lambda) {
        return Ok(rank_rational(&g.at(delta), exec));
    }
    if lambda > MAX_ALGEBRA_DEGREE {
        return Err(SandwichError::LambdaTooLarge(lambda));
    }
    let chi = chi.ok_or(SandwichError::MissingShape(lambda))?;
    if chi.size() != lambda {
        return Err(SandwichError::BadShape { shape: chi.to_string(), lambda });
    }
    let group = SymGroup::get(lambda)?;
    let e_chi = central_idempotent(chi, lambda)?;
    let mut blocks: HashMap<usize, ExactMatrix<BigRational>> = HashMap::new();
    for (_, pi) in g.entries.iter().flatten().flatten() {
        let idx = group.index_of(pi);
        if let std::collections::hash_map::Entry::Vacant(slot) = blocks.entry(idx) {
            let x = GroupAlgebraElem::basis(lambda, idx, BigRational::from_integer(1.into())).mul(&e_chi)?;
            slot.insert(regular_representation(&x)?);
        }
    }
    let m = group.order();
    let powers: Vec<BigRational> = (0..=g.n).map(|k| num_traits::pow(delta.clone(), k)).collect();
    let big = ExactMatrix::from_fn_exec(exec, g.rows() * m, g.cols() * m, |r, c| match &g.entries[r / m][c / m] {
        None => BigRational::zero(),
        Some((k, pi)) => &powers[*k] * blocks[&group.index_of(pi)].get(r % m, c % m),
    });
    let rank = rank_rational(&big, exec);
    let dim = chi.dimension() as usize;
    debug_assert_eq!(rank % dim, 0);
    Ok(rank / dim)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SimpleEntry {
    pub apex: usize,
    /// A partition such as `(2,1)`, or `unit` for a trivial sandwiched algebra.
    pub label: String,
    /// `None` when the apex is beyond the group-algebra bound.
    pub dim: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleTable {
    pub family: DiagramFamily,
    pub n: usize,
    pub delta: String,
    pub apexes: Vec<usize>,
    pub simples: Vec<SimpleEntry>,
    /// `Σ dim²`, when every dimension is known.
    pub sum_of_squares: Option<usize>,
}

/// All simple modules in characteristic zero at a rational `δ`, apexes from
/// the bottom of the J-order upward.
pub fn simple_table(family: DiagramFamily, n: usize, delta: &BigRational) -> Result<SimpleTable, SandwichError> {
    let apexes = apexes_where(family, n, delta.is_zero())?;
    let mut simples = Vec::new();
    for &lambda in &apexes {
        let g = gram_matrix(family, n, lambda)?;
        if has_trivial_sandwich(family, lambda) {
            let dim = simple_dimension_with(&g, None, delta, Exec::default())?;
            simples.push(SimpleEntry { apex: lambda, label: "unit".into(), dim: Some(dim) });
            continue;
        }
        for chi in partitions(lambda) {
            let dim = if lambda <= MAX_ALGEBRA_DEGREE {
                Some(simple_dimension_with(&g, Some(&chi), delta, Exec::default())?)
            } else {
                None
            };
            simples.push(SimpleEntry { apex: lambda, label: chi.to_string(), dim });
        }
    }
    let sum_of_squares = simples.iter().map(|s| s.dim.map(|d| d * d)).sum();
    Ok(SimpleTable { family, n, delta: fmt_rational(delta), apexes, simples, sum_of_squares })
}

/// Semisimple in characteristic zero: every J-cell is idempotent and the
/// squared simple dimensions add up to the size of the family.
pub fn semisimplicity_check(family: DiagramFamily, n: usize, delta: &BigRational) -> Result<bool, SandwichError> {
    let table = simple_table(family, n, delta)?;
    if table.apexes.len() != family.through_counts(n).len() {
        return Ok(false);
    }
    let size = enumerate(family, n)?.len();
    Ok(table.sum_of_squares == Some(size))
}

/// Left- and right-cell keys of one J-cell, with its sandwiched algebra when idempotent.
#[derive(Clone, Debug, Serialize)]
pub struct JCellDatum {
    pub lambda: usize,
    pub left_keys: Vec<String>,
    pub right_keys: Vec<String>,
    pub descriptor: Option<Sandwiched>,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SandwichDatum {
    pub family: DiagramFamily,
    pub n: usize,
    pub delta: String,
    pub cells: Vec<JCellDatum>,
}

pub fn sandwich_datum(family: DiagramFamily, n: usize, delta: &DeltaSpec) -> Result<SandwichDatum, SandwichError> {
    let mut cells = Vec::new();
    for lambda in family.through_counts(n).into_iter().rev() {
        let g = gram_matrix(family, n, lambda)?;
        let (descriptor, witness) = match sandwiched_algebra(family, n, lambda, delta) {
            Ok(s) => (Some(s.descriptor), Some(s.witness.diagram.render())),
            Err(SandwichError::NotApex { .. }) => (None, None),
            Err(e) => return Err(e),
        };
        cells.push(JCellDatum {
            lambda,
            left_keys: g.bottoms.iter().map(HalfDiagram::render).collect(),
            right_keys: g.tops.iter().map(HalfDiagram::render).collect(),
            descriptor,
            witness,
        });
    }
    Ok(SandwichDatum { family, n, delta: delta.to_string(), cells })
}
