use serde::Serialize;

use super::algebra::{BasedAlgebra, SparseVec};
use super::engine::CellStructure;
use crate::exact_arith::Scalar;
use crate::exec::Exec;

/// How [`higher_ideal_reduce`] treats components outside the target J-cell.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReduceMode {
    /// Drop only components strictly above the J-cell.
    ModIdeal,
    /// Keep only components inside the J-cell.
    InCell,
}

impl std::str::FromStr for ReduceMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mod-ideal" => Ok(ReduceMode::ModIdeal),
            "in-cell" => Ok(ReduceMode::InCell),
            _ => Err(format!("unknown reduce mode {s:?} (expected mod-ideal or in-cell)")),
        }
    }
}

pub fn higher_ideal_reduce<C: Clone, D>(
    cs: &CellStructure<D>,
    x: &SparseVec<C>,
    j: usize,
    mode: ReduceMode,
) -> SparseVec<C> {
    x.iter()
        .filter(|(_, b)| {
            let jb = cs.jcell_of[*b];
            match mode {
                ReduceMode::ModIdeal => !cs.is_above(jb, j),
                ReduceMode::InCell => jb == j,
            }
        })
        .cloned()
        .collect()
}

/// Elements `e` of the H-cell with `e·e ≡ s·e` modulo the ideal above, `s ≠ 0`.
pub fn strict_idempotents<C: Scalar, D: Sync>(
    alg: &BasedAlgebra<C>,
    cs: &CellStructure<D>,
    h: &[usize],
    exec: Exec,
) -> Vec<(usize, C)> {
    exec.map_slice(h, |&e| {
        let sq = alg.mul(e, e);
        let reduced = higher_ideal_reduce(cs, &sq, cs.jcell_of[e], ReduceMode::ModIdeal);
        match reduced.as_slice() {
            [(s, k)] if *k == e && !s.is_zero_s() => Some((e, s.clone())),
            _ => None,
        }
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Per J-cell outcome of [`verify_sandwich_pair`].
#[derive(Clone, Debug, Serialize)]
pub struct JCellCheck {
    pub jcell: usize,
    pub left_sizes_equal: bool,
    pub right_sizes_equal: bool,
    pub h_sizes_equal: bool,
    pub product_identity: bool,
    /// `None` without a star.
    pub star_ok: Option<bool>,
}

impl JCellCheck {
    pub fn pass(&self) -> bool {
        self.left_sizes_equal
            && self.right_sizes_equal
            && self.h_sizes_equal
            && self.product_identity
            && self.star_ok.unwrap_or(true)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SandwichReport {
    pub pass: bool,
    pub first_failure: Option<String>,
    pub jcells: Vec<JCellCheck>,
}

/// Numerical sandwich conditions on every J-cell, plus the star bijection when present.
pub fn verify_sandwich_pair<C, D>(alg: &BasedAlgebra<C>, cs: &CellStructure<D>) -> SandwichReport {
    let all_equal = |v: Vec<usize>| v.windows(2).all(|w| w[0] == w[1]);
    let mut checks = Vec::new();
    let mut first_failure = None;
    for (j, cell) in cs.jcells.iter().enumerate() {
        let h_sizes: Vec<usize> = cell.h_sizes().into_iter().flatten().collect();
        let h = h_sizes.first().copied().unwrap_or(0);
        let star_ok = alg.star.as_ref().map(|star| {
            let mut images: Vec<Vec<usize>> = cell
                .left_cells
                .iter()
                .map(|l| {
                    let mut img: Vec<usize> = l.iter().map(|&x| star[x]).collect();
                    img.sort_unstable();
                    img
                })
                .collect();
            images.sort();
            let mut rights = cell.right_cells.clone();
            rights.sort();
            images == rights && cell.left_cells.len() == cell.right_cells.len()
        });
        let check = JCellCheck {
            jcell: j,
            left_sizes_equal: all_equal(cell.left_cells.iter().map(Vec::len).collect()),
            right_sizes_equal: all_equal(cell.right_cells.iter().map(Vec::len).collect()),
            h_sizes_equal: all_equal(h_sizes.clone()),
            product_identity: cell.elements.len() == cell.left_cells.len() * h * cell.right_cells.len(),
            star_ok,
        };
        if first_failure.is_none() && !check.pass() {
            first_failure = Some(format!(
                "J-cell {j} (first element {}): H-cell sizes {:?}, left cell sizes {:?}, right cell sizes {:?}",
                cell.elements[0],
                cell.h_sizes(),
                cell.left_cells.iter().map(Vec::len).collect::<Vec<_>>(),
                cell.right_cells.iter().map(Vec::len).collect::<Vec<_>>(),
            ));
        }
        checks.push(check);
    }
    SandwichReport { pass: first_failure.is_none(), first_failure, jcells: checks }
}

/// Every J-cell is idempotent or has H-cells of size one.
pub fn is_admissible_monoid<C>(cs: &CellStructure<C>) -> bool {
    cs.jcells.iter().all(|j| j.is_idempotent() || j.h_grid.iter().flatten().all(|h| h.len() == 1))
}
