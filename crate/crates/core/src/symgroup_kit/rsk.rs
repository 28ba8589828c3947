use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use super::partition::YoungPartition;
use super::perm::{all_permutations, PermError, Permutation};

/// Row-list tableau with 1-based entries.
pub type Tableau = Vec<Vec<usize>>;

pub fn shape_of(t: &Tableau) -> YoungPartition {
    YoungPartition::new(t.iter().map(|r| r.len()).collect())
}

/// Row-insertion Robinson–Schensted: `(P, Q)` = (insertion, recording) tableaux.
pub fn rsk(w: &Permutation) -> (Tableau, Tableau) {
    let mut p: Tableau = Vec::new();
    let mut q: Tableau = Vec::new();
    for (step, x) in w.one_line().into_iter().enumerate() {
        let mut x = x;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(i) => {
                    x = std::mem::replace(&mut p[row][i], x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(step + 1);
                    break;
                }
            }
        }
    }
    (p, q)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RskError {
    #[error("tableaux have different shapes or are not standard")]
    BadPair,
}

/// Inverse of [`rsk`].
pub fn inverse_rsk(p: &Tableau, q: &Tableau) -> Result<Permutation, RskError> {
    if shape_of(p) != shape_of(q) {
        return Err(RskError::BadPair);
    }
    let m: usize = p.iter().map(|r| r.len()).sum();
    let mut p = p.clone();
    let mut q = q.clone();
    let mut word = vec![0; m];
    for step in (1..=m).rev() {
        let row = q.iter().position(|r| r.last() == Some(&step)).ok_or(RskError::BadPair)?;
        q[row].pop();
        let mut x = p[row].pop().ok_or(RskError::BadPair)?;
        for r in (0..row).rev() {
            let i = p[r].iter().rposition(|&y| y < x).ok_or(RskError::BadPair)?;
            x = std::mem::replace(&mut p[r][i], x);
        }
        if p.last().is_some_and(|r| r.is_empty()) {
            p.pop();
            q.pop();
        }
        word[step - 1] = x;
    }
    Permutation::from_one_line(&word).map_err(|_| RskError::BadPair)
}

/// Largest `m` accepted by [`type_a_cells`].
pub const MAX_CELL_DEGREE: usize = 7;

/// Kazhdan–Lusztig cells of `S_m` read off from RSK.
///
/// Elements are lexicographic ranks. Left cells are fibers of `Q`, right cells
/// fibers of `P`, two-sided cells fibers of the common shape.
#[derive(Clone, Debug, Serialize)]
pub struct TypeACells {
    pub m: usize,
    pub left: Vec<Vec<usize>>,
    pub right: Vec<Vec<usize>>,
    pub two_sided: Vec<(YoungPartition, Vec<usize>)>,
    /// Number of standard tableaux per shape (the size of each left cell in that two-sided cell).
    pub shape_dims: Vec<(YoungPartition, usize)>,
}

pub fn type_a_cells(m: usize) -> Result<TypeACells, PermError> {
    if m > MAX_CELL_DEGREE {
        return Err(PermError::TooLarge(m, MAX_CELL_DEGREE));
    }
    let mut left: BTreeMap<Tableau, Vec<usize>> = BTreeMap::new();
    let mut right: BTreeMap<Tableau, Vec<usize>> = BTreeMap::new();
    let mut two: BTreeMap<YoungPartition, Vec<usize>> = BTreeMap::new();
    for (i, w) in all_permutations(m).iter().enumerate() {
        let (p, q) = rsk(w);
        two.entry(shape_of(&p)).or_default().push(i);
        left.entry(q).or_default().push(i);
        right.entry(p).or_default().push(i);
    }
    let sort_cells = |mut v: Vec<Vec<usize>>| {
        v.sort();
        v
    };
    let mut two_sided: Vec<(YoungPartition, Vec<usize>)> = two.into_iter().collect();
    two_sided.sort_by(|a, b| b.0.cmp(&a.0));
    let shape_dims = two_sided.iter().map(|(s, _)| (s.clone(), s.dimension() as usize)).collect();
    Ok(TypeACells {
        m,
        left: sort_cells(left.into_values().collect()),
        right: sort_cells(right.into_values().collect()),
        two_sided,
        shape_dims,
    })
}
