use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use super::algebra::{BasedAlgebra, CellError, MAX_BASIS_FULL, MAX_BASIS_GENERATORS};
use super::idempotents::strict_idempotents;
use crate::exact_arith::Scalar;
use crate::exec::Exec;

/// Left and right neighbour lists of one basis element.
type Pick = dyn Fn(&(Vec<usize>, Vec<usize>)) -> Vec<usize>;

/// Which multipliers span the reachability graphs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Closure {
    /// Generators when they are given and structure constants are nonnegative.
    Auto,
    Generators,
    FullBasis,
}

/// Idempotency status of one H-cell.
#[derive(Clone, PartialEq, Debug)]
pub enum HCellStatus<C> {
    /// Basis elements `e` with `e·e ≡ s·e` modulo higher terms, `s ≠ 0`.
    Strict(Vec<(usize, C)>),
    NoneDetected,
}

impl<C> HCellStatus<C> {
    pub fn is_strict(&self) -> bool {
        matches!(self, HCellStatus::Strict(_))
    }
}

/// One two-sided cell with its egg-box.
#[derive(Clone, Debug)]
pub struct JCell<C> {
    pub elements: Vec<usize>,
    pub left_cells: Vec<Vec<usize>>,
    pub right_cells: Vec<Vec<usize>>,
    /// `h_grid[r][c]` = right cell `r` ∩ left cell `c`.
    pub h_grid: Vec<Vec<Vec<usize>>>,
    pub status: Vec<Vec<HCellStatus<C>>>,
    /// Length of the longest chain of J-cells strictly below.
    pub order_rank: usize,
}

impl<C> JCell<C> {
    pub fn is_idempotent(&self) -> bool {
        self.status.iter().flatten().any(|s| s.is_strict())
    }

    /// Sizes of all H-cells, row by row.
    pub fn h_sizes(&self) -> Vec<Vec<usize>> {
        self.h_grid.iter().map(|row| row.iter().map(Vec::len).collect()).collect()
    }
}

/// Cells of a based algebra. J-cells and left cells are sorted by least basis
/// index; with a star, row `k` is the star image of column `k`, otherwise rows
/// are sorted the same way.
#[derive(Clone, Debug)]
pub struct CellStructure<C> {
    pub basis_size: usize,
    pub jcells: Vec<JCell<C>>,
    /// J-cell index of each basis element.
    pub jcell_of: Vec<usize>,
    /// `above[j][k]`: J-cell `k` lies strictly above `j`.
    pub above: Vec<Vec<bool>>,
    /// Hasse diagram of the J-order as (lower, upper) pairs.
    pub covers: Vec<(usize, usize)>,
    pub used_generators: bool,
}

impl<C> CellStructure<C> {
    pub fn num_left_cells(&self) -> usize {
        self.jcells.iter().map(|j| j.left_cells.len()).sum()
    }

    pub fn num_right_cells(&self) -> usize {
        self.jcells.iter().map(|j| j.right_cells.len()).sum()
    }

    /// J-cells with nothing above them.
    pub fn maximal_jcells(&self) -> Vec<usize> {
        (0..self.jcells.len()).filter(|&j| !self.above[j].iter().any(|&b| b)).collect()
    }

    /// J-cells with nothing below them.
    pub fn minimal_jcells(&self) -> Vec<usize> {
        (0..self.jcells.len()).filter(|&j| self.jcells[j].order_rank == 0).collect()
    }

    /// Strictly above in the J-order.
    pub fn is_above(&self, upper: usize, lower: usize) -> bool {
        self.above[lower][upper]
    }

    /// (row, column) of a basis element inside its J-cell's egg-box.
    pub fn position(&self, b: usize) -> (usize, usize) {
        let j = &self.jcells[self.jcell_of[b]];
        let row = j.right_cells.iter().position(|r| r.binary_search(&b).is_ok()).expect("element in a row");
        let col = j.left_cells.iter().position(|l| l.binary_search(&b).is_ok()).expect("element in a column");
        (row, col)
    }
}

/// [`compute_cells_with`] using [`Closure::Auto`] and the default executor.
pub fn compute_cells<C: Scalar>(alg: &BasedAlgebra<C>) -> Result<CellStructure<C>, CellError> {
    compute_cells_with(alg, Closure::Auto, Exec::default())
}

pub fn compute_cells_with<C: Scalar>(
    alg: &BasedAlgebra<C>,
    closure: Closure,
    exec: Exec,
) -> Result<CellStructure<C>, CellError> {
    let n = alg.basis_size;
    let use_gens = match closure {
        Closure::FullBasis => false,
        Closure::Generators => {
            if !alg.nonneg {
                return Err(CellError::GeneratorsNeedNonneg);
            }
            if alg.generators.is_none() {
                return Err(CellError::NoGenerators);
            }
            true
        }
        Closure::Auto => alg.nonneg && alg.generators.is_some(),
    };
    let bound = if use_gens { MAX_BASIS_GENERATORS } else { MAX_BASIS_FULL };
    if n > bound {
        return Err(CellError::BoundExceeded { size: n, bound });
    }
    let multipliers: Vec<usize> = if use_gens { alg.generators.clone().unwrap_or_default() } else { (0..n).collect() };

    // a ≤_l b when b occurs in c·a; a ≤_r b when b occurs in a·c.
    let edges: Vec<(Vec<usize>, Vec<usize>)> = exec.map_range(n, |a| {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for &c in &multipliers {
            left.extend(alg.support(c, a));
            right.extend(alg.support(a, c));
        }
        for v in [&mut left, &mut right] {
            v.sort_unstable();
            v.dedup();
            v.retain(|&b| b != a);
        }
        (left, right)
    });

    let build = |pick: &Pick| {
        let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, 0);
        for _ in 0..n {
            g.add_node(());
        }
        for (a, e) in edges.iter().enumerate() {
            for b in pick(e) {
                g.add_edge(NodeIndex::new(a), NodeIndex::new(b), ());
            }
        }
        g
    };
    let left_graph = build(&|e| e.0.clone());
    let right_graph = build(&|e| e.1.clone());
    let both_graph = build(&|e| e.0.iter().chain(&e.1).copied().collect());

    let left_cells = sorted_sccs(&left_graph);
    let right_cells = sorted_sccs(&right_graph);
    let j_sets = sorted_sccs(&both_graph);

    let mut jcell_of = vec![0; n];
    for (j, cell) in j_sets.iter().enumerate() {
        for &b in cell {
            jcell_of[b] = j;
        }
    }
    let nj = j_sets.len();
    let mut direct = vec![Vec::new(); nj];
    for (a, (l, r)) in edges.iter().enumerate() {
        for &b in l.iter().chain(r) {
            let (ja, jb) = (jcell_of[a], jcell_of[b]);
            if ja != jb {
                direct[ja].push(jb);
            }
        }
    }
    for d in direct.iter_mut() {
        d.sort_unstable();
        d.dedup();
    }
    let above = transitive_closure(&direct);
    let covers = hasse(&direct, &above);
    let order_rank = heights(&direct);

    let jcells: Vec<JCell<C>> = j_sets
        .into_iter()
        .enumerate()
        .map(|(j, elements)| {
            let lc: Vec<Vec<usize>> = left_cells.iter().filter(|c| jcell_of[c[0]] == j).cloned().collect();
            let mut rc: Vec<Vec<usize>> = right_cells.iter().filter(|c| jcell_of[c[0]] == j).cloned().collect();
            if let Some(star) = &alg.star {
                align_rows_with_star(&lc, &mut rc, star);
            }
            let h_grid = rc
                .iter()
                .map(|r| {
                    lc.iter().map(|l| r.iter().copied().filter(|x| l.binary_search(x).is_ok()).collect()).collect()
                })
                .collect();
            JCell { elements, left_cells: lc, right_cells: rc, h_grid, status: Vec::new(), order_rank: order_rank[j] }
        })
        .collect();

    let mut cs = CellStructure { basis_size: n, jcells, jcell_of, above, covers, used_generators: use_gens };
    // Idempotent search needs the finished order.
    let statuses: Vec<Vec<Vec<HCellStatus<C>>>> = cs
        .jcells
        .iter()
        .map(|j| {
            j.h_grid
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|h| {
                            let found = strict_idempotents(alg, &cs, h, exec);
                            if found.is_empty() {
                                HCellStatus::NoneDetected
                            } else {
                                HCellStatus::Strict(found)
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    for (j, st) in cs.jcells.iter_mut().zip(statuses) {
        j.status = st;
    }
    Ok(cs)
}

/// Put the star image of column `k` in row `k`, when star maps columns onto rows.
fn align_rows_with_star(lc: &[Vec<usize>], rc: &mut Vec<Vec<usize>>, star: &[usize]) {
    let images: Vec<Vec<usize>> = lc
        .iter()
        .map(|l| {
            let mut v: Vec<usize> = l.iter().map(|&x| star[x]).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let mut a = images.clone();
    let mut b = rc.clone();
    a.sort();
    b.sort();
    if a == b {
        *rc = images;
    }
}

fn sorted_sccs(g: &DiGraph<(), ()>) -> Vec<Vec<usize>> {
    let mut cells: Vec<Vec<usize>> = tarjan_scc(g)
        .into_iter()
        .map(|c| {
            let mut v: Vec<usize> = c.into_iter().map(|x| x.index()).collect();
            v.sort_unstable();
            v
        })
        .collect();
    cells.sort_by_key(|c| c[0]);
    cells
}

/// `out[j][k]` iff `k` is reachable from `j` by a nonempty path.
fn transitive_closure(direct: &[Vec<usize>]) -> Vec<Vec<bool>> {
    let m = direct.len();
    let mut out = vec![vec![false; m]; m];
    for start in 0..m {
        let mut stack: Vec<usize> = direct[start].clone();
        while let Some(x) = stack.pop() {
            if !out[start][x] {
                out[start][x] = true;
                stack.extend(&direct[x]);
            }
        }
    }
    out
}

fn hasse(direct: &[Vec<usize>], above: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (j, ups) in direct.iter().enumerate() {
        for &k in ups {
            let implied = ups.iter().any(|&m| m != k && above[m][k]);
            if !implied {
                out.push((j, k));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Longest chain strictly below each node of the DAG.
fn heights(direct: &[Vec<usize>]) -> Vec<usize> {
    let m = direct.len();
    let mut indeg = vec![0usize; m];
    for ups in direct {
        for &k in ups {
            indeg[k] += 1;
        }
    }
    let mut h = vec![0usize; m];
    let mut ready: Vec<usize> = (0..m).filter(|&j| indeg[j] == 0).collect();
    while let Some(j) = ready.pop() {
        for &k in &direct[j] {
            h[k] = h[k].max(h[j] + 1);
            indeg[k] -= 1;
            if indeg[k] == 0 {
                ready.push(k);
            }
        }
    }
    h
}
