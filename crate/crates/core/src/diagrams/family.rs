use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::diagram::PartitionDiagram;
use crate::symgroup_kit::all_permutations;

/// The twelve diagram monoids.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum DiagramFamily {
    FullTransformation,
    PlanarTransformation,
    Partition,
    PlanarPartition,
    RookBrauer,
    Motzkin,
    Brauer,
    TemperleyLieb,
    Rook,
    PlanarRook,
    Symmetric,
    PlanarSymmetric,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family {0:?} (expected one of t, pt, p, pp, robr, mo, br, tl, ro, pro, sym, psym)")]
    Unknown(String),
    #[error("{family}: n = {n} exceeds the enumeration bound {bound}")]
    BoundExceeded { family: DiagramFamily, n: usize, bound: usize },
}

/// Which row a half diagram lives on.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Bottom,
    Top,
}

impl DiagramFamily {
    pub const ALL: [DiagramFamily; 12] = [
        DiagramFamily::FullTransformation,
        DiagramFamily::PlanarTransformation,
        DiagramFamily::Partition,
        DiagramFamily::PlanarPartition,
        DiagramFamily::RookBrauer,
        DiagramFamily::Motzkin,
        DiagramFamily::Brauer,
        DiagramFamily::TemperleyLieb,
        DiagramFamily::Rook,
        DiagramFamily::PlanarRook,
        DiagramFamily::Symmetric,
        DiagramFamily::PlanarSymmetric,
    ];

    /// The ten families closed under the antiinvolution (all but the transformation monoids).
    pub const INVOLUTIVE: [DiagramFamily; 10] = [
        DiagramFamily::Partition,
        DiagramFamily::PlanarPartition,
        DiagramFamily::RookBrauer,
        DiagramFamily::Motzkin,
        DiagramFamily::Brauer,
        DiagramFamily::TemperleyLieb,
        DiagramFamily::Rook,
        DiagramFamily::PlanarRook,
        DiagramFamily::Symmetric,
        DiagramFamily::PlanarSymmetric,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            DiagramFamily::FullTransformation => "t",
            DiagramFamily::PlanarTransformation => "pt",
            DiagramFamily::Partition => "p",
            DiagramFamily::PlanarPartition => "pp",
            DiagramFamily::RookBrauer => "robr",
            DiagramFamily::Motzkin => "mo",
            DiagramFamily::Brauer => "br",
            DiagramFamily::TemperleyLieb => "tl",
            DiagramFamily::Rook => "ro",
            DiagramFamily::PlanarRook => "pro",
            DiagramFamily::Symmetric => "sym",
            DiagramFamily::PlanarSymmetric => "psym",
        }
    }

    pub fn is_planar(self) -> bool {
        matches!(
            self,
            DiagramFamily::PlanarTransformation
                | DiagramFamily::PlanarPartition
                | DiagramFamily::Motzkin
                | DiagramFamily::TemperleyLieb
                | DiagramFamily::PlanarRook
                | DiagramFamily::PlanarSymmetric
        )
    }

    /// Closed under the antiinvolution.
    pub fn is_involutive(self) -> bool {
        !matches!(self, DiagramFamily::FullTransformation | DiagramFamily::PlanarTransformation)
    }

    pub fn is_transformation(self) -> bool {
        !self.is_involutive()
    }

    /// Largest `n` accepted by [`enumerate`].
    pub fn enumeration_bound(self) -> usize {
        match self {
            DiagramFamily::Partition => 4,
            DiagramFamily::Brauer
            | DiagramFamily::FullTransformation
            | DiagramFamily::PlanarPartition
            | DiagramFamily::RookBrauer => 6,
            _ => 8,
        }
    }

    /// Possible through-strand counts, ascending.
    pub fn through_counts(self, n: usize) -> Vec<usize> {
        match self {
            DiagramFamily::Brauer | DiagramFamily::TemperleyLieb => (0..=n).filter(|l| (n - l) % 2 == 0).collect(),
            DiagramFamily::Symmetric | DiagramFamily::PlanarSymmetric => vec![n],
            DiagramFamily::FullTransformation | DiagramFamily::PlanarTransformation => {
                if n == 0 {
                    vec![0]
                } else {
                    (1..=n).collect()
                }
            }
            _ => (0..=n).collect(),
        }
    }

    /// Block-shape predicate, without planarity.
    fn block_ok(self, bottoms: usize, tops: usize) -> bool {
        let size = bottoms + tops;
        match self {
            DiagramFamily::FullTransformation | DiagramFamily::PlanarTransformation => tops == 1,
            DiagramFamily::Partition | DiagramFamily::PlanarPartition => true,
            DiagramFamily::RookBrauer | DiagramFamily::Motzkin => size <= 2,
            DiagramFamily::Brauer | DiagramFamily::TemperleyLieb => size == 2,
            DiagramFamily::Rook | DiagramFamily::PlanarRook => size == 1 || (bottoms == 1 && tops == 1),
            DiagramFamily::Symmetric | DiagramFamily::PlanarSymmetric => bottoms == 1 && tops == 1,
        }
    }
}

impl fmt::Display for DiagramFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for DiagramFamily {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DiagramFamily::ALL
            .into_iter()
            .find(|f| f.short_name() == s.trim())
            .ok_or_else(|| FamilyError::Unknown(s.to_string()))
    }
}

/// Membership predicate.
pub fn in_family(a: &PartitionDiagram, family: DiagramFamily) -> bool {
    if !a.block_profile().iter().all(|&(b, t)| family.block_ok(b, t)) {
        return false;
    }
    if family == DiagramFamily::PlanarSymmetric {
        return *a == PartitionDiagram::identity(a.n());
    }
    !family.is_planar() || a.is_planar()
}

/// All members of the family on `n` strands, in canonical order.
pub fn enumerate(family: DiagramFamily, n: usize) -> Result<Vec<PartitionDiagram>, FamilyError> {
    let bound = family.enumeration_bound();
    if n > bound {
        return Err(FamilyError::BoundExceeded { family, n, bound });
    }
    let mut out = match family {
        DiagramFamily::Partition => set_partitions(2 * n, usize::MAX)
            .into_iter()
            .map(|ids| PartitionDiagram::from_rgs_unchecked(n, ids))
            .collect(),
        DiagramFamily::RookBrauer => {
            set_partitions(2 * n, 2).into_iter().map(|ids| PartitionDiagram::from_rgs_unchecked(n, ids)).collect()
        }
        DiagramFamily::Brauer => {
            perfect_matchings(2 * n).into_iter().map(|ids| PartitionDiagram::from_block_ids(n, &ids)).collect()
        }
        DiagramFamily::Symmetric => all_permutations(n)
            .iter()
            .map(|p| {
                let ids: Vec<usize> = p.images().iter().copied().chain(0..n).collect();
                PartitionDiagram::from_block_ids(n, &ids)
            })
            .collect(),
        DiagramFamily::PlanarSymmetric => vec![PartitionDiagram::identity(n)],
        DiagramFamily::FullTransformation => words(n, false),
        DiagramFamily::PlanarTransformation => words(n, true),
        DiagramFamily::Rook => rook_diagrams(n),
        DiagramFamily::PlanarPartition
        | DiagramFamily::Motzkin
        | DiagramFamily::TemperleyLieb
        | DiagramFamily::PlanarRook => planar_diagrams(family, n),
    };
    out.sort();
    Ok(out)
}

/// Restricted growth strings of length `m` with blocks of size at most `max_block`.
pub(crate) fn set_partitions(m: usize, max_block: usize) -> Vec<Vec<u8>> {
    fn go(k: usize, m: usize, max: usize, cur: &mut Vec<u8>, sizes: &mut Vec<usize>, out: &mut Vec<Vec<u8>>) {
        if k == m {
            out.push(cur.clone());
            return;
        }
        for b in 0..sizes.len() {
            if sizes[b] < max {
                sizes[b] += 1;
                cur.push(b as u8);
                go(k + 1, m, max, cur, sizes, out);
                cur.pop();
                sizes[b] -= 1;
            }
        }
        sizes.push(1);
        cur.push((sizes.len() - 1) as u8);
        go(k + 1, m, max, cur, sizes, out);
        cur.pop();
        sizes.pop();
    }
    let mut out = Vec::new();
    go(0, m, max_block, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Perfect matchings of `m` points as block ids.
fn perfect_matchings(m: usize) -> Vec<Vec<usize>> {
    fn go(ids: &mut Vec<Option<usize>>, next: usize, out: &mut Vec<Vec<usize>>) {
        let Some(first) = ids.iter().position(|x| x.is_none()) else {
            out.push(ids.iter().map(|x| x.unwrap()).collect());
            return;
        };
        ids[first] = Some(next);
        for j in first + 1..ids.len() {
            if ids[j].is_none() {
                ids[j] = Some(next);
                go(ids, next + 1, out);
                ids[j] = None;
            }
        }
        ids[first] = None;
    }
    let mut out = Vec::new();
    if m % 2 == 0 {
        go(&mut vec![None; m], 0, &mut out);
    }
    out
}

/// All transformations (or the order-preserving ones) as diagrams.
fn words(n: usize, nondecreasing: bool) -> Vec<PartitionDiagram> {
    fn go(n: usize, nd: bool, cur: &mut Vec<usize>, out: &mut Vec<PartitionDiagram>) {
        if cur.len() == n {
            let ids: Vec<usize> = cur.iter().copied().chain(0..n).collect();
            out.push(PartitionDiagram::from_block_ids(n, &ids));
            return;
        }
        let lo = if nd { cur.last().copied().unwrap_or(0) } else { 0 };
        for x in lo..n {
            cur.push(x);
            go(n, nd, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, nondecreasing, &mut Vec::new(), &mut out);
    out
}

/// Partial bijections from bottom to top.
fn rook_diagrams(n: usize) -> Vec<PartitionDiagram> {
    fn go(i: usize, n: usize, used: &mut Vec<bool>, map: &mut Vec<Option<usize>>, out: &mut Vec<PartitionDiagram>) {
        if i == n {
            // Block ids: matched bottom i shares id with its top; everything else is a singleton.
            let mut ids = vec![0usize; 2 * n];
            let mut next = n;
            for j in 0..n {
                ids[n + j] = usize::MAX;
            }
            for (b, t) in map.iter().enumerate() {
                ids[b] = b;
                if let Some(t) = t {
                    ids[n + t] = b;
                }
            }
            for j in 0..n {
                if ids[n + j] == usize::MAX {
                    ids[n + j] = next;
                    next += 1;
                }
            }
            out.push(PartitionDiagram::from_block_ids(n, &ids));
            return;
        }
        map.push(None);
        go(i + 1, n, used, map, out);
        map.pop();
        for t in 0..n {
            if !used[t] {
                used[t] = true;
                map.push(Some(t));
                go(i + 1, n, used, map, out);
                map.pop();
                used[t] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// Noncrossing generation over boundary positions (bottom `i` at `i`, top `j` at `2n−1−j`)
/// with a stack of open blocks; shape constraints prune as blocks close.
fn planar_diagrams(family: DiagramFamily, n: usize) -> Vec<PartitionDiagram> {
    let m = 2 * n;
    let (max_size, min_size, cross_only) = match family {
        DiagramFamily::PlanarPartition => (usize::MAX, 1, false),
        DiagramFamily::Motzkin => (2, 1, false),
        DiagramFamily::TemperleyLieb => (2, 2, false),
        DiagramFamily::PlanarRook => (2, 1, true),
        _ => unreachable!("not a planar partition-type family"),
    };
    struct State {
        ids: Vec<u8>,
        sizes: Vec<usize>,
        first: Vec<usize>,
        stack: Vec<u8>,
    }
    #[allow(clippy::too_many_arguments)]
    fn go(p: usize, m: usize, n: usize, max: usize, min: usize, cross: bool, st: &mut State, out: &mut Vec<Vec<u8>>) {
        if p == m {
            if st.stack.iter().all(|&b| st.sizes[b as usize] >= min) {
                out.push(st.ids.clone());
            }
            return;
        }
        // Join an open block; every block opened after it closes.
        for depth in (0..st.stack.len()).rev() {
            let b = st.stack[depth] as usize;
            if st.sizes[b] >= max {
                continue;
            }
            if cross && (st.first[b] < n) == (p < n) {
                continue;
            }
            let closed = &st.stack[depth + 1..];
            if closed.iter().any(|&c| st.sizes[c as usize] < min) {
                continue;
            }
            let saved: Vec<u8> = st.stack.drain(depth + 1..).collect();
            st.sizes[b] += 1;
            st.ids.push(b as u8);
            go(p + 1, m, n, max, min, cross, st, out);
            st.ids.pop();
            st.sizes[b] -= 1;
            st.stack.extend(saved);
        }
        // Open a new block.
        let b = st.sizes.len();
        st.sizes.push(1);
        st.first.push(p);
        st.stack.push(b as u8);
        st.ids.push(b as u8);
        go(p + 1, m, n, max, min, cross, st, out);
        st.ids.pop();
        st.stack.pop();
        st.first.pop();
        st.sizes.pop();
    }
    let mut st = State { ids: Vec::new(), sizes: Vec::new(), first: Vec::new(), stack: Vec::new() };
    let mut raw = Vec::new();
    go(0, m, n, max_size, min_size, cross_only, &mut st, &mut raw);
    raw.into_iter()
        .map(|by_pos| {
            let ids: Vec<u8> = (0..m).map(|k| if k < n { by_pos[k] } else { by_pos[m - 1 - (k - n)] }).collect();
            PartitionDiagram::from_block_ids(n, &ids)
        })
        .collect()
}

/// Every partition of `2n` points filtered by [`in_family`]; the slow reference
/// enumeration used to cross-check the constructive generators.
pub fn enumerate_by_filtering(family: DiagramFamily, n: usize) -> Vec<PartitionDiagram> {
    assert!(n <= 4);
    let mut out: Vec<PartitionDiagram> = set_partitions(2 * n, usize::MAX)
        .into_iter()
        .map(|ids| PartitionDiagram::from_rgs_unchecked(n, ids))
        .filter(|d| in_family(d, family))
        .collect();
    out.sort();
    out
}

/// A standard monoid generating set for the family (the identity is implicit).
pub fn generators(family: DiagramFamily, n: usize) -> Vec<PartitionDiagram> {
    use DiagramFamily as F;
    let base = || -> Vec<usize> { (0..n).chain(0..n).collect() };
    let fresh = 2 * n;
    // Block-id surgery on the identity; ids ≥ 2n are new singleton blocks.
    let swap = |i: usize| {
        let mut ids = base();
        ids.swap(i, i + 1);
        ids
    };
    let cup = |i: usize| {
        let mut ids = base();
        ids[i + 1] = i;
        ids[n + i] = fresh;
        ids[n + i + 1] = fresh;
        ids
    };
    let cut = |i: usize| {
        let mut ids = base();
        ids[n + i] = fresh;
        ids
    };
    let merge = |i: usize| {
        let mut ids = base();
        ids[i + 1] = i;
        ids[n + i + 1] = i;
        ids
    };
    // Bottom i+1 to top i (left) or bottom i to top i+1 (right), the rest loose.
    let shift = |i: usize, left: bool| {
        let mut ids = base();
        if left {
            ids[i + 1] = i;
            ids[i] = fresh;
            ids[n + i + 1] = fresh + 1;
        } else {
            ids[i] = i + 1;
            ids[i + 1] = fresh;
            ids[n + i] = fresh + 1;
        }
        ids
    };
    let pairs = n.saturating_sub(1);
    let mut out: Vec<Vec<usize>> = Vec::new();
    match family {
        F::PlanarSymmetric => {}
        F::Symmetric => out.extend((0..pairs).map(swap)),
        F::TemperleyLieb => out.extend((0..pairs).map(cup)),
        F::Brauer => {
            out.extend((0..pairs).map(swap));
            out.extend((0..pairs).take(1).map(cup));
        }
        F::Rook => {
            out.extend((0..pairs).map(swap));
            out.extend((0..n).take(1).map(cut));
        }
        F::PlanarRook => {
            out.extend((0..n).map(cut));
            out.extend((0..pairs).map(|i| shift(i, true)));
            out.extend((0..pairs).map(|i| shift(i, false)));
        }
        F::Motzkin => {
            out.extend((0..n).map(cut));
            out.extend((0..pairs).map(cup));
            out.extend((0..pairs).map(|i| shift(i, true)));
            out.extend((0..pairs).map(|i| shift(i, false)));
        }
        F::RookBrauer => {
            out.extend((0..pairs).map(swap));
            out.extend((0..pairs).take(1).map(cup));
            out.extend((0..n).take(1).map(cut));
        }
        F::Partition => {
            out.extend((0..pairs).map(swap));
            out.extend((0..n).take(1).map(cut));
            out.extend((0..pairs).take(1).map(merge));
        }
        F::PlanarPartition => {
            out.extend((0..n).map(cut));
            out.extend((0..pairs).map(merge));
        }
        F::FullTransformation => {
            out.extend((0..pairs).map(swap));
            // Bottom 1 joins top 0: the rank n−1 idempotent.
            out.extend((0..pairs).take(1).map(|_| {
                let mut ids = base();
                ids[1] = 0;
                ids
            }));
        }
        F::PlanarTransformation => {
            for i in 0..pairs {
                let mut down = base();
                down[i + 1] = i;
                out.push(down);
                let mut up = base();
                up[i] = i + 1;
                out.push(up);
            }
        }
    }
    let mut gens: Vec<PartitionDiagram> = out.iter().map(|ids| PartitionDiagram::from_block_ids(n, ids)).collect();
    gens.sort();
    gens.dedup();
    gens
}
