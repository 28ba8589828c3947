use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use super::diagram::{canonical_rgs, is_noncrossing, DiagramError, PartitionDiagram};
use super::family::{set_partitions, DiagramFamily, Side};
use crate::symgroup_kit::Permutation;

/// One row of a diagram: a set partition of `n` points, each part flagged
/// propagating (it met the other row) or not.
///
/// The derived order (points, then flags with `false < true`) is the canonical
/// order of halves.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct HalfDiagram {
    n: usize,
    rgs: Vec<u8>,
    prop: Vec<bool>,
}

impl HalfDiagram {
    /// `ids[i]` is the part of point `i`; `propagating(id)` flags a part by its id.
    pub fn from_parts<T: Copy + PartialEq>(ids: &[T], propagating: impl Fn(T) -> bool) -> Self {
        let rgs = canonical_rgs(ids);
        let parts = rgs.iter().map(|&x| x as usize + 1).max().unwrap_or(0);
        let mut prop = vec![false; parts];
        for (i, &r) in rgs.iter().enumerate() {
            prop[r as usize] = propagating(ids[i]);
        }
        HalfDiagram { n: ids.len(), rgs, prop }
    }

    pub(crate) fn from_raw(rgs: Vec<u8>, prop: Vec<bool>) -> Self {
        HalfDiagram { n: rgs.len(), rgs, prop }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    pub fn flags(&self) -> &[bool] {
        &self.prop
    }

    pub fn num_parts(&self) -> usize {
        self.prop.len()
    }

    /// Number of propagating parts.
    pub fn rank(&self) -> usize {
        self.prop.iter().filter(|&&p| p).count()
    }

    pub fn parts(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.prop.len()];
        for (i, &r) in self.rgs.iter().enumerate() {
            out[r as usize].push(i);
        }
        out
    }

    /// For each part, its port index among the propagating parts (in part order).
    fn ports(&self) -> Vec<Option<usize>> {
        let mut next = 0;
        self.prop
            .iter()
            .map(|&p| {
                p.then(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect()
    }

    /// Noncrossing, with no propagating part hidden under another part.
    pub fn is_planar(&self) -> bool {
        if !is_noncrossing(&self.rgs) {
            return false;
        }
        let mut prev: Vec<Option<usize>> = vec![None; self.prop.len()];
        for (p, &b) in self.rgs.iter().enumerate() {
            if let Some(q) = prev[b as usize] {
                if self.rgs[q + 1..p].iter().any(|&c| self.prop[c as usize]) {
                    return false;
                }
            }
            prev[b as usize] = Some(p);
        }
        true
    }

    pub fn render(&self) -> String {
        self.parts()
            .iter()
            .zip(&self.prop)
            .map(|(part, &p)| {
                let body = part.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
                if p {
                    format!("[{body}]")
                } else {
                    format!("({body})")
                }
            })
            .collect()
    }
}

impl fmt::Display for HalfDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for HalfDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

/// `d = top · middle · bottom`: the halves of `d` plus the permutation matching
/// bottom ports to top ports.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DiagramFactorization {
    pub top: HalfDiagram,
    pub middle: Permutation,
    pub bottom: HalfDiagram,
}

impl DiagramFactorization {
    pub fn rank(&self) -> usize {
        self.middle.degree()
    }
}

/// Split a diagram into its top half, its bottom half and the port permutation.
pub fn factorize(d: &PartitionDiagram) -> DiagramFactorization {
    let n = d.n();
    let rgs = d.rgs();
    let profile = d.block_profile();
    let through = |b: u8| {
        let (x, y) = profile[b as usize];
        x > 0 && y > 0
    };
    let bottom = HalfDiagram::from_parts(&rgs[..n], through);
    let top = HalfDiagram::from_parts(&rgs[n..], through);
    // Block id of each propagating part, in part order.
    let port_blocks = |half: &HalfDiagram, ids: &[u8]| -> Vec<u8> {
        half.parts().iter().zip(half.flags()).filter(|(_, &p)| p).map(|(part, _)| ids[part[0]]).collect()
    };
    let bottom_blocks = port_blocks(&bottom, &rgs[..n]);
    let top_blocks = port_blocks(&top, &rgs[n..]);
    let images: Vec<usize> = bottom_blocks
        .iter()
        .map(|b| top_blocks.iter().position(|t| t == b).expect("propagating block has a top part"))
        .collect();
    let middle = Permutation::from_images(images).expect("ports match bijectively");
    DiagramFactorization { top, middle, bottom }
}

/// Inverse of [`factorize`]. Fails when the ranks of the three pieces disagree.
pub fn recompose(
    top: &HalfDiagram,
    middle: &Permutation,
    bottom: &HalfDiagram,
) -> Result<PartitionDiagram, DiagramError> {
    if top.n != bottom.n {
        return Err(DiagramError::Mismatch(top.n, bottom.n));
    }
    if top.rank() != middle.degree() || bottom.rank() != middle.degree() {
        return Err(DiagramError::Mismatch(top.rank(), bottom.rank()));
    }
    let n = top.n;
    let top_ports = top.ports();
    let bottom_ports = bottom.ports();
    // Top part ids are shifted past the bottom ones; a bottom propagating part
    // borrows the id of the top part it is glued to.
    let shift = bottom.num_parts();
    let mut top_part_of_port = vec![0usize; middle.degree()];
    for (part, port) in top_ports.iter().enumerate() {
        if let Some(k) = port {
            top_part_of_port[*k] = part;
        }
    }
    let mut ids = Vec::with_capacity(2 * n);
    for &r in &bottom.rgs {
        match bottom_ports[r as usize] {
            Some(k) => ids.push(shift + top_part_of_port[middle.apply(k)]),
            None => ids.push(r as usize),
        }
    }
    ids.extend(top.rgs.iter().map(|&r| shift + r as usize));
    Ok(PartitionDiagram::from_block_ids(n, &ids))
}

/// Glue the top half of a lower diagram to the bottom half of an upper one.
///
/// Returns `Some((closed, π))` when every through port survives, with `π`
/// sending each lower port to the upper port it reaches; `None` when the
/// product drops rank.
pub fn pairing(lower_top: &HalfDiagram, upper_bottom: &HalfDiagram) -> Option<(usize, Permutation)> {
    let n = lower_top.n;
    let lam = lower_top.rank();
    if upper_bottom.n != n || upper_bottom.rank() != lam {
        return None;
    }
    // Nodes: middle points 0..n, lower ports n..n+λ, upper ports n+λ..n+2λ.
    let mut uf = UnionFind::<usize>::new(n + 2 * lam);
    for (half, base) in [(lower_top, n), (upper_bottom, n + lam)] {
        let ports = half.ports();
        let mut anchor = vec![usize::MAX; half.num_parts()];
        for (i, &r) in half.rgs.iter().enumerate() {
            let r = r as usize;
            if anchor[r] == usize::MAX {
                anchor[r] = i;
                if let Some(k) = ports[r] {
                    uf.union(i, base + k);
                }
            } else {
                uf.union(anchor[r], i);
            }
        }
    }
    let mut lower_count = vec![0usize; n + 2 * lam];
    let mut upper_of_root = vec![usize::MAX; n + 2 * lam];
    for k in 0..lam {
        lower_count[uf.find(n + k)] += 1;
        let r = uf.find(n + lam + k);
        if upper_of_root[r] != usize::MAX {
            return None;
        }
        upper_of_root[r] = k;
    }
    let mut images = Vec::with_capacity(lam);
    for k in 0..lam {
        let r = uf.find(n + k);
        if lower_count[r] != 1 || upper_of_root[r] == usize::MAX {
            return None;
        }
        images.push(upper_of_root[r]);
    }
    let mut closed: Vec<usize> =
        (0..n).map(|i| uf.find(i)).filter(|&r| lower_count[r] == 0 && upper_of_root[r] == usize::MAX).collect();
    closed.sort_unstable();
    closed.dedup();
    Some((closed.len(), Permutation::from_images(images).expect("port matching is bijective")))
}

/// Halves with exactly `lambda` propagating parts that occur as the given side
/// of some diagram in the family with `lambda` through strands. Canonical order.
pub fn enumerate_halves(family: DiagramFamily, side: Side, n: usize, lambda: usize) -> Vec<HalfDiagram> {
    use DiagramFamily as F;
    if lambda > n || !family.through_counts(n).contains(&lambda) {
        return Vec::new();
    }
    if family == F::PlanarSymmetric || family == F::Symmetric {
        return vec![HalfDiagram::from_raw((0..n as u8).collect(), vec![true; n])];
    }
    let transformation_top = family.is_transformation() && side == Side::Top;
    let max_part = match family {
        F::Partition | F::PlanarPartition => usize::MAX,
        F::FullTransformation | F::PlanarTransformation if !transformation_top => usize::MAX,
        F::RookBrauer | F::Motzkin | F::Brauer | F::TemperleyLieb => 2,
        _ => 1,
    };
    let mut out = Vec::new();
    for rgs in set_partitions(n, max_part) {
        let parts = rgs.iter().map(|&x| x as usize + 1).max().unwrap_or(0);
        if parts < lambda {
            continue;
        }
        let mut sizes = vec![0usize; parts];
        for &r in &rgs {
            sizes[r as usize] += 1;
        }
        if family == F::PlanarTransformation && side == Side::Bottom && !parts_are_intervals(&rgs) {
            continue;
        }
        for flags in subsets_of_size(parts, lambda) {
            let ok = sizes.iter().zip(&flags).all(|(&s, &p)| match family {
                F::Brauer | F::TemperleyLieb => {
                    if p {
                        s == 1
                    } else {
                        s == 2
                    }
                }
                F::RookBrauer | F::Motzkin => !p || s == 1,
                F::FullTransformation | F::PlanarTransformation if !transformation_top => p,
                _ => true,
            });
            if !ok {
                continue;
            }
            let h = HalfDiagram::from_raw(rgs.clone(), flags);
            if family.is_planar() && !h.is_planar() {
                continue;
            }
            out.push(h);
        }
    }
    out.sort();
    out
}

fn parts_are_intervals(rgs: &[u8]) -> bool {
    rgs.windows(2).all(|w| w[1] == w[0] || w[1] as usize == w[0] as usize + 1)
}

/// Flag vectors of length `m` with exactly `k` set.
fn subsets_of_size(m: usize, k: usize) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    let mut cur = vec![false; m];
    fn go(i: usize, left: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if cur.len() - i < left {
            return;
        }
        cur[i] = true;
        go(i + 1, left - 1, cur, out);
        cur[i] = false;
        go(i + 1, left, cur, out);
    }
    go(0, k, &mut cur, &mut out);
    out
}
