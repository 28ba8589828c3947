use std::fmt;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest strand count a diagram may have (labels fit in a byte).
pub const MAX_STRANDS: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("label {0} is out of range for n = {1}")]
    OutOfRange(String, usize),
    #[error("label {0} appears in more than one block")]
    Overlap(String),
    #[error("label {0} is not covered by any block")]
    Gap(String),
    #[error("empty block")]
    EmptyBlock,
    #[error("strand counts differ: {0} and {1}")]
    Mismatch(usize, usize),
    #[error("n = {0} exceeds the maximum of {MAX_STRANDS}")]
    TooLarge(usize),
    #[error("cannot parse diagram: {0}")]
    Parse(String),
    #[error("not a transformation: {0}")]
    NotTransformation(String),
    #[error("invalid one-line word {0:?} for n = {1}")]
    BadWord(Vec<usize>, usize),
}

/// A boundary point: bottom `i` or top `j`, zero-indexed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Label {
    Bottom(usize),
    Top(usize),
}

impl Label {
    fn index(self, n: usize) -> usize {
        match self {
            Label::Bottom(i) => i,
            Label::Top(j) => n + j,
        }
    }

    fn from_index(k: usize, n: usize) -> Label {
        if k < n {
            Label::Bottom(k)
        } else {
            Label::Top(k - n)
        }
    }

    pub fn parse(s: &str) -> Option<Label> {
        let s = s.trim();
        let (kind, num) = s.split_at(1.min(s.len()));
        let i: usize = num.parse().ok()?;
        match kind {
            "b" => Some(Label::Bottom(i)),
            "t" => Some(Label::Top(i)),
            _ => None,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Bottom(i) => write!(f, "b{i}"),
            Label::Top(j) => write!(f, "t{j}"),
        }
    }
}

/// A set partition of the `2n` boundary points.
///
/// Stored as the restricted growth string over the labels in the order
/// `b0 … b(n−1) t0 … t(n−1)`; this is the canonical form and the canonical order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PartitionDiagram {
    n: usize,
    rgs: Vec<u8>,
}

/// Relabel block ids by first occurrence.
pub(crate) fn canonical_rgs<T: Copy + PartialEq>(ids: &[T]) -> Vec<u8> {
    let mut seen: Vec<T> = Vec::new();
    ids.iter()
        .map(|x| match seen.iter().position(|y| y == x) {
            Some(k) => k as u8,
            None => {
                seen.push(*x);
                (seen.len() - 1) as u8
            }
        })
        .collect()
}

impl PartitionDiagram {
    /// From arbitrary block ids per label (`ids[k]` for label index `k`).
    pub fn from_block_ids<T: Copy + PartialEq>(n: usize, ids: &[T]) -> Self {
        assert_eq!(ids.len(), 2 * n);
        PartitionDiagram { n, rgs: canonical_rgs(ids) }
    }

    pub(crate) fn from_rgs_unchecked(n: usize, rgs: Vec<u8>) -> Self {
        debug_assert_eq!(rgs.len(), 2 * n);
        PartitionDiagram { n, rgs }
    }

    /// Validating constructor from explicit blocks.
    pub fn new(n: usize, blocks: &[Vec<Label>]) -> Result<Self, DiagramError> {
        if n > MAX_STRANDS {
            return Err(DiagramError::TooLarge(n));
        }
        let mut ids: Vec<Option<usize>> = vec![None; 2 * n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(DiagramError::EmptyBlock);
            }
            for &l in block {
                let (Label::Bottom(i) | Label::Top(i)) = l;
                if i >= n {
                    return Err(DiagramError::OutOfRange(l.to_string(), n));
                }
                let k = l.index(n);
                if ids[k].is_some() {
                    return Err(DiagramError::Overlap(l.to_string()));
                }
                ids[k] = Some(b);
            }
        }
        if let Some(k) = ids.iter().position(|x| x.is_none()) {
            return Err(DiagramError::Gap(Label::from_index(k, n).to_string()));
        }
        let ids: Vec<usize> = ids.into_iter().map(|x| x.unwrap()).collect();
        Ok(Self::from_block_ids(n, &ids))
    }

    pub fn identity(n: usize) -> Self {
        let ids: Vec<usize> = (0..n).chain(0..n).collect();
        Self::from_block_ids(n, &ids)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().map(|&x| x as usize + 1).max().unwrap_or(0)
    }

    /// Block id of a label.
    pub fn block_of(&self, l: Label) -> usize {
        self.rgs[l.index(self.n)] as usize
    }

    /// Blocks in canonical order, each sorted (bottom labels before top labels).
    pub fn blocks(&self) -> Vec<Vec<Label>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (k, &b) in self.rgs.iter().enumerate() {
            out[b as usize].push(Label::from_index(k, self.n));
        }
        out
    }

    /// (bottom count, top count) for each block.
    pub fn block_profile(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(0, 0); self.num_blocks()];
        for (k, &b) in self.rgs.iter().enumerate() {
            if k < self.n {
                out[b as usize].0 += 1;
            } else {
                out[b as usize].1 += 1;
            }
        }
        out
    }

    /// Blocks meeting both rows.
    pub fn through_strands(&self) -> usize {
        self.block_profile().iter().filter(|(b, t)| *b > 0 && *t > 0).count()
    }

    /// Exchange top and bottom rows.
    pub fn star(&self) -> Self {
        let n = self.n;
        let ids: Vec<u8> = self.rgs[n..].iter().chain(&self.rgs[..n]).copied().collect();
        Self::from_block_ids(n, &ids)
    }

    /// Noncrossing with respect to the boundary cycle bottom-left → bottom-right →
    /// top-right → top-left.
    pub fn is_planar(&self) -> bool {
        let n = self.n;
        let m = 2 * n;
        let mut by_pos = vec![0u8; m];
        for k in 0..m {
            let pos = if k < n { k } else { m - 1 - (k - n) };
            by_pos[pos] = self.rgs[k];
        }
        is_noncrossing(&by_pos)
    }

    /// Stack `self` on top of `below`; returns the number of closed middle components and the product.
    pub fn compose(&self, below: &Self) -> Result<(usize, Self), DiagramError> {
        multiply(self, below)
    }

    pub fn render(&self) -> String {
        let blocks: Vec<String> =
            self.blocks().iter().map(|b| b.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")).collect();
        format!("n={}; [{}]", self.n, blocks.join(" | "))
    }

    /// Parse the `n=4; [b0 b1 | t0 t1 | b2 t2 | b3 t3]` format.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let err = || DiagramError::Parse(text.to_string());
        let (head, body) = text.split_once(';').ok_or_else(err)?;
        let n: usize = head.trim().strip_prefix("n=").ok_or_else(err)?.trim().parse().map_err(|_| err())?;
        let body = body.trim().strip_prefix('[').and_then(|b| b.strip_suffix(']')).ok_or_else(err)?;
        let mut blocks = Vec::new();
        if !body.trim().is_empty() {
            for part in body.split('|') {
                let block: Option<Vec<Label>> = part.split_whitespace().map(Label::parse).collect();
                blocks.push(block.ok_or_else(err)?);
            }
        }
        Self::new(n, &blocks)
    }

    /// Blocks as arrays of label strings.
    pub fn to_json_blocks(&self) -> Vec<Vec<String>> {
        self.blocks().iter().map(|b| b.iter().map(|l| l.to_string()).collect()).collect()
    }

    pub fn from_json_blocks(n: usize, blocks: &[Vec<String>]) -> Result<Self, DiagramError> {
        let parsed: Option<Vec<Vec<Label>>> =
            blocks.iter().map(|b| b.iter().map(|s| Label::parse(s)).collect()).collect();
        Self::new(n, &parsed.ok_or_else(|| DiagramError::Parse(format!("{blocks:?}")))?)
    }
}

impl fmt::Display for PartitionDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Serialize for PartitionDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.render())
    }
}

impl<'de> Deserialize<'de> for PartitionDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        PartitionDiagram::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// True when no two distinct blocks interleave along the sequence.
pub(crate) fn is_noncrossing(ids: &[u8]) -> bool {
    let m = ids.len();
    let blocks = ids.iter().map(|&x| x as usize + 1).max().unwrap_or(0);
    let mut first = vec![usize::MAX; blocks];
    let mut last = vec![0usize; blocks];
    for (p, &b) in ids.iter().enumerate() {
        let b = b as usize;
        first[b] = first[b].min(p);
        last[b] = p;
    }
    // Within every gap of a block, each visible block must lie entirely inside the gap.
    let mut prev: Vec<Option<usize>> = vec![None; blocks];
    for p in 0..m {
        let b = ids[p] as usize;
        if let Some(q) = prev[b] {
            for &c in &ids[q + 1..p] {
                let c = c as usize;
                if first[c] < q || last[c] > p {
                    return false;
                }
            }
        }
        prev[b] = Some(p);
    }
    true
}

/// `a ∘ b` with `a` stacked above `b`: returns `(closed, product)` where
/// `closed` counts components lying entirely in the middle row.
pub fn multiply(a: &PartitionDiagram, b: &PartitionDiagram) -> Result<(usize, PartitionDiagram), DiagramError> {
    if a.n != b.n {
        return Err(DiagramError::Mismatch(a.n, b.n));
    }
    let n = a.n;
    // Nodes: b-bottom 0..n, middle n..2n, a-top 2n..3n.
    let mut uf = UnionFind::<usize>::new(3 * n);
    let mut anchor_b = vec![usize::MAX; b.num_blocks()];
    for (k, &blk) in b.rgs.iter().enumerate() {
        let node = k; // bottom i -> i, top j -> n + j
        let slot = &mut anchor_b[blk as usize];
        if *slot == usize::MAX {
            *slot = node;
        } else {
            uf.union(*slot, node);
        }
    }
    let mut anchor_a = vec![usize::MAX; a.num_blocks()];
    for (k, &blk) in a.rgs.iter().enumerate() {
        let node = n + k; // bottom i -> n + i, top j -> 2n + j
        let slot = &mut anchor_a[blk as usize];
        if *slot == usize::MAX {
            *slot = node;
        } else {
            uf.union(*slot, node);
        }
    }
    let mut outer = vec![false; 3 * n];
    for node in (0..n).chain(2 * n..3 * n) {
        outer[uf.find(node)] = true;
    }
    let mut closed_roots: Vec<usize> = (n..2 * n).map(|node| uf.find(node)).filter(|&r| !outer[r]).collect();
    closed_roots.sort_unstable();
    closed_roots.dedup();
    let ids: Vec<usize> = (0..n).chain(2 * n..3 * n).map(|node| uf.find(node)).collect();
    Ok((closed_roots.len(), PartitionDiagram::from_block_ids(n, &ids)))
}

/// Diagram of a transformation given in one-line notation over `1..=n`:
/// bottom `i` joins top `f(i)`.
pub fn one_line_to_diagram(word: &[usize]) -> Result<PartitionDiagram, DiagramError> {
    let n = word.len();
    if n > MAX_STRANDS || word.iter().any(|&x| x == 0 || x > n) {
        return Err(DiagramError::BadWord(word.to_vec(), n));
    }
    let ids: Vec<usize> = word.iter().map(|&x| x - 1).chain(0..n).collect();
    Ok(PartitionDiagram::from_block_ids(n, &ids))
}

/// Inverse of [`one_line_to_diagram`] on transformation diagrams.
pub fn diagram_to_one_line(a: &PartitionDiagram) -> Result<Vec<usize>, DiagramError> {
    let n = a.n;
    let profile = a.block_profile();
    if profile.iter().any(|&(_, t)| t != 1) {
        return Err(DiagramError::NotTransformation(a.render()));
    }
    let mut top_of_block = vec![0; profile.len()];
    for j in 0..n {
        top_of_block[a.rgs[n + j] as usize] = j;
    }
    Ok((0..n).map(|i| top_of_block[a.rgs[i] as usize] + 1).collect())
}
