use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partitions of different sizes: {0} and {1}")]
    SizeMismatch(usize, usize),
    #[error("malformed partition {0:?}")]
    Malformed(String),
}

/// Weakly decreasing positive parts (English convention: parts are row lengths).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct YoungPartition(Vec<usize>);

impl YoungPartition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        YoungPartition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Column lengths.
    pub fn conjugate(&self) -> YoungPartition {
        let w = self.0.first().copied().unwrap_or(0);
        YoungPartition((0..w).map(|c| self.0.iter().filter(|&&r| r > c).count()).collect())
    }

    /// The one-row partition `(m)`.
    pub fn row(m: usize) -> Self {
        YoungPartition::new(vec![m])
    }

    /// The one-column partition `(1^m)`.
    pub fn column(m: usize) -> Self {
        YoungPartition(vec![1; m])
    }

    /// Number of standard tableaux (hook length formula).
    pub fn dimension(&self) -> u128 {
        let conj = self.conjugate();
        let n = self.size() as u128;
        let mut num: u128 = (1..=n).product();
        let mut den: u128 = 1;
        for (i, &r) in self.0.iter().enumerate() {
            for j in 0..r {
                let hook = (r - j - 1) + (conj.0[j] - i - 1) + 1;
                den *= hook as u128;
                let g = gcd(num, den);
                num /= g;
                den /= g;
            }
        }
        num / den
    }

    /// Parse `(2,1)`, `2,1` or `21` (single-digit parts).
    pub fn parse(text: &str) -> Result<Self, PartitionError> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Option<Vec<usize>> = if t.contains(',') {
            t.split(',').map(|s| s.trim().parse().ok()).collect()
        } else {
            t.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        match parts {
            Some(p) if p.windows(2).all(|w| w[0] >= w[1]) && !p.contains(&0) => Ok(YoungPartition(p)),
            _ => Err(PartitionError::Malformed(text.to_string())),
        }
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for YoungPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `m`, descending lexicographic (`(m)` first).
pub fn partitions(m: usize) -> Vec<YoungPartition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungPartition>) {
        if rest == 0 {
            out.push(YoungPartition(cur.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// `a ≤ b` in dominance order oriented so that `(m)` is the minimum:
/// every partial sum of `a` is at least the matching partial sum of `b`.
pub fn dominance_leq(a: &YoungPartition, b: &YoungPartition) -> Result<bool, PartitionError> {
    if a.size() != b.size() {
        return Err(PartitionError::SizeMismatch(a.size(), b.size()));
    }
    let (mut sa, mut sb) = (0, 0);
    for i in 0..a.len().max(b.len()) {
        sa += a.0.get(i).copied().unwrap_or(0);
        sb += b.0.get(i).copied().unwrap_or(0);
        if sa < sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether consecutive column lengths (the last one against 0) differ by less than `p`.
/// `p = None` means characteristic zero: every partition qualifies.
pub fn is_p_restricted(shape: &YoungPartition, p: Option<u64>) -> bool {
    let Some(p) = p else {
        return true;
    };
    let cols = shape.conjugate();
    let c = cols.parts();
    (0..c.len()).all(|i| {
        let next = c.get(i + 1).copied().unwrap_or(0);
        ((c[i] - next) as u64) < p
    })
}

/// p-restricted partitions of `size`, listed along a linear extension of dominance
/// with `(size)` first.
pub fn p_restricted_partitions(size: usize, p: Option<u64>) -> Vec<YoungPartition> {
    partitions(size).into_iter().filter(|s| is_p_restricted(s, p)).collect()
}
