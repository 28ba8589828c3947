use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::partition::YoungPartition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("not a permutation of 1..{0}: {1:?}")]
    NotBijective(usize, Vec<usize>),
    #[error("symmetric group S_{0} exceeds the supported bound {1}")]
    TooLarge(usize, usize),
    #[error("shape of size {0} used with S_{1}")]
    ShapeMismatch(usize, usize),
}

/// A permutation of `{0, …, m−1}` stored as its image list; displayed one-line, 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation { images: (0..m).collect() }
    }

    /// From zero-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m || seen[x] {
                return Err(PermError::NotBijective(m, images.iter().map(|x| x + 1).collect()));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// From a one-line word over `1..=m`.
    pub fn from_one_line(word: &[usize]) -> Result<Self, PermError> {
        if word.contains(&0) {
            return Err(PermError::NotBijective(word.len(), word.to_vec()));
        }
        Self::from_images(word.iter().map(|&x| x - 1).collect())
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `a ∘ b`: apply `b` first.
    pub fn compose(a: &Permutation, b: &Permutation) -> Permutation {
        assert_eq!(a.degree(), b.degree(), "composing permutations of different degree");
        Permutation { images: b.images.iter().map(|&x| a.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// Cycle lengths sorted descending.
    pub fn cycle_type(&self) -> YoungPartition {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut lens = Vec::new();
        for s in 0..m {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lens.push(len);
        }
        YoungPartition::new(lens)
    }

    /// +1 or −1.
    pub fn sign(&self) -> i64 {
        let ct = self.cycle_type();
        let even_cycles = ct.parts().iter().filter(|&&l| l % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Simple transposition `s_i = (i, i+1)` (zero-based `i`).
    pub fn simple_transposition(m: usize, i: usize) -> Permutation {
        let mut images: Vec<usize> = (0..m).collect();
        images.swap(i, i + 1);
        Permutation { images }
    }

    /// Position in the lexicographic order of `S_m` (Lehmer code).
    pub fn lex_rank(&self) -> usize {
        let m = self.degree();
        let mut rank = 0;
        for i in 0..m {
            let smaller = self.images[i + 1..].iter().filter(|&&x| x < self.images[i]).count();
            rank = rank * (m - i) + smaller;
        }
        rank
    }

    pub fn lex_unrank(m: usize, mut rank: usize) -> Permutation {
        let mut digits = vec![0; m];
        for i in (0..m).rev() {
            let base = m - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<usize> = (0..m).collect();
        Permutation { images: digits.iter().map(|&d| pool.remove(d)).collect() }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.degree() > 9 { "," } else { "" };
        let parts: Vec<String> = self.one_line().iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(sep))
    }
}

pub fn factorial(m: usize) -> usize {
    (1..=m).product()
}

/// All permutations of `S_m` in lexicographic order.
pub fn all_permutations(m: usize) -> Vec<Permutation> {
    (0..factorial(m)).map(|r| Permutation::lex_unrank(m, r)).collect()
}

/// Largest `m` with a cached multiplication table.
pub const MAX_TABLE_DEGREE: usize = 6;

/// `S_m` with elements in lexicographic order and a cached multiplication table.
#[derive(Debug)]
pub struct SymGroup {
    m: usize,
    elems: Vec<Permutation>,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl SymGroup {
    fn build(m: usize) -> SymGroup {
        let elems = all_permutations(m);
        let n = elems.len();
        let mut mul = vec![0u16; n * n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                mul[i * n + j] = Permutation::compose(a, b).lex_rank() as u16;
            }
        }
        let inv = elems.iter().map(|a| a.inverse().lex_rank() as u16).collect();
        SymGroup { m, elems, mul, inv }
    }

    /// Shared table for `S_m`, `m ≤ 6`.
    pub fn get(m: usize) -> Result<Arc<SymGroup>, PermError> {
        static CACHE: [OnceLock<Arc<SymGroup>>; MAX_TABLE_DEGREE + 1] =
            [const { OnceLock::new() }; MAX_TABLE_DEGREE + 1];
        if m > MAX_TABLE_DEGREE {
            return Err(PermError::TooLarge(m, MAX_TABLE_DEGREE));
        }
        Ok(CACHE[m].get_or_init(|| Arc::new(SymGroup::build(m))).clone())
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elems
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elems[i]
    }

    pub fn index_of(&self, p: &Permutation) -> usize {
        p.lex_rank()
    }

    /// Index of `elems[a] ∘ elems[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elems.len() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }
}
