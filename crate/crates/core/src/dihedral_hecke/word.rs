use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::DihedralError;

/// An element of the infinite dihedral group `⟨1, 2 | 1² = 2² = e⟩`, stored
/// as its unique reduced word: a length and the last letter.
///
/// The identity has `len == 0` and `last == 0`. In a finite group `I₂(n)` the
/// two words of length `n` coincide; [`DihedralWord::longest`] picks the one
/// starting with `1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DihedralWord {
    len: usize,
    last: u8,
}

#[allow(clippy::len_without_is_empty)]
impl DihedralWord {
    pub const IDENTITY: DihedralWord = DihedralWord { len: 0, last: 0 };

    /// Word of `len ≥ 1` letters ending in `last ∈ {1, 2}`.
    pub fn new(len: usize, last: u8) -> Result<Self, DihedralError> {
        match (len, last) {
            (0, _) => Ok(Self::IDENTITY),
            (_, 1 | 2) => Ok(DihedralWord { len, last }),
            _ => Err(DihedralError::BadLetter(last)),
        }
    }

    pub fn generator(letter: u8) -> Result<Self, DihedralError> {
        Self::new(1, letter)
    }

    /// Longest element of `I₂(n)`, written starting with `1`.
    pub fn longest(n: usize) -> Self {
        DihedralWord { len: n, last: if n % 2 == 1 { 1 } else { 2 } }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    pub fn last(&self) -> Option<u8> {
        (self.len > 0).then_some(self.last)
    }

    pub fn first(&self) -> Option<u8> {
        (self.len > 0).then(|| if self.len % 2 == 1 { self.last } else { 3 - self.last })
    }

    /// `w⁻¹`: the reversed word.
    pub fn inverse(&self) -> Self {
        match self.first() {
            None => *self,
            Some(f) => DihedralWord { len: self.len, last: f },
        }
    }

    /// Letters from left to right.
    pub fn letters(&self) -> Vec<u8> {
        let Some(first) = self.first() else { return Vec::new() };
        (0..self.len).map(|i| if i % 2 == 0 { first } else { 3 - first }).collect()
    }

    /// Canonical representative in `I₂(n)`; `None` when longer than `n`.
    pub fn in_group(&self, n: usize) -> Option<Self> {
        match self.len.cmp(&n) {
            std::cmp::Ordering::Less => Some(*self),
            std::cmp::Ordering::Equal => Some(Self::longest(n)),
            std::cmp::Ordering::Greater => None,
        }
    }

    /// All `2n` elements of `I₂(n)`: identity, then `(k, 1), (k, 2)` for
    /// `k = 1..n`, then the longest element.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = vec![Self::IDENTITY];
        for len in 1..n {
            out.push(DihedralWord { len, last: 1 });
            out.push(DihedralWord { len, last: 2 });
        }
        out.push(Self::longest(n));
        out
    }

    /// Position of a canonical word in [`DihedralWord::all`].
    pub fn index_in(&self, n: usize) -> Option<usize> {
        let w = self.in_group(n)?;
        Some(match w.len {
            0 => 0,
            l if l == n => 2 * n - 1,
            l => 2 * l - 1 + usize::from(w.last - 1),
        })
    }

    /// `b`-notation: `be` for the identity, `b121` otherwise.
    pub fn basis_name(&self) -> String {
        format!("b{self}")
    }
}

impl fmt::Display for DihedralWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len == 0 {
            return f.write_str("e");
        }
        for l in self.letters() {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for DihedralWord {
    type Err = DihedralError;

    /// Parses `e`, `1`, `21`, `1212`, …, with an optional leading `b`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t.strip_prefix('b').unwrap_or(t).trim_start_matches('_');
        if t.is_empty() || t == "e" || t == "∅" {
            return Ok(Self::IDENTITY);
        }
        let letters: Vec<u8> = t
            .chars()
            .map(|c| match c {
                '1' => Ok(1),
                '2' => Ok(2),
                _ => Err(DihedralError::BadWord(s.to_string())),
            })
            .collect::<Result<_, _>>()?;
        if letters.windows(2).any(|w| w[0] == w[1]) {
            return Err(DihedralError::BadWord(s.to_string()));
        }
        Self::new(letters.len(), *letters.last().expect("nonempty"))
    }
}

impl Serialize for DihedralWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
