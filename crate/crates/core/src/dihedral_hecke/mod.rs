//! Hecke algebras of dihedral type with their Kazhdan–Lusztig bases.
//!
//! Products of KL basis elements follow the scaled Clebsch–Gordan rule for the
//! infinite dihedral group and its truncation for `I₂(n)`. On top of that sit
//! the based algebras for the cell engine, the middle H-cell algebra
//! `ℚ[X]/(minimal polynomial of c_121)`, sandwich-matrix ranks, the simple
//! modules, and the eigenvalue data of the two-dimensional simples.

mod algebra;
mod middle;
mod multiply;
mod word;


use thiserror::Error;

use crate::based_cells::CellError;
use crate::exact_arith::{FactorError, MatrixError, NumberFieldError};

pub use algebra::{
    dihedral_algebra_at_one, dihedral_algebra_generic, dihedral_cells, product_table, DihedralCells, DihedralTier,
    ProductTable, VMode, MAX_RANK, MIN_RANK,
};
pub use middle::{
    dihedral_character_data, dihedral_sandwich_ranks, dihedral_simples, middle_algebra, middle_h_sizes, p_poly,
    p_prime_poly, top_sandwich_entry, BracketScaledPoly, CellRank, CharacterRoot, DihedralCharacterData,
    DihedralSimple, DihedralSimpleTable, MiddleAlgebra, SandwichRanks, MAX_MIDDLE_RANK,
};
pub use multiply::{cg_multiply_finite, cg_multiply_infinite, render_quantum, HeckeElement};
pub use word::DihedralWord;

#[derive(Debug, Error)]
pub enum DihedralError {
    #[error("letter {0} is not 1 or 2")]
    BadLetter(u8),
    #[error("{0:?} is not a reduced dihedral word")]
    BadWord(String),
    #[error("n = {0} is outside the supported range")]
    BadRank(usize),
    #[error("word {word} is longer than n = {n}")]
    TooLong { word: String, n: usize },
    #[error("unknown v-mode {0:?} (expected generic or 1)")]
    BadVMode(String),
    #[error("n = {0} is even; the middle cell is not a sandwich cell")]
    EvenRank(usize),
    #[error("n = {n} is even: the middle J-cell has H-cells of sizes {h_sizes:?}")]
    EvenMiddle { n: usize, h_sizes: Vec<Vec<usize>> },
    #[error("{0}")]
    Structure(String),
    #[error(transparent)]
    Cells(#[from] CellError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Field(#[from] NumberFieldError),
}
