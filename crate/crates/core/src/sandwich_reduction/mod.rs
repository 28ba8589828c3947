//! Sandwich data of the diagram families.
//!
//! Each J-cell of a diagram monoid is indexed by its through-strand count `λ`.
//! Its left cells are keyed by bottom halves, its right cells by top halves,
//! and gluing a top half to a bottom half either keeps all `λ` strands
//! (closing `k` loops, with a middle permutation) or falls into a lower cell.
//! The Gram matrix records `δ^k` for surviving pairs; ranks of Gram and
//! sandwich matrices give the dimensions of simple modules.

mod counts;
mod gram;
mod oracle;
mod simples;

#[cfg(test)]
mod tests;

use thiserror::Error;

use crate::based_cells::CellError;
use crate::diagrams::{DiagramError, DiagramFamily, FamilyError};
use crate::exact_arith::MatrixError;
use crate::symgroup_kit::PermError;

pub use counts::{
    apexes, apexes_where, count_left_cells, count_right_cells, digit_leq, digit_leq_prime, digit_valuation, digits,
    quantum_characteristic, quantum_characteristic_mod_p, quantum_characteristic_nf, simple_count, tilting_support,
    tl_parameters, tl_rank_closed_form,
};
pub use gram::{gram_matrix, gram_matrix_with, gram_rank, pairing_element, reference_det_formulas, GramMatrix};
pub use oracle::{oracle_simple_dimension, MAX_ORACLE_BASIS};
pub use simples::{
    has_trivial_sandwich, sandwich_datum, sandwiched_algebra, semisimplicity_check, simple_dimension,
    simple_dimension_with, simple_table, JCellDatum, SandwichDatum, Sandwiched, SandwichedAlgebra, SimpleEntry,
    SimpleTable, Witness,
};

#[derive(Debug, Error)]
pub enum SandwichError {
    #[error("{lambda} is not a through-strand count of {family} on {n} strands")]
    BadLambda { family: DiagramFamily, n: usize, lambda: usize },
    #[error("n = {0} exceeds the strand bound")]
    TooManyStrands(usize),
    #[error("lambda = {lambda} is not an apex at delta = {delta}")]
    NotApex { lambda: usize, delta: String },
    #[error("lambda = {0} exceeds the group-algebra bound")]
    LambdaTooLarge(usize),
    #[error("a partition of {0} is required for a symmetric sandwiched algebra")]
    MissingShape(usize),
    #[error("{shape} is not a partition of {lambda}")]
    BadShape { shape: String, lambda: usize },
    #[error("delta = {delta} is not defined modulo {p}")]
    DeltaNotInField { delta: String, p: u64 },
    #[error("sandwiched algebra check failed: {0}")]
    Isomorphism(String),
    #[error("basis of size {0} is too large for the oracle")]
    OracleBound(usize),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Cells(#[from] CellError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Perm(#[from] PermError),
}
