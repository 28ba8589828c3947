//! Cell theory for based algebras: left, right and two-sided cells, the
//! J-order, H-cells, egg-boxes and strict idempotents.

mod algebra;
mod diagram_algebra;
mod eggbox;
mod engine;
mod idempotents;

pub use algebra::{BasedAlgebra, CellError, Oracle, RingTag, SparseVec, MAX_BASIS_FULL, MAX_BASIS_GENERATORS};
pub use diagram_algebra::{DeltaSpec, DiagramBasis};
pub use eggbox::{eggbox, eggbox_json, jorder_dot, EggBox, EggBoxJson, JCellJson};
pub use engine::{compute_cells, compute_cells_with, CellStructure, Closure, HCellStatus, JCell};
pub use idempotents::{
    higher_ideal_reduce, is_admissible_monoid, strict_idempotents, verify_sandwich_pair, ReduceMode, SandwichReport,
};
