//! Partition diagrams, the twelve diagram monoids, and the half-diagram
//! factorization used by the sandwich machinery.

mod diagram;
mod family;
mod half;

pub use diagram::{
    diagram_to_one_line, multiply, one_line_to_diagram, DiagramError, Label, PartitionDiagram, MAX_STRANDS,
};
pub use family::{enumerate, enumerate_by_filtering, generators, in_family, DiagramFamily, FamilyError, Side};
pub use half::{enumerate_halves, factorize, pairing, recompose, DiagramFactorization, HalfDiagram};
