#![allow(clippy::manual_is_multiple_of, clippy::needless_range_loop)]

pub mod based_cells;
pub mod cli;
pub mod diagrams;
pub mod dihedral_hecke;
pub mod exact_arith;
pub mod exec;
pub mod sandwich_reduction;
pub mod symgroup_kit;
