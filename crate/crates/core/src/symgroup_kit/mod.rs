//! Symmetric-group combinatorics: partitions and dominance, permutations with a
//! cached multiplication table, RSK and type A cells, Murnaghan–Nakayama
//! characters, central idempotents and the regular representation.

mod characters;
mod partition;
mod perm;
mod rsk;

pub use characters::{
    central_idempotent, character_table, class_size, mn_character, regular_representation, CharacterTable,
    GroupAlgebraElem, MAX_ALGEBRA_DEGREE,
};
pub use partition::{
    dominance_leq, is_p_restricted, p_restricted_partitions, partitions, PartitionError, YoungPartition,
};
pub use perm::{all_permutations, factorial, PermError, Permutation, SymGroup, MAX_TABLE_DEGREE};
pub use rsk::{inverse_rsk, rsk, shape_of, type_a_cells, RskError, Tableau, TypeACells, MAX_CELL_DEGREE};

#[cfg(test)]
mod tests;
