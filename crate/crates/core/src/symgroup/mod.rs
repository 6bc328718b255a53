//! The symmetric group `Σ_n`: permutations, cycle types, irreducible
//! characters and the rational group algebra.

mod algebra;
mod character;
mod perm;

pub use algebra::{
    central_idempotent, young_symmetrizer, GroupAlgebraElement, MAX_MATERIALIZED_DEGREE,
};
pub use character::{border_strips, character};
pub use perm::{all_permutations, centralizer_order, class_size, Permutation};
