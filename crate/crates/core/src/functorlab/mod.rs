//! Tensor and Schur functors evaluated on small vector spaces, with the
//! operators `X` and `T` as exact matrices.

pub mod hecke;
pub mod schur;
pub mod spectrum;
pub mod tensor;

pub use hecke::{
    e_power_subspace, hecke_relations, tau_matrix, verify_hecke, y_matrix, HeckeOperators, RelationCheck,
    WeightSubspace,
};
pub use schur::{schur_subspace, LetterCount, MonomialKey, SchurSubspace};
pub use spectrum::{spectrum_check, EigenEntry, SpectrumReport};
pub use tensor::{
    casimir_difference_sides, casimir_matrix, casimir_op, group_action, letter_swap_op, lie_action, lie_op,
    verify_casimir_difference, x_matrix, x_op, ElementaryUnit, SparseOp, TensorSpace, MAX_TENSOR_DIM,
};
