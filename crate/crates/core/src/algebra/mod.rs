//! Finite-dimensional algebras given by structure constants.

#[allow(clippy::module_inception)]
mod algebra;
mod bimodule;
mod group;
mod qci;
mod structure;

pub use algebra::{AlgebraData, AlgebraElement, FDAlgebra, SparseVec, EXHAUSTIVE_ASSOCIATIVITY_LIMIT};
pub(crate) use algebra::sample_rng;
pub use bimodule::{bimodule_hom, Bimodule, BimoduleSpec, BIMODULE_DIM_LIMIT};
pub use group::make_group_algebra_cp_cpm1;
pub use qci::{make_qci, parameter_grid, Monomial, Qci, QciParams};
