//! Derivations: certified maps, generic and closed-form solvers, inner
//! derivations, monomial derivations and socle-valued maps.

#[allow(clippy::module_inception)]
mod derivation;
mod generic;
mod inner;
mod qci;
mod socle_maps;

pub use derivation::{extend_from_generators, leibniz_defect, leibniz_failure, Derivation, FULL_LEIBNIZ_LIMIT};
pub use generic::{derivation_generator_values, derivations_generic, generator_values_to_matrices, GENERIC_DERIVATION_LIMIT};
pub use inner::{ad_matrix, inner_derivation, inner_derivations, inner_generator_values};
pub use qci::{
    basis_x, basis_x_ids, derivation_values_qci, derivations_qci, inner_qci_values, monomial_derivation,
    qci_constraint_matrix, MonomialDerivationId, MonomialKind,
};
pub use socle_maps::{
    radical_generators, second_socle_derivation_space, second_socle_map, second_socle_pairing, socle_valued_map,
    SocleDerivation, SoclePairing,
};
