//! Exact linear algebra over `F_p` and the rationals.

mod coords;
mod echelon;
pub mod field;
pub mod hnf;
mod matrix;
mod subspace;

pub use coords::QuotientCoordinates;
pub use echelon::EchelonBasis;
pub use field::{Field, PrimeField, Rationals};
pub use hnf::{hermite_normal_form, hermite_normal_form_rational, IntMatrix};
pub use matrix::{nullspace, rref, Matrix};
pub use subspace::Subspace;
