//! First Hochschild cohomology as a restricted Lie algebra and
//! `Z(A)`-module.

mod lie;
mod structure;
pub mod theorem;

pub use structure::{hh1_generic, hh1_qci, HH1Element, LieStructure};
