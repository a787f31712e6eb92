//! Exact algebra for quantum complete intersections over prime fields.

pub mod algebra;
pub mod derivation;
pub mod error;
pub mod hh1;
pub mod lift;
pub mod linalg;
pub mod report;
pub mod socle;
pub mod verify;

pub use error::{Error, Result};
