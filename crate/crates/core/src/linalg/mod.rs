//! Exact rational linear algebra: scalars, dense matrices, canonical
//! subspaces and polynomial helpers.

pub mod matrix;
pub mod modular;
pub mod poly;
pub mod scalar;
pub mod subspace;

pub use matrix::Matrix;
pub use scalar::Scalar;
pub use subspace::{SpanBuilder, Subspace};
