//! Structure-constant Lie algebras: brackets, Killing forms, structural
//! predicates, centralizers, split Cartan subalgebras and type
//! identification.

pub mod algebra;
pub mod frame;

pub use algebra::{basis_vectors, LieAlgebra, StructuralReport, Subalgebra};
pub use frame::{CartanFrame, RootData};
