//! Exact-arithmetic workbench for split simple Lie algebras, balanced
//! symplectic ternary algebras (Freudenthal triple systems) and the
//! Tits-Kantor-Koecher construction.
//!
//! Everything is computed over the rationals with exact arithmetic: root
//! systems and Chevalley bases up to rank 8, structural predicates and
//! centralizers of structure-constant Lie algebras, extraction of ternary
//! algebras from extraspecial 5-gradings and the reverse TKK construction,
//! Dynkin indices of representations and embeddings, and a registry of
//! executable verification claims.

pub mod claims;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod roots;

pub use error::{Error, Result};
