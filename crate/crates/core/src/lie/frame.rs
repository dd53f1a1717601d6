//! Split Cartan frames: a maximal toral subspace together with the root
//! decomposition it induces.

use crate::linalg::{Scalar, Subspace};

/// One root of a frame: the linear functional it defines on the Cartan
/// basis, a vector spanning its root space, and a positivity flag for the
/// frame's chosen positive system.
#[derive(Clone, Debug)]
pub struct RootData {
    pub functional: Vec<Scalar>,
    pub vector: Vec<Scalar>,
    pub positive: bool,
}

#[derive(Clone, Debug)]
pub struct CartanFrame {
    pub cartan: Subspace,
    pub roots: Vec<RootData>,
}

impl CartanFrame {
    pub fn rank(&self) -> usize {
        self.cartan.dim()
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &RootData> {
        self.roots.iter().filter(|r| r.positive)
    }

    pub fn root_by_functional(&self, f: &[Scalar]) -> Option<&RootData> {
        self.roots.iter().find(|r| r.functional == f)
    }

    /// The negative of a root's functional.
    pub fn negated(f: &[Scalar]) -> Vec<Scalar> {
        f.iter().map(|c| -c).collect()
    }
}

/// Lexicographic positivity: first nonzero coordinate positive.
pub fn lex_positive(f: &[Scalar]) -> bool {
    for c in f {
        if !c.is_zero() {
            return !c.is_negative();
        }
    }
    false
}
