//! Structure-constant Lie algebras.
//!
//! The bracket table is stored sparsely for every ordered basis pair, with
//! antisymmetry enforced at construction time. Algebras built by the
//! pipeline carry `toral_seeds`: elements known to be ad-diagonalizable with
//! rational spectrum (coroots, grading operators), which the split-Cartan
//! search uses as starting points.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, SpanBuilder, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    /// entry `i * dim + j` holds the sparse bracket [e_i, e_j], sorted by index
    table: Vec<Vec<(u32, Scalar)>>,
    toral_seeds: Vec<Vec<Scalar>>,
}

/// Outcome of the structural predicate battery.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralReport {
    pub jacobi: bool,
    pub antisym: bool,
    pub semisimple: bool,
    pub perfect: bool,
    pub center_dim: usize,
    /// first violating triple, when the Jacobi sweep fails
    pub jacobi_witness: Option<(usize, usize, usize)>,
}

impl LieAlgebra {
    pub fn from_entries(
        dim: usize,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut table: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); dim * dim];
        for (i, j, k, v) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Exchange(format!(
                    "structure entry ({i},{j},{k}) out of range for dim {dim}"
                )));
            }
            if v.is_zero() {
                continue;
            }
            table[i * dim + j].push((k as u32, v));
        }
        for row in table.iter_mut() {
            row.sort_by_key(|e| e.0);
            // merge duplicate targets
            let mut merged: Vec<(u32, Scalar)> = Vec::with_capacity(row.len());
            for (k, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((lk, lv)) if *lk == k => *lv += &v,
                    _ => merged.push((k, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *row = merged;
        }
        // antisymmetry: reconcile (i,j) against (j,i)
        for i in 0..dim {
            if !table[i * dim + i].is_empty() {
                return Err(Error::Exchange(format!("[e_{i}, e_{i}] must vanish")));
            }
            for j in i + 1..dim {
                let ij = table[i * dim + j].clone();
                let ji = &table[j * dim + i];
                if ji.is_empty() {
                    table[j * dim + i] = ij.iter().map(|(k, v)| (*k, -v)).collect();
                } else if ij.is_empty() {
                    table[i * dim + j] = ji.iter().map(|(k, v)| (*k, -v)).collect();
                } else {
                    let neg: Vec<(u32, Scalar)> = ji.iter().map(|(k, v)| (*k, -v)).collect();
                    if ij != neg {
                        return Err(Error::Exchange(format!(
                            "brackets [e_{i},e_{j}] and [e_{j},e_{i}] are not antisymmetric"
                        )));
                    }
                }
            }
        }
        Ok(LieAlgebra {
            dim,
            table,
            toral_seeds: Vec::new(),
        })
    }

    /// Build from a bracket closure evaluated on pairs i < j.
    pub fn from_bracket_fn(
        dim: usize,
        mut f: impl FnMut(usize, usize) -> Vec<(usize, Scalar)>,
    ) -> Self {
        let mut table: Vec<Vec<(u32, Scalar)>> = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let mut row: Vec<(u32, Scalar)> = f(i, j)
                    .into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(k, v)| (k as u32, v))
                    .collect();
                row.sort_by_key(|e| e.0);
                table[j * dim + i] = row.iter().map(|(k, v)| (*k, -v)).collect();
                table[i * dim + j] = row;
            }
        }
        LieAlgebra {
            dim,
            table,
            toral_seeds: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn set_toral_seeds(&mut self, seeds: Vec<Vec<Scalar>>) {
        self.toral_seeds = seeds;
    }

    pub fn toral_seeds(&self) -> &[Vec<Scalar>] {
        &self.toral_seeds
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(u32, Scalar)] {
        &self.table[i * self.dim + j]
    }

    /// [e_i, v]
    pub fn bracket_basis_vec(&self, i: usize, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, w) in self.bracket_basis(i, j) {
                out[*k as usize] += &(c * w);
            }
        }
        out
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                for (k, w) in self.bracket_basis(i, j) {
                    out[*k as usize] += &(&(a * b) * w);
                }
            }
        }
        out
    }

    /// Matrix of ad(v) acting on the basis: column j is [v, e_j].
    pub fn ad_matrix(&self, v: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..self.dim {
                for (k, w) in self.bracket_basis(i, j) {
                    let cur = m.at(*k as usize, j).clone();
                    m.set(*k as usize, j, &cur + &(a * w));
                }
            }
        }
        m
    }

    /// Killing form Gram matrix: kappa(i,j) = sum_{k,m} c(i,k)_m c(j,m)_k.
    pub fn killing_gram(&self) -> Matrix {
        let n = self.dim;
        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            // ad(e_i) as (k -> [(m, v)])
            for j in i..n {
                let mut acc = Scalar::zero();
                for k in 0..n {
                    let row_ik = self.bracket_basis(i, k);
                    if row_ik.is_empty() {
                        continue;
                    }
                    for (m, v) in row_ik {
                        let row_jm = self.bracket_basis(j, *m as usize);
                        if let Ok(pos) = row_jm.binary_search_by_key(&(k as u32), |e| e.0) {
                            acc += &(v * &row_jm[pos].1);
                        }
                    }
                }
                if !acc.is_zero() {
                    gram.set(i, j, acc.clone());
                    gram.set(j, i, acc);
                }
            }
        }
        gram
    }

    fn jacobi_triple_holds(&self, i: usize, j: usize, k: usize, scratch: &mut [Scalar]) -> bool {
        for s in scratch.iter_mut() {
            *s = Scalar::zero();
        }
        let mut add_term = |a: usize, b: usize, c: usize, scratch: &mut [Scalar]| {
            // [[e_a, e_b], e_c]
            for (m, v) in self.bracket_basis(a, b) {
                for (t, w) in self.bracket_basis(*m as usize, c) {
                    scratch[*t as usize] += &(v * w);
                }
            }
        };
        add_term(i, j, k, scratch);
        add_term(j, k, i, scratch);
        add_term(k, i, j, scratch);
        scratch.iter().all(Scalar::is_zero)
    }

    /// Exhaustive Jacobi sweep over unordered basis triples.
    pub fn jacobi_exhaustive(&self) -> Option<(usize, usize, usize)> {
        use rayon::prelude::*;
        let n = self.dim;
        let failures: Vec<(usize, usize, usize)> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let mut scratch = vec![Scalar::zero(); n];
                let mut bad = Vec::new();
                for j in i + 1..n {
                    for k in j + 1..n {
                        if !self.jacobi_triple_holds(i, j, k, &mut scratch) {
                            bad.push((i, j, k));
                        }
                    }
                }
                bad
            })
            .collect();
        failures.into_iter().min()
    }

    /// Seeded random Jacobi sample, for algebras too large to sweep.
    pub fn jacobi_sampled(&self, seed: u64, count: usize) -> Option<(usize, usize, usize)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut scratch = vec![Scalar::zero(); self.dim];
        for _ in 0..count {
            let i = rng.gen_range(0..self.dim);
            let j = rng.gen_range(0..self.dim);
            let k = rng.gen_range(0..self.dim);
            if !self.jacobi_triple_holds(i, j, k, &mut scratch) {
                return Some((i, j, k));
            }
        }
        None
    }

    fn antisym_holds(&self) -> bool {
        for i in 0..self.dim {
            if !self.bracket_basis(i, i).is_empty() {
                return false;
            }
            for j in i + 1..self.dim {
                let neg: Vec<(u32, Scalar)> = self
                    .bracket_basis(j, i)
                    .iter()
                    .map(|(k, v)| (*k, -v))
                    .collect();
                if self.bracket_basis(i, j) != neg.as_slice() {
                    return false;
                }
            }
        }
        true
    }

    /// Kernel of the adjoint representation.
    pub fn center(&self) -> Subspace {
        self.centralizer_space(&basis_vectors(self.dim))
    }

    fn centralizer_space(&self, elements: &[Vec<Scalar>]) -> Subspace {
        // constraints sum_i x_i [e_i, s]_k = 0, collected sparsely
        let mut rows = SpanBuilder::new(self.dim);
        for s in elements {
            // column k of the constraint block is built from [e_i, s]
            let mut cols: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.dim];
            for i in 0..self.dim {
                let bs = self.bracket_basis_vec(i, s);
                for (k, v) in bs.iter().enumerate() {
                    if !v.is_zero() {
                        cols[k].push((i, v.clone()));
                    }
                }
            }
            for col in cols {
                if !col.is_empty() {
                    rows.insert_sparse(col);
                }
            }
        }
        let constraint = rows.to_subspace();
        if constraint.dim() == 0 {
            return Subspace::full(self.dim);
        }
        constraint.basis().kernel()
    }

    /// Centralizer of a set of elements, as a subalgebra.
    pub fn centralizer(&self, elements: &[Vec<Scalar>]) -> Subalgebra {
        let space = self.centralizer_space(elements);
        self.subalgebra_on(space)
            .expect("centralizers are bracket-closed")
    }

    /// Span of all brackets of basis pairs, as a subalgebra.
    pub fn derived_subalgebra(&self) -> Subalgebra {
        let mut span = SpanBuilder::new(self.dim);
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let row = self.bracket_basis(i, j);
                if !row.is_empty() {
                    span.insert_sparse(row.iter().map(|(k, v)| (*k as usize, v.clone())).collect());
                }
            }
        }
        self.subalgebra_on(span.to_subspace())
            .expect("derived subalgebra is bracket-closed")
    }

    /// Smallest subalgebra containing the seed vectors.
    pub fn generated_subalgebra(&self, seeds: &[Vec<Scalar>]) -> Subalgebra {
        let mut span = SpanBuilder::new(self.dim);
        let mut members: Vec<Vec<Scalar>> = Vec::new();
        let mut work: Vec<Vec<Scalar>> = Vec::new();
        for s in seeds {
            if span.insert_dense(s) {
                work.push(s.clone());
            }
        }
        while let Some(v) = work.pop() {
            for m in &members {
                let b = self.bracket(&v, m);
                if span.insert_dense(&b) {
                    work.push(b);
                }
            }
            // bracket with itself is zero; record as processed
            members.push(v);
        }
        self.subalgebra_on(span.to_subspace())
            .expect("closure is bracket-closed by construction")
    }

    /// Restrict the bracket to a bracket-closed subspace.
    pub fn subalgebra_on(&self, space: Subspace) -> Result<Subalgebra> {
        let d = space.dim();
        let vectors: Vec<Vec<Scalar>> = space.basis_vectors().map(|v| v.to_vec()).collect();
        let mut entries = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                let b = self.bracket(&vectors[i], &vectors[j]);
                let coords = space.coords(&b).ok_or_else(|| {
                    Error::Identification("subspace is not bracket-closed".into())
                })?;
                for (k, v) in coords.into_iter().enumerate() {
                    if !v.is_zero() {
                        entries.push((i, j, k, v));
                    }
                }
            }
        }
        let mut induced = LieAlgebra::from_entries(d, entries)?;
        // inherit any toral seeds that lie in the subspace
        let mut seeds = Vec::new();
        for s in &self.toral_seeds {
            if let Some(c) = space.coords(s) {
                if c.iter().any(|v| !v.is_zero()) {
                    seeds.push(c);
                }
            }
        }
        induced.set_toral_seeds(seeds);
        let inclusion = Matrix::from_fn(self.dim, d, |r, c| vectors[c][r].clone());
        Ok(Subalgebra {
            space,
            induced,
            inclusion,
        })
    }

    pub fn structural_tests(&self) -> StructuralReport {
        let antisym = self.antisym_holds();
        let jacobi_witness = if self.dim <= 133 {
            self.jacobi_exhaustive()
        } else {
            self.jacobi_sampled(crate::claims::config().seed, 200_000)
        };
        let semisimple = self.killing_gram().rank() == self.dim;
        let perfect = self.derived_subalgebra().space.dim() == self.dim;
        let center_dim = self.center().dim();
        StructuralReport {
            jacobi: jacobi_witness.is_none(),
            antisym,
            semisimple,
            perfect,
            center_dim,
            jacobi_witness,
        }
    }

    /// Check that a linear map of the basis is an automorphism, on all basis
    /// pairs: [phi(e_i), phi(e_j)] = phi([e_i, e_j]).
    pub fn is_automorphism(&self, phi: &Matrix) -> bool {
        if phi.rows() != self.dim || phi.cols() != self.dim {
            return false;
        }
        let images: Vec<Vec<Scalar>> = (0..self.dim)
            .map(|j| (0..self.dim).map(|i| phi.at(i, j).clone()).collect())
            .collect();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = self.bracket(&images[i], &images[j]);
                let mut rhs = vec![Scalar::zero(); self.dim];
                for (k, v) in self.bracket_basis(i, j) {
                    for (t, c) in images[*k as usize].iter().enumerate() {
                        if !c.is_zero() {
                            rhs[t] += &(v * c);
                        }
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

pub fn basis_vectors(dim: usize) -> Vec<Vec<Scalar>> {
    (0..dim)
        .map(|i| {
            let mut v = vec![Scalar::zero(); dim];
            v[i] = Scalar::one();
            v
        })
        .collect()
}

/// A subalgebra: the subspace, the restricted structure constants, and the
/// inclusion matrix mapping induced coordinates into the parent. Callers keep
/// the parent algebra alongside; closure in the parent is verified when the
/// subalgebra is built.
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub space: Subspace,
    pub induced: LieAlgebra,
    pub inclusion: Matrix,
}

impl Subalgebra {
    pub fn dim(&self) -> usize {
        self.induced.dim()
    }

    /// Map an element of the induced algebra into parent coordinates.
    pub fn include(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.inclusion.apply(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    /// sl2 with basis e, h, f
    pub(crate) fn sl2() -> LieAlgebra {
        LieAlgebra::from_entries(
            3,
            vec![
                (0, 2, 1, s(1)),  // [e,f] = h
                (1, 0, 0, s(2)),  // [h,e] = 2e
                (1, 2, 2, s(-2)), // [h,f] = -2f
            ],
        )
        .unwrap()
    }

    #[test]
    fn sl2_killing_values() {
        let g = sl2();
        let gram = g.killing_gram();
        assert_eq!(*gram.at(1, 1), s(8));
        assert_eq!(*gram.at(0, 2), s(4));
        assert_eq!(gram.rank(), 3);
    }

    #[test]
    fn sl2_structural_report() {
        let r = sl2().structural_tests();
        assert!(r.jacobi && r.antisym && r.semisimple && r.perfect);
        assert_eq!(r.center_dim, 0);
    }

    #[test]
    fn abelian_structural_report() {
        let g = LieAlgebra::from_entries(2, Vec::new()).unwrap();
        let r = g.structural_tests();
        assert!(r.jacobi && r.antisym);
        assert!(!r.semisimple && !r.perfect);
        assert_eq!(r.center_dim, 2);
    }

    #[test]
    fn derived_of_abelian_and_simple() {
        let ab = LieAlgebra::from_entries(2, Vec::new()).unwrap();
        assert_eq!(ab.derived_subalgebra().dim(), 0);
        assert_eq!(sl2().derived_subalgebra().dim(), 3);
    }

    #[test]
    fn centralizer_of_h_in_sl2() {
        let g = sl2();
        let mut h = vec![Scalar::zero(); 3];
        h[1] = Scalar::one();
        let c = g.centralizer(&[h]);
        assert_eq!(c.dim(), 1);
        assert!(c.space.contains(&[s(0), s(1), s(0)]));
    }

    #[test]
    fn antisymmetry_violations_rejected() {
        let bad = LieAlgebra::from_entries(2, vec![(0, 1, 0, s(1)), (1, 0, 0, s(1))]);
        assert!(bad.is_err());
        let diag = LieAlgebra::from_entries(2, vec![(0, 0, 1, s(1))]);
        assert!(diag.is_err());
    }

    #[test]
    fn generated_subalgebra_closes() {
        let g = sl2();
        let e = vec![s(1), s(0), s(0)];
        let f = vec![s(0), s(0), s(1)];
        let sub = g.generated_subalgebra(&[e, f]);
        assert_eq!(sub.dim(), 3);
        let e_only = g.generated_subalgebra(&[vec![s(1), s(0), s(0)]]);
        assert_eq!(e_only.dim(), 1);
    }
}
