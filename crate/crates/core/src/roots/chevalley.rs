//! Chevalley bases: integer structure constants for the split simple Lie
//! algebra of a root system.
//!
//! Signs are fixed the standard way: order the positive roots by height then
//! lexicographically; for each non-simple positive root set the constant of
//! its extraspecial pair (the factorization with minimal first summand) to
//! `p + 1`; every other constant is then determined by the Jacobi identity
//! and the length-weighted cycling relations. The basis is laid out as
//! coroots `h_1..h_r`, then `e` vectors in positive-root order, then the
//! matching `f` vectors.

use super::{build_root_system, Family, RootSystem};
use crate::error::Result;
use crate::lie::algebra::LieAlgebra;
use crate::lie::frame::{CartanFrame, RootData};
use crate::linalg::{Scalar, Subspace};
use std::collections::HashMap;

fn add(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

fn sub(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

fn neg(u: &[Scalar]) -> Vec<Scalar> {
    u.iter().map(|a| -a).collect()
}

fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (a, b) in u.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc += &(a * b);
        }
    }
    acc
}

/// Structure constants N(a, b) for all pairs of roots with a + b a root.
struct ConstantTable<'a> {
    rs: &'a RootSystem,
    /// positive-pair table keyed by (i, j) with i < j in enumeration order
    n: HashMap<(usize, usize), Scalar>,
}

impl<'a> ConstantTable<'a> {
    fn build(rs: &'a RootSystem) -> Self {
        let mut table = ConstantTable {
            rs,
            n: HashMap::new(),
        };
        let positives = rs.positive_roots();
        for (g, gamma) in positives.iter().enumerate() {
            // factorizations gamma = beta_i + beta_j with i < j
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            for (i, beta) in positives.iter().enumerate() {
                let delta = sub(gamma, beta);
                if let Some(j) = rs.positive_root_index(&delta) {
                    if i < j {
                        pairs.push((i, j));
                    }
                }
            }
            if pairs.is_empty() {
                continue;
            }
            pairs.sort();
            let (xi_idx, eta_idx) = pairs[0];
            let p = table.string_down(positives[eta_idx].clone(), &positives[xi_idx]);
            table
                .n
                .insert((xi_idx, eta_idx), Scalar::from_int(p + 1));
            let xi = positives[xi_idx].clone();
            for &(i, j) in &pairs[1..] {
                let alpha = &positives[i];
                let beta = &positives[j];
                let mut acc = Scalar::zero();
                let beta_minus_xi = sub(beta, &xi);
                if rs.is_root(&beta_minus_xi) {
                    let t = &table.n_of(beta, &neg(&xi)) * &table.n_of(&beta_minus_xi, alpha);
                    acc += &t;
                }
                let alpha_minus_xi = sub(alpha, &xi);
                if rs.is_root(&alpha_minus_xi) {
                    let t = &table.n_of(&neg(&xi), alpha) * &table.n_of(&alpha_minus_xi, beta);
                    acc += &t;
                }
                let denom = table.n_of(gamma, &neg(&xi));
                let value = -&(&acc / &denom);
                let expected = table.string_down(beta.clone(), alpha) + 1;
                assert_eq!(
                    value.abs(),
                    Scalar::from_int(expected),
                    "structure constant magnitude must be p + 1 at {g}"
                );
                table.n.insert((i, j), value);
            }
        }
        table
    }

    /// Largest k with beta - k * alpha still a root.
    fn string_down(&self, beta: Vec<Scalar>, alpha: &[Scalar]) -> i64 {
        let mut k = 0;
        let mut probe = sub(&beta, alpha);
        while self.rs.is_root(&probe) {
            k += 1;
            probe = sub(&probe, alpha);
        }
        k
    }

    /// N(a, b) for arbitrary-sign roots with a + b a root.
    fn n_of(&self, a: &[Scalar], b: &[Scalar]) -> Scalar {
        let c = add(a, b);
        debug_assert!(self.rs.is_root(&c));
        let pa = self.rs.positive_root_index(a);
        let pb = self.rs.positive_root_index(b);
        match (pa, pb) {
            (Some(i), Some(j)) => {
                if i < j {
                    self.n[&(i, j)].clone()
                } else {
                    -&self.n[&(j, i)]
                }
            }
            (None, None) => -self.n_of(&neg(a), &neg(b)),
            (Some(_), None) => {
                if self.rs.positive_root_index(&c).is_some() {
                    // N(a,b) = ((c,c)/(a,a)) * N(b, -c), and (b, -c) are both
                    // negative with sum -a
                    let ratio = &dot(&c, &c) / &dot(a, a);
                    &ratio * &self.n_of(b, &neg(&c))
                } else {
                    -self.n_of(&neg(a), &neg(b))
                }
            }
            (None, Some(_)) => -self.n_of(b, a),
        }
    }
}

/// The Chevalley algebra of a root system, with its native Cartan frame.
pub fn chevalley_algebra(rs: &RootSystem) -> (LieAlgebra, CartanFrame) {
    let r = rs.rank;
    let positives = rs.positive_roots();
    let np = positives.len();
    let dim = r + 2 * np;
    let constants = ConstantTable::build(rs);

    let e_idx = |p: usize| r + p;
    let f_idx = |p: usize| r + np + p;
    let x_idx = |root: &[Scalar]| -> (usize, bool) {
        if let Some(p) = rs.positive_root_index(root) {
            (e_idx(p), true)
        } else {
            let p = rs
                .positive_root_index(&neg(root))
                .expect("root of known sign");
            (f_idx(p), false)
        }
    };

    let mut entries: Vec<(usize, usize, usize, Scalar)> = Vec::new();
    // [h_i, e_beta] and [h_i, f_beta]
    for i in 0..r {
        for (p, beta) in positives.iter().enumerate() {
            let c = rs.pairing_with_coroot(beta, &rs.simple_roots()[i]);
            if !c.is_zero() {
                entries.push((i, e_idx(p), e_idx(p), c.clone()));
                entries.push((i, f_idx(p), f_idx(p), -&c));
            }
        }
    }
    // [e_beta, f_beta] = coroot of beta expressed in simple coroots
    for (p, beta) in positives.iter().enumerate() {
        let coeffs = coroot_coordinates(rs, beta);
        for (m, c) in coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                entries.push((e_idx(p), f_idx(p), m, c));
            }
        }
    }
    // root-root brackets
    for (i, alpha) in positives.iter().enumerate() {
        for (j, beta) in positives.iter().enumerate() {
            if i < j {
                let sum = add(alpha, beta);
                if rs.is_root(&sum) {
                    let n = constants.n_of(alpha, beta);
                    let (target, _) = x_idx(&sum);
                    entries.push((e_idx(i), e_idx(j), target, n.clone()));
                    // [f_i, f_j] = N(-a,-b) x_{-(a+b)} = -N(a,b) f_sum
                    let (neg_target, _) = x_idx(&neg(&sum));
                    entries.push((f_idx(i), f_idx(j), neg_target, -&n));
                }
            }
            if i != j {
                let diff = sub(alpha, beta);
                if rs.is_root(&diff) {
                    let n = constants.n_of(alpha, &neg(beta));
                    let (target, _) = x_idx(&diff);
                    entries.push((e_idx(i), f_idx(j), target, n));
                }
            }
        }
    }

    let mut algebra = LieAlgebra::from_entries(dim, entries)
        .expect("chevalley table is antisymmetric by construction");
    let mut seeds = Vec::with_capacity(r);
    for i in 0..r {
        let mut v = vec![Scalar::zero(); dim];
        v[i] = Scalar::one();
        seeds.push(v);
    }
    algebra.set_toral_seeds(seeds);

    let cartan_rows: Vec<Vec<Scalar>> = (0..r)
        .map(|i| {
            let mut v = vec![Scalar::zero(); dim];
            v[i] = Scalar::one();
            v
        })
        .collect();
    let mut roots = Vec::with_capacity(2 * np);
    for (p, beta) in positives.iter().enumerate() {
        let functional: Vec<Scalar> = (0..r)
            .map(|i| rs.pairing_with_coroot(beta, &rs.simple_roots()[i]))
            .collect();
        let mut ev = vec![Scalar::zero(); dim];
        ev[e_idx(p)] = Scalar::one();
        roots.push(RootData {
            functional: functional.clone(),
            vector: ev,
            positive: true,
        });
        let mut fv = vec![Scalar::zero(); dim];
        fv[f_idx(p)] = Scalar::one();
        roots.push(RootData {
            functional: functional.iter().map(|c| -c).collect(),
            vector: fv,
            positive: false,
        });
    }
    let frame = CartanFrame {
        cartan: Subspace::from_rows(dim, cartan_rows),
        roots,
    };
    (algebra, frame)
}

/// Coordinates of beta's coroot in the basis of simple coroots.
fn coroot_coordinates(rs: &RootSystem, beta: &[Scalar]) -> Vec<Scalar> {
    let r = rs.rank;
    let amb = rs.ambient_dim();
    let m = crate::linalg::Matrix::from_fn(amb, r, |i, j| rs.simple_roots()[j][i].clone());
    let b = m.solve(beta).expect("root lies in the simple-root span");
    (0..r)
        .map(|i| {
            let ai = &rs.simple_roots()[i];
            let ratio = &dot(ai, ai) / &dot(beta, beta);
            let c = &b[i] * &ratio;
            assert!(c.is_integer(), "coroot coordinates are integral");
            c
        })
        .collect()
}

/// Convenience: build the Chevalley algebra of a named type.
pub fn chevalley_of(family: Family, rank: usize) -> Result<(RootSystem, LieAlgebra, CartanFrame)> {
    let rs = build_root_system(family, rank)?;
    let (algebra, frame) = chevalley_algebra(&rs);
    Ok((rs, algebra, frame))
}

/// Basis index of the `e` vector for the `p`-th positive root.
pub fn e_index(rs: &RootSystem, p: usize) -> usize {
    rs.rank + p
}

/// Basis index of the `f` vector for the `p`-th positive root.
pub fn f_index(rs: &RootSystem, p: usize) -> usize {
    rs.rank + rs.positive_roots().len() + p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn a1_defining_relations() {
        let (rs, g, _) = chevalley_of(Family::A, 1).unwrap();
        assert_eq!(g.dim(), 3);
        let e = e_index(&rs, 0);
        let f = f_index(&rs, 0);
        assert_eq!(g.bracket_basis(e, f), &[(0, s(1))]);
        assert_eq!(g.bracket_basis(0, e), &[(e as u32, s(2))]);
        assert_eq!(g.bracket_basis(0, f), &[(f as u32, s(-2))]);
    }

    #[test]
    fn structure_constants_are_integers() {
        for (fam, rank) in [(Family::G, 2), (Family::F, 4), (Family::B, 3), (Family::C, 3)] {
            let (_, g, _) = chevalley_of(fam, rank).unwrap();
            for i in 0..g.dim() {
                for j in 0..g.dim() {
                    for (_, v) in g.bracket_basis(i, j) {
                        assert!(v.is_integer(), "{fam}{rank} has fractional constants");
                    }
                }
            }
        }
    }

    #[test]
    fn jacobi_exhaustive_small_types() {
        for (fam, rank) in [
            (Family::A, 2),
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::G, 2),
        ] {
            let (_, g, _) = chevalley_of(fam, rank).unwrap();
            assert_eq!(g.jacobi_exhaustive(), None, "{fam}{rank} fails Jacobi");
        }
    }

    #[test]
    fn killing_gram_ranks() {
        let (_, g2, _) = chevalley_of(Family::G, 2).unwrap();
        assert_eq!(g2.killing_gram().rank(), 14);
        let (_, d6, _) = chevalley_of(Family::D, 6).unwrap();
        assert_eq!(d6.dim(), 66);
        assert_eq!(d6.killing_gram().rank(), 66);
    }

    #[test]
    fn cartan_frame_is_diagonal() {
        let (_, g, frame) = chevalley_of(Family::C, 2).unwrap();
        assert_eq!(frame.rank(), 2);
        for root in &frame.roots {
            for (i, h) in frame.cartan.basis_vectors().enumerate() {
                let image = g.bracket(h, &root.vector);
                let expected: Vec<Scalar> =
                    root.vector.iter().map(|c| c * &root.functional[i]).collect();
                assert_eq!(image, expected);
            }
        }
    }
}
