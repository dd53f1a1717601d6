//! Canonical subspaces and incremental span construction.
//!
//! A `Subspace` stores its basis in reduced row echelon form, so two
//! subspaces are equal exactly when their basis matrices are identical.
//! `SpanBuilder` maintains the same canonical form incrementally over sparse
//! rows; it is the workhorse behind bracket closures, derivation spans and
//! centralizer bookkeeping.

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_rows(ambient: usize, rows: Vec<Vec<Scalar>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ambient));
        if rows.is_empty() {
            return Subspace::zero(ambient);
        }
        let (rref, pivots) = Matrix::from_rows(rows).rref();
        Subspace {
            ambient,
            basis: rref,
            pivots,
        }
    }

    pub(crate) fn from_rref(ambient: usize, basis: Matrix, pivots: Vec<usize>) -> Self {
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.basis.rows()).map(|i| self.basis.row(i))
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the basis; the result is zero iff `v` lies in the
    /// subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for j in p..self.ambient {
                let b = self.basis.at(row, j);
                if !b.is_zero() {
                    out[j] = &out[j] - &(&f * b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().all(|v| self.contains(v))
    }

    /// Coordinates of `v` with respect to the echelon basis, when `v` lies in
    /// the subspace. For an echelon basis these are just the entries of `v`
    /// at the pivot columns.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Map coordinates back to an ambient vector.
    pub fn lift(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Scalar::zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..self.ambient {
                let b = self.basis.at(i, j);
                if !b.is_zero() {
                    out[j] = &out[j] + &(c * b);
                }
            }
        }
        out
    }

    /// Intersection and sum, via one Zassenhaus elimination.
    pub fn meet_join(&self, other: &Subspace) -> Result<(Subspace, Subspace)> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspace ambients {} vs {}",
                self.ambient, other.ambient
            )));
        }
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for v in self.basis_vectors() {
            let mut row = v.to_vec();
            row.extend_from_slice(v);
            rows.push(row);
        }
        for v in other.basis_vectors() {
            let mut row = v.to_vec();
            row.extend(vec![Scalar::zero(); n]);
            rows.push(row);
        }
        let (rref, pivots) = Matrix::from_rows(rows).rref();
        let mut join_rows = Vec::new();
        let mut meet_rows = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            if p < n {
                join_rows.push(rref.row(i)[..n].to_vec());
            } else {
                meet_rows.push(rref.row(i)[n..].to_vec());
            }
        }
        Ok((
            Subspace::from_rows(n, meet_rows),
            Subspace::from_rows(n, join_rows),
        ))
    }
}

/// Incremental reduced-echelon span over sparse rows.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    ambient: usize,
    /// sorted by pivot index; each row is sparse, sorted, with leading
    /// coefficient one
    rows: Vec<Vec<(usize, Scalar)>>,
}

fn sparse_axpy(target: &mut Vec<(usize, Scalar)>, coeff: &Scalar, row: &[(usize, Scalar)]) {
    // target -= coeff * row, both sorted sparse
    let mut out = Vec::with_capacity(target.len() + row.len());
    let (mut i, mut j) = (0, 0);
    while i < target.len() || j < row.len() {
        match (target.get(i), row.get(j)) {
            (Some((ti, tv)), Some((ri, rv))) => {
                if ti < ri {
                    out.push((*ti, tv.clone()));
                    i += 1;
                } else if ri < ti {
                    let v = -&(coeff * rv);
                    if !v.is_zero() {
                        out.push((*ri, v));
                    }
                    j += 1;
                } else {
                    let v = tv - &(coeff * rv);
                    if !v.is_zero() {
                        out.push((*ti, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            (Some((ti, tv)), None) => {
                out.push((*ti, tv.clone()));
                i += 1;
            }
            (None, Some((ri, rv))) => {
                let v = -&(coeff * rv);
                if !v.is_zero() {
                    out.push((*ri, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    *target = out;
}

impl SpanBuilder {
    pub fn new(ambient: usize) -> Self {
        SpanBuilder {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    fn reduce_sparse(&self, mut v: Vec<(usize, Scalar)>) -> Vec<(usize, Scalar)> {
        loop {
            let Some(&(lead, _)) = v.first() else {
                return v;
            };
            match self.rows.binary_search_by_key(&lead, |r| r[0].0) {
                Ok(idx) => {
                    let coeff = v[0].1.clone();
                    let row = self.rows[idx].clone();
                    sparse_axpy(&mut v, &coeff, &row);
                }
                Err(_) => return v,
            }
        }
    }

    /// Insert a sparse vector; returns true when it enlarges the span.
    pub fn insert_sparse(&mut self, v: Vec<(usize, Scalar)>) -> bool {
        let mut v = self.reduce_sparse(v);
        let Some((lead, lead_val)) = v.first().cloned() else {
            return false;
        };
        // normalize to leading one
        let inv = lead_val.inv();
        for (_, val) in v.iter_mut() {
            *val = &*val * &inv;
        }
        // back-eliminate the new pivot from existing rows
        for row in self.rows.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&lead, |e| e.0) {
                let coeff = row[pos].1.clone();
                sparse_axpy(row, &coeff, &v);
            }
        }
        let at = self
            .rows
            .binary_search_by_key(&lead, |r| r[0].0)
            .unwrap_err();
        self.rows.insert(at, v);
        true
    }

    pub fn insert_dense(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let sparse: Vec<(usize, Scalar)> = v
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, s)| (i, s.clone()))
            .collect();
        self.insert_sparse(sparse)
    }

    pub fn contains_dense(&self, v: &[Scalar]) -> bool {
        let sparse: Vec<(usize, Scalar)> = v
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, s)| (i, s.clone()))
            .collect();
        self.reduce_sparse(sparse).is_empty()
    }

    pub fn to_subspace(&self) -> Subspace {
        let mut rows = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            let mut dense = vec![Scalar::zero(); self.ambient];
            for (i, v) in r {
                dense[*i] = v.clone();
            }
            rows.push(dense);
        }
        // rows are already in reduced echelon form ordered by pivot
        let pivots: Vec<usize> = self.rows.iter().map(|r| r[0].0).collect();
        Subspace::from_rref(self.ambient, Matrix::from_rows(rows), pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn meet_join_trivial_cases() {
        let u = Subspace::from_rows(4, vec![vec![s(1), s(0), s(0), s(0)], vec![s(0), s(1), s(0), s(0)]]);
        let (meet, join) = u.meet_join(&u).unwrap();
        assert_eq!(meet, u);
        assert_eq!(join, u);

        let v = Subspace::from_rows(4, vec![vec![s(0), s(0), s(1), s(0)], vec![s(0), s(0), s(0), s(1)]]);
        let (meet, join) = u.meet_join(&v).unwrap();
        assert_eq!(meet, Subspace::zero(4));
        assert_eq!(join, Subspace::full(4));
    }

    #[test]
    fn meet_join_dimension_law() {
        let u = Subspace::from_rows(3, vec![vec![s(1), s(1), s(0)], vec![s(0), s(1), s(1)]]);
        let v = Subspace::from_rows(3, vec![vec![s(1), s(0), s(-1)], vec![s(1), s(2), s(1)]]);
        let (meet, join) = u.meet_join(&v).unwrap();
        assert_eq!(meet.dim() + join.dim(), u.dim() + v.dim());
        for w in meet.basis_vectors() {
            assert!(u.contains(w) && v.contains(w));
        }
    }

    #[test]
    fn ambient_mismatch_is_error() {
        let u = Subspace::full(2);
        let v = Subspace::full(3);
        assert!(u.meet_join(&v).is_err());
    }

    #[test]
    fn span_builder_matches_subspace() {
        let rows = vec![
            vec![s(2), s(4), s(0)],
            vec![s(1), s(2), s(1)],
            vec![s(3), s(6), s(1)],
        ];
        let mut b = SpanBuilder::new(3);
        for r in &rows {
            b.insert_dense(r);
        }
        assert_eq!(b.dim(), 2);
        assert_eq!(b.to_subspace(), Subspace::from_rows(3, rows));
        assert!(b.contains_dense(&[s(1), s(2), s(5)]));
        assert!(!b.contains_dense(&[s(0), s(1), s(0)]));
    }

    #[test]
    fn coords_and_lift_round_trip() {
        let u = Subspace::from_rows(3, vec![vec![s(1), s(0), s(2)], vec![s(0), s(1), s(-1)]]);
        let v = vec![s(3), s(2), s(4)];
        let c = u.coords(&v).unwrap();
        assert_eq!(u.lift(&c), v);
        assert!(u.coords(&[s(0), s(0), s(1)]).is_none());
    }
}
