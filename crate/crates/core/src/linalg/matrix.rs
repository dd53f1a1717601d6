//! Dense matrices over exact rationals.
//!
//! Elimination is fraction-free (Bareiss) on a denominator-cleared integer
//! copy, with a final rational reduction to the exact reduced row echelon
//! form. Characteristic polynomials of larger matrices go through a modular
//! Hessenberg computation with Chinese-remainder reconstruction; the prime
//! count is chosen from a Hadamard-style coefficient bound, so the result is
//! still exact.

use super::scalar::Scalar;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::{Integer, One, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_int_rows(rows: Vec<Vec<i64>>) -> Self {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(Scalar::from_int).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "vector length mismatch");
        let mut out = vec![Scalar::zero(); self.rows];
        for i in 0..self.rows {
            let mut acc = Scalar::zero();
            for j in 0..self.cols {
                let a = self.at(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    acc += &(a * &v[j]);
                }
            }
            out[i] = acc;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square());
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        t
    }

    /// Flatten row-major into a single vector; used to treat operators as
    /// vectors when spanning operator spaces.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<Scalar>) -> Matrix {
        assert_eq!(rows * cols, data.len());
        Matrix { rows, cols, data }
    }

    /// Exact reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        // clear denominators row by row, then run Bareiss on integers
        let mut int_rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let mut l = BigInt::one();
                for v in self.row(i) {
                    l = l.lcm(&v.denom());
                }
                self.row(i)
                    .iter()
                    .map(|v| v.numer() * (&l / v.denom()))
                    .collect()
            })
            .collect();

        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0usize;
        for c in 0..self.cols {
            let Some(pr) = (r..self.rows).find(|&i| !int_rows[i][c].is_zero()) else {
                continue;
            };
            int_rows.swap(r, pr);
            for i in r + 1..self.rows {
                if int_rows[i].iter().all(Zero::is_zero) {
                    continue;
                }
                for j in c + 1..self.cols {
                    let num = &int_rows[r][c] * &int_rows[i][j] - &int_rows[i][c] * &int_rows[r][j];
                    int_rows[i][j] = num / &prev;
                }
                int_rows[i][c] = BigInt::zero();
            }
            prev = int_rows[r][c].clone();
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }

        // rational back substitution on the echelon rows
        let rank = pivots.len();
        let mut rows: Vec<Vec<Scalar>> = int_rows[..rank]
            .iter()
            .map(|row| row.iter().map(|v| Scalar::from_big(v.clone())).collect())
            .collect();
        for k in (0..rank).rev() {
            let c = pivots[k];
            let inv = rows[k][c].inv();
            for j in c..self.cols {
                rows[k][j] = &rows[k][j] * &inv;
            }
            for i in 0..k {
                let f = rows[i][c].clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..self.cols {
                    let delta = &f * &rows[k][j];
                    rows[i][j] = &rows[i][j] - &delta;
                }
            }
        }

        let mut out = Matrix::zeros(rank, self.cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                out.set(i, j, v);
            }
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rank, kernel and row space in one pass.
    pub fn rref_rank_kernel(&self) -> (usize, Subspace, Subspace) {
        let (rref, pivots) = self.rref();
        let rank = pivots.len();
        let rowspace = Subspace::from_rref(self.cols, rref.clone(), pivots.clone());

        let mut kernel_rows = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Scalar::zero(); self.cols];
            vec[free] = Scalar::one();
            for (&pc, i) in pivots.iter().zip(0..rank) {
                vec[pc] = -rref.at(i, free);
            }
            kernel_rows.push(vec);
        }
        let kernel = Subspace::from_rows(self.cols, kernel_rows);
        (rank, kernel, rowspace)
    }

    pub fn kernel(&self) -> Subspace {
        self.rref_rank_kernel().1
    }

    /// Solve `A x = b`; free variables are pinned to zero so the result is
    /// canonical. Returns `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len(), "rhs length mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (rref, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = rref.at(i, self.cols).clone();
        }
        Some(x)
    }

    /// Monic characteristic polynomial, coefficients in ascending degree.
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert!(self.is_square(), "characteristic polynomial needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return vec![Scalar::one()];
        }
        // clear denominators globally: char(dA)(y) = d^n char(A)(y/d)
        let mut d = BigInt::one();
        for v in &self.data {
            d = d.lcm(&v.denom());
        }
        let int: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|v| v.numer() * (&d / v.denom()))
                    .collect()
            })
            .collect();
        let coeffs = super::modular::int_char_poly(&int);
        // c_k(A) = c'_k * d^(k-n)
        let mut scale = Scalar::one();
        let dd = Scalar::from_big(d);
        let mut out = vec![Scalar::zero(); n + 1];
        for k in (0..=n).rev() {
            out[k] = &Scalar::from_big(coeffs[k].clone()) * &scale;
            if k > 0 {
                scale = &scale / &dd;
            }
        }
        out
    }

    /// Exact exponential of a nilpotent matrix.
    pub fn exp_nilpotent(&self) -> Result<Matrix> {
        assert!(self.is_square(), "exponential needs a square matrix");
        let n = self.rows;
        let mut sum = Matrix::identity(n);
        let mut power = Matrix::identity(n);
        let mut factorial = BigInt::one();
        for i in 1..=n {
            power = power.mul(self);
            if power.is_zero() {
                return Ok(sum);
            }
            factorial *= i;
            let inv = Scalar::new(BigInt::one(), factorial.clone());
            sum = sum.add(&power.scale(&inv));
        }
        if power.is_zero() {
            Ok(sum)
        } else {
            Err(Error::NotNilpotent(n))
        }
    }

    /// Minimal polynomial, computed as the lcm of the local minimal
    /// polynomials of all standard basis vectors (monic, ascending).
    pub fn minimal_polynomial(&self) -> Vec<Scalar> {
        use super::poly;
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = vec![Scalar::one()];
        for start in 0..n {
            if poly::degree(&acc) == n {
                break;
            }
            let mut v = vec![Scalar::zero(); n];
            v[start] = Scalar::one();
            // Krylov chain for v: stop at the first linear dependence
            let mut builder = super::subspace::SpanBuilder::new(n);
            let mut chain: Vec<Vec<Scalar>> = Vec::new();
            let mut cur = v;
            loop {
                if !builder.insert_dense(&cur) {
                    break;
                }
                chain.push(cur.clone());
                cur = self.apply(&cur);
            }
            // express the dependent vector in the chain: solve chain^T c = cur
            let cols = chain.len();
            let m = Matrix::from_fn(n, cols, |i, j| chain[j][i].clone());
            let sol = m.solve(&cur).expect("krylov dependence must be solvable");
            let mut local = vec![Scalar::zero(); cols + 1];
            local[cols] = Scalar::one();
            for (k, c) in sol.into_iter().enumerate() {
                local[k] = -c;
            }
            acc = poly::lcm(&acc, &local);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn rref_identity() {
        let m = Matrix::identity(3);
        let (rank, kernel, rowspace) = m.rref_rank_kernel();
        assert_eq!(rank, 3);
        assert_eq!(kernel.dim(), 0);
        assert_eq!(rowspace, Subspace::full(3));
    }

    #[test]
    fn rref_one_by_two() {
        let m = Matrix::from_int_rows(vec![vec![1, 1]]);
        let (rank, kernel, rowspace) = m.rref_rank_kernel();
        assert_eq!(rank, 1);
        assert_eq!(
            kernel,
            Subspace::from_rows(2, vec![vec![s(1), s(-1)]])
        );
        assert_eq!(
            rowspace,
            Subspace::from_rows(2, vec![vec![s(1), s(1)]])
        );
    }

    #[test]
    fn solve_cases() {
        let id = Matrix::identity(3);
        let b = vec![s(4), s(-1), s(7)];
        assert_eq!(id.solve(&b), Some(b.clone()));

        // canonical free-variable choice
        let m = Matrix::from_int_rows(vec![vec![1, 1]]);
        assert_eq!(m.solve(&[s(2)]), Some(vec![s(2), s(0)]));

        let m = Matrix::from_int_rows(vec![vec![1], vec![1]]);
        assert_eq!(m.solve(&[s(1), s(2)]), None);
    }

    #[test]
    fn char_poly_trivial_cases() {
        // (x-1)^2
        assert_eq!(
            Matrix::identity(2).char_poly(),
            vec![s(1), s(-2), s(1)]
        );
        // single nilpotent Jordan block: x^3
        let n = Matrix::from_int_rows(vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(n.char_poly(), vec![s(0), s(0), s(0), s(1)]);
    }

    #[test]
    fn char_poly_rational_entries() {
        let m = Matrix::from_rows(vec![
            vec![Scalar::ratio(1, 2), Scalar::zero()],
            vec![Scalar::zero(), Scalar::ratio(1, 3)],
        ]);
        // (x - 1/2)(x - 1/3) = x^2 - 5/6 x + 1/6
        assert_eq!(
            m.char_poly(),
            vec![Scalar::ratio(1, 6), Scalar::ratio(-5, 6), Scalar::one()]
        );
    }

    #[test]
    fn exp_nilpotent_cases() {
        let z = Matrix::zeros(4, 4);
        assert_eq!(z.exp_nilpotent().unwrap(), Matrix::identity(4));

        let n = Matrix::from_int_rows(vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(n.exp_nilpotent().unwrap(), Matrix::identity(2).add(&n));

        let bad = Matrix::identity(2);
        assert!(bad.exp_nilpotent().is_err());
    }

    #[test]
    fn minimal_polynomial_diag() {
        let m = Matrix::from_int_rows(vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 5]]);
        // (x-2)(x-5) = x^2 - 7x + 10
        assert_eq!(m.minimal_polynomial(), vec![s(10), s(-7), s(1)]);
    }

    fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(-5i64..=5, rows * cols).prop_map(move |v| {
            Matrix::from_flat(rows, cols, v.into_iter().map(Scalar::from_int).collect())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_of_transpose_matches(m in arb_matrix(4, 5)) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_of_product_bounded(a in arb_matrix(4, 4), b in arb_matrix(4, 4)) {
            let ab = a.mul(&b);
            prop_assert!(ab.rank() <= a.rank().min(b.rank()));
        }

        #[test]
        fn solve_is_exact(a in arb_matrix(4, 4), x in proptest::collection::vec(-5i64..=5, 4)) {
            let xs: Vec<Scalar> = x.into_iter().map(Scalar::from_int).collect();
            let b = a.apply(&xs);
            let sol = a.solve(&b).expect("consistent by construction");
            prop_assert_eq!(a.apply(&sol), b);
        }

        #[test]
        fn exp_of_strictly_upper_inverts(v in proptest::collection::vec(-4i64..=4, 10)) {
            // strictly upper triangular 5x5, hence nilpotent
            let mut n = Matrix::zeros(5, 5);
            let mut it = v.into_iter();
            for i in 0..5 {
                for j in i + 1..5 {
                    n.set(i, j, Scalar::from_int(it.next().unwrap_or(0)));
                }
            }
            let e = n.exp_nilpotent().unwrap();
            let e_inv = n.scale(&Scalar::from_int(-1)).exp_nilpotent().unwrap();
            prop_assert_eq!(e.mul(&e_inv), Matrix::identity(5));
        }

        #[test]
        fn char_poly_similarity_invariant(m in arb_matrix(4, 4), k in -3i64..=3) {
            // P = I + k*E_{0,1} is invertible with easy inverse
            let mut p = Matrix::identity(4);
            p.set(0, 1, Scalar::from_int(k));
            let mut p_inv = Matrix::identity(4);
            p_inv.set(0, 1, Scalar::from_int(-k));
            let conj = p.mul(&m).mul(&p_inv);
            prop_assert_eq!(conj.char_poly(), m.char_poly());
        }
    }
}
