//! Root systems of the simple types up to rank 8, in their standard
//! Euclidean coordinate models, together with the weight-theoretic
//! quantities needed downstream: Cartan matrices, Weyl vector, fundamental
//! weights, the invariant form normalized so the highest root has squared
//! length two, Weyl dimensions and Casimir pairings.

pub mod chevalley;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'E' => Some(Family::E),
            'F' => Some(Family::F),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A dominant-or-not weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut v = vec![0; rank];
        v[node] = 1;
        Weight(v)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    ambient: usize,
    simple_roots: Vec<Vec<Scalar>>,
    /// all positive roots, sorted by height then lexicographically
    positive_roots: Vec<Vec<Scalar>>,
    positive_index: HashMap<Vec<Scalar>, usize>,
    /// cartan[i][j] = <alpha_j, alpha_i^vee>
    cartan_matrix: Vec<Vec<i64>>,
    weyl_vector: Vec<Scalar>,
    highest_root: Vec<Scalar>,
    fundamental_weights: Vec<Vec<Scalar>>,
    /// scale making the invariant form give (theta, theta) = 2
    norm_scale: Scalar,
    pub dual_coxeter: i64,
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

fn add_vec(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

fn sub_vec(u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

fn scale_vec(u: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    u.iter().map(|a| a * c).collect()
}

fn si(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn simple_roots_model(family: Family, rank: usize) -> Result<Vec<Vec<Scalar>>> {
    let bad = Error::InvalidType {
        family: family.letter(),
        rank,
    };
    let unit = |ambient: usize, i: usize| -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); ambient];
        v[i] = Scalar::one();
        v
    };
    let diff = |ambient: usize, i: usize| {
        let mut v = vec![Scalar::zero(); ambient];
        v[i] = si(1);
        v[i + 1] = si(-1);
        v
    };
    match family {
        Family::A => {
            if !(1..=8).contains(&rank) {
                return Err(bad);
            }
            let amb = rank + 1;
            Ok((0..rank).map(|i| diff(amb, i)).collect())
        }
        Family::B => {
            if !(2..=8).contains(&rank) {
                return Err(bad);
            }
            let mut v: Vec<_> = (0..rank - 1).map(|i| diff(rank, i)).collect();
            v.push(unit(rank, rank - 1));
            Ok(v)
        }
        Family::C => {
            if !(2..=8).contains(&rank) {
                return Err(bad);
            }
            let mut v: Vec<_> = (0..rank - 1).map(|i| diff(rank, i)).collect();
            let mut last = vec![Scalar::zero(); rank];
            last[rank - 1] = si(2);
            v.push(last);
            Ok(v)
        }
        Family::D => {
            if !(4..=8).contains(&rank) {
                return Err(bad);
            }
            let mut v: Vec<_> = (0..rank - 1).map(|i| diff(rank, i)).collect();
            let mut last = vec![Scalar::zero(); rank];
            last[rank - 2] = si(1);
            last[rank - 1] = si(1);
            v.push(last);
            Ok(v)
        }
        Family::E => {
            if !(6..=8).contains(&rank) {
                return Err(bad);
            }
            let h = Scalar::ratio(1, 2);
            let mh = Scalar::ratio(-1, 2);
            let mut alpha1 = vec![mh.clone(); 8];
            alpha1[0] = h.clone();
            alpha1[7] = h;
            let mut alpha2 = vec![Scalar::zero(); 8];
            alpha2[0] = si(1);
            alpha2[1] = si(1);
            let mut v = vec![alpha1, alpha2];
            // alpha_k = e_{k-2} - e_{k-3} for k = 3..=8
            for k in 3..=rank {
                let mut a = vec![Scalar::zero(); 8];
                a[k - 2] = si(1);
                a[k - 3] = si(-1);
                v.push(a);
            }
            Ok(v)
        }
        Family::F => {
            if rank != 4 {
                return Err(bad);
            }
            let mut alpha4 = vec![Scalar::ratio(-1, 2); 4];
            alpha4[0] = Scalar::ratio(1, 2);
            Ok(vec![diff(4, 1), diff(4, 2), unit(4, 3), alpha4])
        }
        Family::G => {
            if rank != 2 {
                return Err(bad);
            }
            let alpha1 = vec![si(1), si(-1), si(0)];
            let alpha2 = vec![si(-2), si(1), si(1)];
            Ok(vec![alpha1, alpha2])
        }
    }
}

fn dual_coxeter_number(family: Family, rank: usize) -> i64 {
    match family {
        Family::A => rank as i64 + 1,
        Family::B => 2 * rank as i64 - 1,
        Family::C => rank as i64 + 1,
        Family::D => 2 * rank as i64 - 2,
        Family::E => match rank {
            6 => 12,
            7 => 18,
            _ => 30,
        },
        Family::F => 9,
        Family::G => 4,
    }
}

/// 2(u, v) / (v, v)
fn cartan_pairing(u: &[Scalar], v: &[Scalar]) -> Scalar {
    &(&dot(u, v) * &si(2)) / &dot(v, v)
}

pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let simple = simple_roots_model(family, rank)?;
    let ambient = simple[0].len();

    // closure by root strings, level by level in height
    let mut by_height: Vec<Vec<Vec<Scalar>>> = vec![simple.clone()];
    let mut seen: HashMap<Vec<Scalar>, usize> = HashMap::new();
    for (i, a) in simple.iter().enumerate() {
        seen.insert(a.clone(), i);
    }
    loop {
        let mut next: Vec<Vec<Scalar>> = Vec::new();
        let last = by_height.last().unwrap().clone();
        for gamma in &last {
            for alpha in &simple {
                if gamma == alpha {
                    continue;
                }
                // q = steps down the alpha-string from gamma
                let mut q = 0i64;
                let mut probe = sub_vec(gamma, alpha);
                while seen.contains_key(&probe) {
                    q += 1;
                    probe = sub_vec(&probe, alpha);
                }
                let pair = cartan_pairing(gamma, alpha);
                let pair = pair.to_i64().expect("integral Cartan pairing");
                if q - pair > 0 {
                    let up = add_vec(gamma, alpha);
                    if !seen.contains_key(&up) && !next.contains(&up) {
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        for r in &next {
            seen.insert(r.clone(), 0);
        }
        by_height.push(next);
    }

    let mut positive_roots: Vec<Vec<Scalar>> = Vec::new();
    for level in &mut by_height {
        level.sort();
        positive_roots.extend(level.iter().cloned());
    }
    let positive_index: HashMap<Vec<Scalar>, usize> = positive_roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), i))
        .collect();

    let top_level = by_height.last().unwrap();
    assert_eq!(top_level.len(), 1, "highest root must be unique");
    let highest_root = top_level[0].clone();
    let max_len = positive_roots
        .iter()
        .map(|r| dot(r, r))
        .max()
        .expect("nonempty");
    assert_eq!(dot(&highest_root, &highest_root), max_len, "highest root is long");
    let norm_scale = &si(2) / &max_len;

    let cartan_matrix: Vec<Vec<i64>> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| {
                    cartan_pairing(&simple[j], &simple[i])
                        .to_i64()
                        .expect("integral Cartan matrix")
                })
                .collect()
        })
        .collect();

    let mut weyl_vector = vec![Scalar::zero(); ambient];
    for r in &positive_roots {
        weyl_vector = add_vec(&weyl_vector, r);
    }
    weyl_vector = scale_vec(&weyl_vector, &Scalar::ratio(1, 2));

    // fundamental weights: omega_i in span(simples) with <omega_i, alpha_j^vee> = delta_ij
    let cmat = Matrix::from_fn(rank, rank, |j, m| si(cartan_matrix[j][m]));
    let mut fundamental_weights = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut e = vec![Scalar::zero(); rank];
        e[i] = Scalar::one();
        let x = cmat.solve(&e).expect("Cartan matrix invertible");
        let mut w = vec![Scalar::zero(); ambient];
        for (m, c) in x.iter().enumerate() {
            w = add_vec(&w, &scale_vec(&simple[m], c));
        }
        fundamental_weights.push(w);
    }

    Ok(RootSystem {
        family,
        rank,
        ambient,
        simple_roots: simple,
        positive_roots,
        positive_index,
        cartan_matrix,
        weyl_vector,
        highest_root,
        fundamental_weights,
        norm_scale,
        dual_coxeter: dual_coxeter_number(family, rank),
    })
}

impl RootSystem {
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn simple_roots(&self) -> &[Vec<Scalar>] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Vec<Scalar>] {
        &self.positive_roots
    }

    pub fn root_count(&self) -> usize {
        2 * self.positive_roots.len()
    }

    pub fn algebra_dim(&self) -> usize {
        self.root_count() + self.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan_matrix
    }

    pub fn highest_root(&self) -> &[Scalar] {
        &self.highest_root
    }

    pub fn weyl_vector(&self) -> &[Scalar] {
        &self.weyl_vector
    }

    pub fn fundamental_weight(&self, i: usize) -> &[Scalar] {
        &self.fundamental_weights[i]
    }

    pub fn positive_root_index(&self, r: &[Scalar]) -> Option<usize> {
        self.positive_index.get(r).copied()
    }

    pub fn is_root(&self, r: &[Scalar]) -> bool {
        if self.positive_index.contains_key(r) {
            return true;
        }
        let neg: Vec<Scalar> = r.iter().map(|c| -c).collect();
        self.positive_index.contains_key(&neg)
    }

    /// Invariant form normalized so that (theta, theta) = 2.
    pub fn normalized_product(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        &dot(u, v) * &self.norm_scale
    }

    /// <u, alpha^vee> = 2(u, alpha)/(alpha, alpha)
    pub fn pairing_with_coroot(&self, u: &[Scalar], alpha: &[Scalar]) -> Scalar {
        cartan_pairing(u, alpha)
    }

    pub fn is_long(&self, r: &[Scalar]) -> bool {
        dot(r, r) == dot(&self.highest_root, &self.highest_root)
    }

    pub fn long_root_count(&self) -> usize {
        2 * self
            .positive_roots
            .iter()
            .filter(|r| self.is_long(r))
            .count()
    }

    pub fn height(&self, r: &[Scalar]) -> i64 {
        // express in the simple-root basis and sum coefficients
        let m = Matrix::from_fn(self.ambient, self.rank, |i, j| self.simple_roots[j][i].clone());
        let coeffs = m.solve(r).expect("root lies in the root lattice");
        let mut h = Scalar::zero();
        for c in &coeffs {
            h += c;
        }
        h.to_i64().expect("integral height")
    }

    pub fn weight_to_ambient(&self, w: &Weight) -> Vec<Scalar> {
        assert_eq!(w.0.len(), self.rank);
        let mut out = vec![Scalar::zero(); self.ambient];
        for (i, &c) in w.0.iter().enumerate() {
            if c != 0 {
                out = add_vec(&out, &scale_vec(&self.fundamental_weights[i], &si(c)));
            }
        }
        out
    }

    /// Highest-root weight in fundamental coordinates.
    pub fn adjoint_weight(&self) -> Weight {
        Weight(
            (0..self.rank)
                .map(|i| {
                    self.pairing_with_coroot(&self.highest_root, &self.simple_roots[i])
                        .to_i64()
                        .expect("integral")
                })
                .collect(),
        )
    }
}

/// (Lambda, Lambda + 2 rho) under the normalized invariant form.
pub fn casimir_pairing(rs: &RootSystem, w: &Weight) -> Result<Scalar> {
    if !w.is_dominant() {
        return Err(Error::NonDominantWeight);
    }
    let lam = rs.weight_to_ambient(w);
    let shifted = add_vec(&lam, &scale_vec(rs.weyl_vector(), &si(2)));
    Ok(rs.normalized_product(&lam, &shifted))
}

/// Dimension of the irreducible module with the given dominant highest
/// weight, by the Weyl dimension formula.
pub fn weyl_dimension(rs: &RootSystem, w: &Weight) -> Result<u64> {
    if !w.is_dominant() {
        return Err(Error::NonDominantWeight);
    }
    let lam_rho = add_vec(&rs.weight_to_ambient(w), rs.weyl_vector());
    let mut num = Scalar::one();
    let mut den = Scalar::one();
    for alpha in rs.positive_roots() {
        num = &num * &rs.normalized_product(&lam_rho, alpha);
        den = &den * &rs.normalized_product(rs.weyl_vector(), alpha);
    }
    let q = &num / &den;
    let v = q
        .to_i64()
        .expect("Weyl dimension formula yields an integer");
    assert!(v > 0);
    Ok(v as u64)
}

/// All valid (family, rank) pairs up to rank 8, in a fixed order.
pub fn all_types() -> Vec<(Family, usize)> {
    let mut v = Vec::new();
    for r in 1..=8 {
        v.push((Family::A, r));
    }
    for r in 2..=8 {
        v.push((Family::B, r));
        v.push((Family::C, r));
    }
    for r in 4..=8 {
        v.push((Family::D, r));
    }
    for r in 6..=8 {
        v.push((Family::E, r));
    }
    v.push((Family::F, 4));
    v.push((Family::G, 2));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent oracle: close the simple roots under all simple
    /// reflections; the orbit is the whole root system.
    fn reflection_closure(simple: &[Vec<Scalar>]) -> HashSet<Vec<Scalar>> {
        let mut set: HashSet<Vec<Scalar>> = simple.iter().cloned().collect();
        loop {
            let mut grew = false;
            let snapshot: Vec<_> = set.iter().cloned().collect();
            for beta in &snapshot {
                for alpha in simple {
                    let c = cartan_pairing(beta, alpha);
                    let refl = sub_vec(beta, &scale_vec(alpha, &c));
                    if set.insert(refl) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return set;
            }
        }
    }

    #[test]
    fn a1_is_two_roots() {
        let rs = build_root_system(Family::A, 1).unwrap();
        assert_eq!(rs.root_count(), 2);
        assert_eq!(rs.algebra_dim(), 3);
    }

    #[test]
    fn g2_census() {
        let rs = build_root_system(Family::G, 2).unwrap();
        assert_eq!(rs.root_count(), 12);
        assert_eq!(rs.long_root_count(), 6);
    }

    #[test]
    fn e7_census() {
        let rs = build_root_system(Family::E, 7).unwrap();
        assert_eq!(rs.root_count(), 126);
        assert_eq!(rs.algebra_dim(), 133);
    }

    #[test]
    fn enumeration_matches_reflection_oracle() {
        for (fam, rank) in all_types() {
            let rs = build_root_system(fam, rank).unwrap();
            let oracle = reflection_closure(rs.simple_roots());
            let mut ours: HashSet<Vec<Scalar>> = HashSet::new();
            for r in rs.positive_roots() {
                ours.insert(r.clone());
                ours.insert(r.iter().map(|c| -c).collect());
            }
            assert_eq!(ours, oracle, "{}{} root set", fam, rank);
        }
    }

    #[test]
    fn highest_root_is_long_and_dominant() {
        for (fam, rank) in all_types() {
            let rs = build_root_system(fam, rank).unwrap();
            assert!(rs.is_long(rs.highest_root()), "{}{}", fam, rank);
            assert!(rs.adjoint_weight().is_dominant(), "{}{}", fam, rank);
            let theta = rs.highest_root().to_vec();
            assert_eq!(rs.normalized_product(&theta, &theta), Scalar::from_int(2));
        }
    }

    #[test]
    fn weyl_dimension_examples() {
        let a1 = build_root_system(Family::A, 1).unwrap();
        assert_eq!(weyl_dimension(&a1, &Weight::fundamental(1, 0)).unwrap(), 2);

        let e7 = build_root_system(Family::E, 7).unwrap();
        assert_eq!(weyl_dimension(&e7, &Weight::fundamental(7, 6)).unwrap(), 56);

        let d6 = build_root_system(Family::D, 6).unwrap();
        // half-spinor node
        assert_eq!(weyl_dimension(&d6, &Weight::fundamental(6, 5)).unwrap(), 32);

        for (fam, rank) in all_types() {
            let rs = build_root_system(fam, rank).unwrap();
            assert_eq!(weyl_dimension(&rs, &Weight::zero(rank)).unwrap(), 1);
            assert_eq!(
                weyl_dimension(&rs, &rs.adjoint_weight()).unwrap() as usize,
                rs.algebra_dim(),
                "{}{} adjoint dimension",
                fam,
                rank
            );
        }
    }

    #[test]
    fn casimir_examples() {
        let a1 = build_root_system(Family::A, 1).unwrap();
        assert_eq!(
            casimir_pairing(&a1, &a1.adjoint_weight()).unwrap(),
            Scalar::from_int(4)
        );
        let d6 = build_root_system(Family::D, 6).unwrap();
        assert_eq!(
            casimir_pairing(&d6, &Weight::fundamental(6, 0)).unwrap(),
            Scalar::from_int(11)
        );
        assert_eq!(
            casimir_pairing(&d6, &Weight::zero(6)).unwrap(),
            Scalar::zero()
        );
        assert!(casimir_pairing(&a1, &Weight(vec![-1])).is_err());
    }

    #[test]
    fn dimension_counts_match_tables() {
        let expected: &[(Family, usize, usize)] = &[
            (Family::A, 7, 63),
            (Family::B, 3, 21),
            (Family::B, 4, 36),
            (Family::C, 2, 10),
            (Family::C, 3, 21),
            (Family::D, 4, 28),
            (Family::D, 6, 66),
            (Family::E, 6, 78),
            (Family::E, 8, 248),
            (Family::F, 4, 52),
        ];
        for &(fam, rank, dim) in expected {
            let rs = build_root_system(fam, rank).unwrap();
            assert_eq!(rs.algebra_dim(), dim, "{}{}", fam, rank);
        }
        assert!(build_root_system(Family::D, 3).is_err());
        assert!(build_root_system(Family::E, 9).is_err());
    }
}
