//! Characteristic polynomials of integer matrices by modular computation.
//!
//! The polynomial is computed modulo a set of 62-bit primes via Hessenberg
//! reduction and reconstructed by the Chinese remainder theorem. The number
//! of primes comes from a Hadamard-style bound on the coefficients, so the
//! reconstruction is exact, not heuristic.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn primes_from(start: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = start | 1;
    while out.len() < count {
        if is_prime_u64(candidate) {
            out.push(candidate);
        }
        candidate -= 2;
    }
    out
}

/// Characteristic polynomial mod p of a matrix already reduced mod p.
/// Coefficients ascending, monic.
fn char_poly_mod_p(mut a: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let n = a.len();
    // similarity reduction to upper Hessenberg form
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| a[i][j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            a.swap(piv, j + 1);
            for row in a.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = inv_mod(a[j + 1][j], p);
        for i in j + 2..n {
            if a[i][j] == 0 {
                continue;
            }
            let f = mul_mod(a[i][j], inv, p);
            for k in j..n {
                let sub = mul_mod(f, a[j + 1][k], p);
                a[i][k] = (a[i][k] + p - sub) % p;
            }
            // inverse similarity: column j+1 gains f * column i
            for row in a.iter_mut() {
                let add = mul_mod(f, row[i], p);
                row[j + 1] = (row[j + 1] + add) % p;
            }
        }
    }
    // char polys of leading principal Hessenberg blocks, by recurrence
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        // p_k(x) = (x - a[k-1][k-1]) p_{k-1}(x)
        //          - sum_{i=1}^{k-1} a[k-1-i][k-1] * prod_{j=1}^{i} a[k-j][k-j-1] * p_{k-1-i}(x)
        let mut pk = vec![0u64; k + 1];
        let prev = &polys[k - 1];
        for (d, &c) in prev.iter().enumerate() {
            pk[d + 1] = (pk[d + 1] + c) % p;
            let sub = mul_mod(a[k - 1][k - 1], c, p);
            pk[d] = (pk[d] + p - sub) % p;
        }
        let mut beta = 1u64;
        for i in 1..k {
            beta = mul_mod(beta, a[k - i][k - i - 1], p);
            if beta == 0 {
                break;
            }
            let coeff = mul_mod(a[k - 1 - i][k - 1], beta, p);
            if coeff == 0 {
                continue;
            }
            for (d, &c) in polys[k - 1 - i].iter().enumerate() {
                let sub = mul_mod(coeff, c, p);
                pk[d] = (pk[d] + p - sub) % p;
            }
        }
        polys.push(pk);
    }
    polys.pop().unwrap()
}

/// Exact characteristic polynomial of an integer matrix, ascending monic
/// coefficients.
pub fn int_char_poly(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    // coefficient bound: sum_k C(n,k) (B sqrt(n))^k <= (1 + B sqrt(n))^n
    let max_bits = a
        .iter()
        .flatten()
        .map(|v| v.abs().bits())
        .max()
        .unwrap_or(1)
        .max(1);
    let bound_bits = (n as u64) * (max_bits + (usize::BITS as u64) / 2 + 2) + 2;
    let prime_count = (bound_bits / 61 + 2) as usize;
    let primes = primes_from((1u64 << 62) - 1, prime_count);

    let mut modulus = BigInt::one();
    // residues[k] accumulated by incremental CRT
    let mut result = vec![BigInt::zero(); n + 1];
    for &p in &primes {
        let reduced: Vec<Vec<u64>> = a
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        let r = v % BigInt::from(p);
                        let r = if r.is_negative() { r + BigInt::from(p) } else { r };
                        u64::try_from(r).expect("residue fits u64")
                    })
                    .collect()
            })
            .collect();
        let poly_p = char_poly_mod_p(reduced, p);
        if modulus.is_one() {
            for k in 0..=n {
                result[k] = BigInt::from(poly_p[k]);
            }
            modulus = BigInt::from(p);
        } else {
            // combine: x = r (mod modulus), x = s (mod p)
            let p_big = BigInt::from(p);
            let m_inv = mod_inverse(&modulus, &p_big);
            for k in 0..=n {
                let r = &result[k];
                let s = BigInt::from(poly_p[k]);
                let diff = ((&s - r) % &p_big + &p_big) % &p_big;
                let t = (diff * &m_inv) % &p_big;
                result[k] = r + t * &modulus;
            }
            modulus *= &p_big;
        }
    }
    // symmetric range
    let half = &modulus / 2;
    for c in result.iter_mut() {
        let mut v = c.clone() % &modulus;
        if v.is_negative() {
            v += &modulus;
        }
        if v > half {
            v -= &modulus;
        }
        *c = v;
    }
    result
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> BigInt {
    // extended Euclid; modulus prime in our usage
    let (mut old_r, mut r) = (a.clone() % modulus, modulus.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    while !r.is_zero() {
        let q = &old_r / &r;
        let tmp = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, tmp);
        let tmp = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, tmp);
    }
    ((old_s % modulus) + modulus) % modulus
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: Vec<Vec<i64>>) -> Vec<Vec<BigInt>> {
        rows.into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect()
    }

    #[test]
    fn primes_are_prime() {
        for p in primes_from((1 << 62) - 1, 5) {
            assert!(is_prime_u64(p));
        }
        assert!(is_prime_u64(2) && is_prime_u64(97) && !is_prime_u64(91));
    }

    #[test]
    fn companion_matrix_char_poly() {
        // companion of x^3 - 2x^2 + 3x - 5
        let a = big(vec![vec![0, 0, 5], vec![1, 0, -3], vec![0, 1, 2]]);
        let got = int_char_poly(&a);
        let want: Vec<BigInt> = [-5i64, 3, -2, 1].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn large_entries_reconstruct_exactly() {
        let v = 1_000_000_007i64;
        let a = big(vec![vec![v, 1], vec![0, v]]);
        let got = int_char_poly(&a);
        // (x - v)^2
        assert_eq!(got[2], BigInt::one());
        assert_eq!(got[1], BigInt::from(-2 * v));
        assert_eq!(got[0], BigInt::from(v) * BigInt::from(v));
    }
}
