//! Dense univariate polynomials over exact rationals, ascending
//! coefficients. Just enough for minimal polynomials and spectra.

use super::scalar::Scalar;
use num::bigint::BigInt;
use num::{Signed, Zero};

pub fn trim(mut p: Vec<Scalar>) -> Vec<Scalar> {
    while p.len() > 1 && p.last().is_some_and(Scalar::is_zero) {
        p.pop();
    }
    p
}

pub fn degree(p: &[Scalar]) -> usize {
    p.len().saturating_sub(1)
}

pub fn is_zero(p: &[Scalar]) -> bool {
    p.iter().all(Scalar::is_zero)
}

pub fn mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    if is_zero(a) || is_zero(b) {
        return vec![Scalar::zero()];
    }
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

/// Quotient and remainder; divisor must be nonzero.
pub fn div_rem(a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    let b = trim(b.to_vec());
    assert!(!is_zero(&b), "division by zero polynomial");
    let mut rem = trim(a.to_vec());
    if degree(&rem) < degree(&b) || is_zero(&rem) {
        return (vec![Scalar::zero()], rem);
    }
    let mut quot = vec![Scalar::zero(); degree(&rem) - degree(&b) + 1];
    let lead_inv = b.last().unwrap().inv();
    while !is_zero(&rem) && degree(&rem) >= degree(&b) {
        let shift = degree(&rem) - degree(&b);
        let c = rem.last().unwrap() * &lead_inv;
        quot[shift] = c.clone();
        for (i, bv) in b.iter().enumerate() {
            let delta = &c * bv;
            rem[shift + i] = &rem[shift + i] - &delta;
        }
        debug_assert!(rem.last().unwrap().is_zero());
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), trim(rem))
}

pub fn monic(p: &[Scalar]) -> Vec<Scalar> {
    let p = trim(p.to_vec());
    if is_zero(&p) {
        return p;
    }
    let inv = p.last().unwrap().inv();
    p.iter().map(|c| c * &inv).collect()
}

pub fn gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !is_zero(&y) {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    monic(&x)
}

pub fn lcm(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    if is_zero(a) || is_zero(b) {
        return vec![Scalar::zero()];
    }
    let g = gcd(a, b);
    let (q, r) = div_rem(&mul(a, b), &g);
    debug_assert!(is_zero(&r));
    monic(&q)
}

pub fn eval(p: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

pub fn derivative(p: &[Scalar]) -> Vec<Scalar> {
    if p.len() <= 1 {
        return vec![Scalar::zero()];
    }
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &Scalar::from_int(i as i64))
            .collect(),
    )
}

pub fn from_roots(roots: &[Scalar]) -> Vec<Scalar> {
    let mut p = vec![Scalar::one()];
    for r in roots {
        p = mul(&p, &[-r, Scalar::one()]);
    }
    p
}

/// Rational roots, with multiplicity, of a polynomial with rational
/// coefficients. Returns `(roots, fully_split)`; `fully_split` is true when
/// the polynomial is a product of linear factors over the rationals.
pub fn rational_roots(p: &[Scalar]) -> (Vec<(Scalar, usize)>, bool) {
    let mut p = monic(p);
    assert!(!is_zero(&p), "zero polynomial has every root");
    let mut roots: Vec<(Scalar, usize)> = Vec::new();

    // factor out x^v
    let mut zero_mult = 0;
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Scalar::zero(), zero_mult));
    }
    // candidates: divisors of the constant term over divisors of the cleared
    // leading coefficient
    while degree(&p) >= 1 {
        let mut den = BigInt::from(1);
        for c in &p {
            den = num::Integer::lcm(&den, &c.denom());
        }
        let int_coeffs: Vec<BigInt> = p.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let c0 = int_coeffs[0].abs();
        let cn = int_coeffs.last().unwrap().abs();
        let mut found = None;
        'search: for num_d in divisors(&c0) {
            for den_d in divisors(&cn) {
                for sign in [1i64, -1] {
                    let cand = Scalar::new(&num_d * BigInt::from(sign), den_d.clone());
                    if eval(&p, &cand).is_zero() {
                        found = Some(cand);
                        break 'search;
                    }
                }
            }
        }
        let Some(root) = found else {
            return (roots, false);
        };
        let mut mult = 0;
        loop {
            let (q, r) = div_rem(&p, &[-&root, Scalar::one()]);
            if is_zero(&r) {
                p = q;
                mult += 1;
            } else {
                break;
            }
        }
        roots.push((root, mult));
    }
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    (roots, true)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return vec![BigInt::zero()];
    }
    // trial division; constants in our minimal polynomials are products of a
    // handful of small eigenvalues
    let mut small = Vec::new();
    let mut rest = n.abs();
    let mut d = BigInt::from(2);
    while &d * &d <= rest {
        while (&rest % &d).is_zero() {
            small.push(d.clone());
            rest /= &d;
        }
        d += 1;
        if d.bits() > 24 {
            break;
        }
    }
    if rest > BigInt::from(1) {
        small.push(rest);
    }
    let mut divs = vec![BigInt::from(1)];
    for p in small {
        let mut next = divs.clone();
        for v in &divs {
            let mut acc = v.clone();
            loop {
                acc = &acc * &p;
                if (n.abs() % &acc).is_zero() {
                    if !next.contains(&acc) {
                        next.push(acc.clone());
                    }
                } else {
                    break;
                }
                if &acc == &n.abs() {
                    break;
                }
            }
        }
        divs = next;
    }
    divs.sort();
    divs.dedup();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn mul_div_round_trip() {
        let a = vec![s(1), s(2), s(1)]; // (x+1)^2
        let b = vec![s(-3), s(1)]; // x-3
        let prod = mul(&a, &b);
        let (q, r) = div_rem(&prod, &b);
        assert_eq!(q, a);
        assert!(is_zero(&r));
    }

    #[test]
    fn gcd_and_lcm() {
        let a = from_roots(&[s(1), s(2)]);
        let b = from_roots(&[s(2), s(3)]);
        assert_eq!(gcd(&a, &b), from_roots(&[s(2)]));
        assert_eq!(lcm(&a, &b), from_roots(&[s(1), s(2), s(3)]));
    }

    #[test]
    fn rational_root_extraction() {
        let p = from_roots(&[s(0), s(0), s(2), s(-1), Scalar::ratio(1, 2)]);
        let (roots, split) = rational_roots(&p);
        assert!(split);
        assert_eq!(
            roots,
            vec![
                (s(-1), 1),
                (Scalar::zero(), 2),
                (Scalar::ratio(1, 2), 1),
                (s(2), 1)
            ]
        );

        // x^2 + 1 does not split
        let (roots, split) = rational_roots(&[s(1), s(0), s(1)]);
        assert!(!split);
        assert!(roots.is_empty());
    }
}
