//! Independent oracles. Nothing here calls into the library's arithmetic.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every tuple of `a^k`, divided by its gcd.
pub fn brute_directions(a: &[u64], k: usize, distinct: bool) -> BTreeSet<Vec<u64>> {
    let mut out = BTreeSet::new();
    if a.is_empty() {
        return out;
    }
    let mut idx = vec![0usize; k];
    loop {
        let t: Vec<u64> = idx.iter().map(|&i| a[i]).collect();
        let all_distinct = (0..k).all(|i| (0..i).all(|j| t[i] != t[j]));
        if !distinct || all_distinct {
            let g = t.iter().fold(0, |g, &x| gcd(g, x));
            out.insert(t.iter().map(|x| x / g).collect());
        }
        let mut p = 0;
        while p < k && idx[p] == a.len() - 1 {
            idx[p] = 0;
            p += 1;
        }
        if p == k {
            return out;
        }
        idx[p] += 1;
    }
}

/// Trial-division primality.
pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn primes_through(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

/// `⌊√n⌋` by Newton's iteration from above.
pub fn newton_isqrt(n: &BigUint) -> BigUint {
    if n.is_zero() {
        return BigUint::zero();
    }
    let mut x = BigUint::one() << n.bits().div_ceil(2);
    loop {
        let y = (&x + n / &x) >> 1;
        if y >= x {
            return x;
        }
        x = y;
    }
}

pub fn factorial(m: u64) -> BigUint {
    (1..=m).fold(BigUint::one(), |f, j| f * j)
}

/// `⌊m!/√2⌋` from a 4096-bit fixed-point value of `1/√2`.
pub fn floor_factorial_over_sqrt2(m: u64) -> BigUint {
    // 2^4096/√2 = √(2^8191)
    let inv_sqrt2 = newton_isqrt(&(BigUint::one() << 8191u32));
    (factorial(m) * inv_sqrt2) >> 4096u32
}

/// `⌊f·(p/q)·√r⌋` for nonnegative `p/q`.
pub fn floor_scaled_surd(f: &BigUint, p: &BigUint, q: &BigUint, r: &BigUint) -> BigUint {
    newton_isqrt(&(f * f * p * p * r)).div_floor(q)
}

/// Exhaustive covering radius: max over `net` of the distance to the closest
/// point of `cloud`.
pub fn brute_covering_radius(net: &[Vec<f64>], cloud: &[Vec<f64>]) -> f64 {
    net.iter()
        .map(|q| {
            cloud
                .iter()
                .map(|p| p.iter().zip(q).map(|(a, b)| (a - b) * (a - b)).sum::<f64>())
                .fold(f64::INFINITY, f64::min)
                .sqrt()
        })
        .fold(0.0, f64::max)
}

pub fn normalize(v: &[u64]) -> Vec<f64> {
    let n = v.iter().map(|&x| (x as f64) * (x as f64)).sum::<f64>().sqrt();
    v.iter().map(|&x| x as f64 / n).collect()
}
