//! Dense polynomials over the prime field F_p, coefficients low degree first.
//!
//! Only what ring construction needs: irreducibility testing and the canonical
//! choice of modulus.

use crate::arith::{inv_mod, prime_factors};

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod(*b.last().unwrap(), p).expect("p prime");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * lead_inv % p;
        for (j, &y) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - c * y % p) % p;
        }
        r = trim(r);
    }
    r
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// `x^(p^k) mod h`.
fn frobenius_power_of_x(h: &[u64], p: u64, k: u32) -> Vec<u64> {
    let mut cur = rem(&[0, 1], h, p);
    for _ in 0..k {
        // raise to the p-th power by repeated squaring
        let mut acc = vec![1u64];
        let mut base = cur.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &base, p), h, p);
            }
            base = rem(&mul(&base, &base, p), h, p);
            e >>= 1;
        }
        cur = acc;
    }
    cur
}

fn sub_x(a: &[u64], p: u64) -> Vec<u64> {
    let mut v = a.to_vec();
    if v.len() < 2 {
        v.resize(2, 0);
    }
    v[1] = (v[1] + p - 1) % p;
    trim(v)
}

/// Rabin's irreducibility test for a monic `h` of degree `n >= 1` over F_p.
pub fn is_irreducible(h: &[u64], p: u64) -> bool {
    let h = trim(h.iter().map(|c| c % p).collect());
    if h.len() < 2 {
        return false;
    }
    let n = (h.len() - 1) as u32;
    if n == 1 {
        return true;
    }
    if !sub_x(&frobenius_power_of_x(&h, p, n), p).is_empty() {
        return false;
    }
    prime_factors(n as u64).into_iter().all(|d| {
        let g = gcd(&h, &sub_x(&frobenius_power_of_x(&h, p, n / d as u32), p), p);
        g.len() == 1
    })
}

/// The lexicographically smallest monic irreducible polynomial of degree `n`
/// over F_p, comparing coefficients from the constant term upwards.
/// Returned with `n + 1` coefficients, low degree first.
pub fn smallest_irreducible(p: u64, n: u32) -> Vec<u64> {
    let n = n as usize;
    let mut coeffs = vec![0u64; n];
    loop {
        let mut h = coeffs.clone();
        h.push(1);
        if is_irreducible(&h, p) {
            return h;
        }
        // odometer with the constant term most significant
        let mut i = n;
        loop {
            assert!(i > 0, "irreducible polynomials exist in every degree");
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
        }
    }
}
