#![allow(dead_code)]

use chaincodes::{ChainRing, ChainRingSpec, Elem, Family};

pub fn ring(family: Family, p: u64, r: u32, s: u32) -> ChainRing {
    ChainRing::new(&ChainRingSpec { family, p, r, s, modulus: None }).unwrap()
}

pub fn z9() -> ChainRing {
    ring(Family::GaloisRing, 3, 1, 2)
}

pub fn eu9() -> ChainRing {
    ring(Family::PowerSeries, 3, 1, 2)
}

/// Every ring of both families with at most `max_size` elements and `p ≤ 7`.
pub fn small_rings(max_size: u64) -> Vec<ChainRing> {
    let mut out = Vec::new();
    for family in [Family::GaloisRing, Family::PowerSeries] {
        for p in [2u64, 3, 5, 7] {
            for r in 1..=6u32 {
                for s in 1..=6u32 {
                    if p.checked_pow(r * s).is_some_and(|n| n <= max_size) {
                        out.push(ring(family, p, r, s));
                    }
                }
            }
        }
    }
    out
}

pub fn ints(ring: &ChainRing, xs: &[i64]) -> Vec<Elem> {
    xs.iter().map(|&x| ring.from_int(x)).collect()
}
