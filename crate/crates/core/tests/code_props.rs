mod common;

use std::collections::HashSet;

use chaincodes::modcodes::{constashift, DEFAULT_WEIGHT_BUDGET};
use chaincodes::oracle::{self, Budget};
use chaincodes::{ChainRing, Elem, Family, GaloisExtension, LinearCode};
use num_bigint::BigUint;
use proptest::prelude::*;

fn rings() -> Vec<ChainRing> {
    vec![
        common::z9(),
        common::eu9(),
        common::ring(Family::GaloisRing, 2, 1, 2),
        common::ring(Family::GaloisRing, 2, 1, 3),
        common::ring(Family::PowerSeries, 2, 2, 2),
    ]
}

/// A ring, a length with `|R|^ℓ ≤ 10^5`, and raw generator entries.
fn random_code() -> impl Strategy<Value = LinearCode> {
    (0..rings().len(), 1usize..=4, prop::collection::vec(prop::collection::vec(any::<u64>(), 4), 0..=3)).prop_map(
        |(ri, ell, raw)| {
            let r = rings()[ri].clone();
            let mut ell = ell;
            while r.size().pow(ell as u32) > 100_000 {
                ell -= 1;
            }
            let rows: Vec<Vec<Elem>> = raw
                .iter()
                .map(|row| row[..ell].iter().map(|&x| r.element(x % r.size()).unwrap()).collect())
                .collect();
            LinearCode::new(&r, ell, &rows).unwrap()
        },
    )
}

fn expected_dual_type(c: &LinearCode) -> Vec<usize> {
    let k = c.code_type();
    let mut out = vec![c.length() - c.rank()];
    out.extend(k[1..].iter().rev());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn duality(c in random_code()) {
        let d = c.dual();
        prop_assert_eq!(d.code_type(), expected_dual_type(&c));
        let total = BigUint::from(c.ring().size()).pow(c.length() as u32);
        prop_assert_eq!(c.cardinality() * d.cardinality(), total);
        prop_assert_eq!(d.dual(), c.clone());
        for g in c.generators() {
            for h in d.generators() {
                prop_assert!(chaincodes::linalg::dot(c.ring(), g, h).is_zero());
            }
        }
        prop_assert!(oracle::same_code(&d, &oracle::brute_dual(&c, &Budget::default()).unwrap(), &Budget::default()).unwrap());
    }

    #[test]
    fn enumeration_and_membership(c in random_code(), probe in prop::collection::vec(any::<u64>(), 4)) {
        let b = Budget::default();
        let brute = oracle::codewords(&c, &b).unwrap();
        let listed: Vec<Vec<Elem>> = c.codewords().collect();
        let listed_set: HashSet<Vec<Elem>> = listed.iter().cloned().collect();
        prop_assert_eq!(listed.len(), listed_set.len());
        prop_assert_eq!(&listed_set, &brute);
        prop_assert_eq!(BigUint::from(brute.len()), c.cardinality());
        let r = c.ring();
        let v: Vec<Elem> = probe[..c.length()].iter().map(|&x| r.element(x % r.size()).unwrap()).collect();
        prop_assert_eq!(c.contains(&v), brute.contains(&v));
        if !c.is_zero() {
            prop_assert_eq!(c.min_weight(DEFAULT_WEIGHT_BUDGET).unwrap(), oracle::brute_min_weight(&c, &b).unwrap());
        }
        prop_assert_eq!(c.is_free(), c.code_type()[1..].iter().all(|&k| k == 0));
    }

    #[test]
    fn type_is_a_code_invariant(c in random_code(), seed in any::<u64>()) {
        // a different generating set: reversed rows plus a combination of them
        let r = c.ring();
        let mut rows: Vec<Vec<Elem>> = c.generators().iter().rev().cloned().collect();
        if let (Some(a), Some(b)) = (rows.first().cloned(), rows.last().cloned()) {
            let k = r.element(seed % r.size()).unwrap();
            rows.push(a.iter().zip(&b).map(|(&x, &y)| r.add(x, r.mul(k, y))).collect());
            let k2 = r.element((seed / 7) % r.size()).unwrap();
            rows[0] = rows[0].iter().map(|&x| r.mul(x, r.add(r.one(), r.mul(k2, r.theta())))).collect();
        }
        let other = LinearCode::new(r, c.length(), &rows).unwrap();
        prop_assert_eq!(other.code_type(), c.code_type());
        prop_assert_eq!(other, c);
    }

    #[test]
    fn sums_and_intersections(a in random_code(), raw in prop::collection::vec(prop::collection::vec(any::<u64>(), 4), 0..=2)) {
        let r = a.ring().clone();
        let rows: Vec<Vec<Elem>> = raw.iter().map(|row| row[..a.length()].iter().map(|&x| r.element(x % r.size()).unwrap()).collect()).collect();
        let b = LinearCode::new(&r, a.length(), &rows).unwrap();
        let budget = Budget::default();
        let (sa, sb) = (oracle::codewords(&a, &budget).unwrap(), oracle::codewords(&b, &budget).unwrap());
        let meet: HashSet<Vec<Elem>> = sa.intersection(&sb).cloned().collect();
        prop_assert_eq!(oracle::codewords(&a.intersect(&b).unwrap(), &budget).unwrap(), meet);
        let sum = a.sum(&b).unwrap();
        prop_assert!(a.is_subcode_of(&sum) && b.is_subcode_of(&sum));
        prop_assert_eq!(a.sum(&LinearCode::zero(&r, a.length())).unwrap(), a.clone());
    }

    #[test]
    fn residue_codes(c in random_code()) {
        let budget = Budget::default();
        let r = c.ring();
        let projected: HashSet<Vec<Elem>> = oracle::codewords(&c, &budget).unwrap()
            .iter()
            .map(|w| w.iter().map(|&x| r.residue(x)).collect())
            .collect();
        prop_assert_eq!(oracle::codewords(&c.residue_code(), &budget).unwrap(), projected);
    }
}

#[test]
fn constacyclic_shifts() {
    let r = common::z9();
    let gamma = r.from_int(8);
    let v = common::ints(&r, &[1, 2, 3]);
    let mut w = v.clone();
    for _ in 0..3 {
        w = constashift(&r, &w, gamma);
    }
    assert_eq!(w, common::ints(&r, &[8, 16, 24]));
    // residue of a γ-constacyclic code is π(γ)-constacyclic
    let k = LinearCode::new(&r, 2, &[common::ints(&r, &[1, 1]), common::ints(&r, &[0, 3])]).unwrap();
    let neg = LinearCode::new(&r, 2, &[common::ints(&r, &[1, 4])]).unwrap();
    for code in [k, neg] {
        for g in r.elements().filter(|&g| r.is_unit(g)) {
            if code.is_constacyclic(g).unwrap() {
                let f = r.residue_field();
                assert!(code.residue_code().is_constacyclic(r.residue(g)).unwrap());
                assert!(oracle::brute_is_constacyclic(&code, g, &Budget::default()).unwrap());
                let _ = f;
            }
        }
    }
}

#[test]
fn spec_examples() {
    let r = common::z9();
    let c = LinearCode::new(&r, 2, &[common::ints(&r, &[1, 1]), common::ints(&r, &[0, 3])]).unwrap();
    assert_eq!(c.code_type(), vec![1, 1]);
    assert_eq!(c.cardinality(), BigUint::from(27u32));
    let c4 = LinearCode::new(&r, 4, &[common::ints(&r, &[1, 0, 2, 1]), common::ints(&r, &[0, 3, 3, 0])]).unwrap();
    assert_eq!(c4.dual().code_type(), vec![2, 1]);
    let a = LinearCode::new(&r, 2, &[common::ints(&r, &[1, 0])]).unwrap();
    let b = LinearCode::new(&r, 2, &[common::ints(&r, &[1, 1])]).unwrap();
    assert!(a.intersect(&b).unwrap().is_zero());
    assert_eq!(LinearCode::full(&r, 3).min_weight(DEFAULT_WEIGHT_BUDGET).unwrap(), 1);
    assert!(LinearCode::zero(&r, 3).min_weight(DEFAULT_WEIGHT_BUDGET).is_err());
    let tight = LinearCode::full(&r, 3).min_weight(100);
    assert!(matches!(tight, Err(chaincodes::Error::BudgetExceeded { .. })));
}

/// Codes over `extend(Z₉, 2)` of length 2 generated by up to two rows.
fn extension_code() -> impl Strategy<Value = (usize, usize)> {
    (0usize..81 * 81, 0usize..81 * 81)
}

fn ext_code(ext: &GaloisExtension, a: usize, b: usize, two_rows: bool) -> LinearCode {
    let s = ext.top();
    let row = |i: usize| vec![s.element((i % 81) as u64).unwrap(), s.element((i / 81) as u64).unwrap()];
    let rows = if two_rows { vec![row(a), row(b)] } else { vec![row(a)] };
    LinearCode::new(s, 2, &rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn delsarte_and_galois_operations((a, b) in extension_code(), two in any::<bool>()) {
        let ext = GaloisExtension::new(&common::z9(), 2).unwrap();
        let budget = Budget::default();
        let code = ext_code(&ext, a, b, two);
        let tr = code.trace_code(&ext).unwrap();
        let res = code.res_subring(&ext).unwrap();
        prop_assert!(oracle::same_code(&tr, &oracle::brute_trace_code(&code, &ext, &budget).unwrap(), &budget).unwrap());
        prop_assert!(oracle::same_code(&res, &oracle::brute_res_subring(&code, &ext, &budget).unwrap(), &budget).unwrap());
        prop_assert_eq!(code.dual().trace_code(&ext).unwrap(), res.dual());
        prop_assert_eq!(code.sigma_image(&ext, 1).unwrap().trace_code(&ext).unwrap(), tr.clone());
        let invariant = code.is_sigma_invariant(&ext).unwrap();
        prop_assert_eq!(invariant, tr == res);
        prop_assert_eq!(invariant, code.code_type() == res.code_type());
        let closure = code.closure_code(&ext).unwrap();
        prop_assert!(closure.is_sigma_invariant(&ext).unwrap());
        prop_assert!(code.is_subcode_of(&closure));
        prop_assert_eq!(res.extend_code(&ext).unwrap().res_subring(&ext).unwrap(), res);
    }
}

#[test]
fn repetition_trace() {
    let ext = GaloisExtension::new(&common::z9(), 2).unwrap();
    let s = ext.top();
    let rep = LinearCode::new(s, 3, &[vec![s.one(); 3]]).unwrap();
    let tr = rep.trace_code(&ext).unwrap();
    let r = ext.base();
    assert!(tr.contains(&[r.from_int(2); 3]));
    assert_eq!(tr, LinearCode::new(r, 3, &[vec![r.one(); 3]]).unwrap());
}
