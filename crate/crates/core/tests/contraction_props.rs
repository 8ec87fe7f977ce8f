mod common;

use std::collections::BTreeMap;

use chaincodes::linalg::dot;
use chaincodes::modcodes::{constashift, hamming_weight};
use chaincodes::oracle::{self, Budget};
use chaincodes::{contract_code, contract_dual, ChainRing, ContractionContext, EvalBasis, LinearCode};

/// Single-level partition at `uℓ = 56`: `A` at level 0, everything else at `s`.
fn free_partition_code(basis: &EvalBasis, gens: &[u64]) -> LinearCode {
    let uni = basis.universe();
    let a = uni.closure(&gens.iter().copied().collect());
    let s = basis.ring().s();
    let lam: BTreeMap<u64, u32> =
        uni.representatives().into_iter().map(|z| (z, if a.contains(&z) { 0 } else { s })).collect();
    basis.code_from_partition(&uni.make_partition(&lam, s).unwrap()).unwrap()
}

fn orthogonal(a: &LinearCode, b: &LinearCode) -> bool {
    a.generators().iter().all(|g| b.generators().iter().all(|h| dot(a.ring(), g, h).is_zero()))
}

fn example_twenty_eight(r: &ChainRing) {
    let basis = EvalBasis::new(r, 56).unwrap();
    let ks: Vec<_> = [&[1, 7][..], &[1, 5, 7], &[1, 5, 7, 11]]
        .iter()
        .map(|g| contract_code(&free_partition_code(&basis, g), 2).unwrap())
        .collect();
    for k in &ks {
        assert_eq!(k.omega, 1);
        assert_eq!(k.gamma(), r.from_int(-1));
        assert!(k.code.is_free() && k.code.is_constacyclic(r.from_int(-1)).unwrap());
    }
    let (k1, k2, k3) = (&ks[0].code, &ks[1].code, &ks[2].code);
    assert_eq!(k1.rank() + k3.rank(), 28);
    assert!(orthogonal(k1, k3));
    assert_eq!(k1.cardinality() * k3.cardinality(), num_bigint::BigUint::from(r.size()).pow(28));
    assert_eq!(&contract_dual(&ks[0]).unwrap(), k3);
    assert_eq!(k2.rank(), 14);
    assert!(orthogonal(k2, k2));
    assert_eq!(&contract_dual(&ks[1]).unwrap(), k2);
    assert_eq!(&k1.dual(), k3);
}

#[test]
fn twenty_eight_over_f3() {
    example_twenty_eight(&common::ring(chaincodes::Family::GaloisRing, 3, 1, 1));
}

#[test]
fn twenty_eight_over_z9() {
    example_twenty_eight(&common::z9());
}

#[test]
fn twenty_eight_over_eu9() {
    example_twenty_eight(&common::eu9());
}

/// Every partition at `uℓ = 20` with a single information residue.
#[test]
fn contraction_at_twenty() {
    let r = common::z9();
    let basis = EvalBasis::new(&r, 20).unwrap();
    let mut seen = 0;
    for p in basis.universe().all_partitions(2) {
        let Ok(Some(_)) = p.information_residue(2) else { continue };
        seen += 1;
        let c = basis.code_from_partition(&p).unwrap();
        let k = contract_code(&c, 2).unwrap();
        assert_eq!(k.code.code_type(), c.code_type(), "{p}");
        assert!(k.code.is_constacyclic(k.gamma()).unwrap());
        assert_eq!(k.context.concatenation_code(&k.code).unwrap(), c);
        assert_eq!(contract_dual(&k).unwrap(), k.code.dual(), "{p}");
        // the residue code is π(γ)-constacyclic
        assert!(k.code.residue_code().is_constacyclic(r.residue(k.gamma())).unwrap());
    }
    assert!(seen > 10);
}

#[test]
fn order_three_over_z4() {
    // q = 4 residue field, u = 3 divides q − 1
    let r = common::ring(chaincodes::Family::GaloisRing, 2, 2, 2);
    let basis = EvalBasis::new(&r, 9).unwrap();
    let mut seen = 0;
    for p in basis.universe().all_partitions(2) {
        let Ok(Some(omega)) = p.information_residue(3) else { continue };
        seen += 1;
        let c = basis.code_from_partition(&p).unwrap();
        let k = contract_code(&c, 3).unwrap();
        assert_eq!(k.omega, omega);
        assert_eq!(k.context.gamma_order(), if omega == 0 { 1 } else { 3 });
        assert!(k.code.is_constacyclic(k.gamma()).unwrap());
        assert_eq!(contract_dual(&k).unwrap(), k.code.dual(), "{p}");
    }
    assert!(seen > 0);
}

#[test]
fn concatenation_intertwines_shifts() {
    let r = common::z9();
    let gamma = r.from_int(-1);
    let ctx = ContractionContext::new(&r, 4, 2, gamma).unwrap();
    for x in 0..6561u64 {
        let v: Vec<_> = (0..4).map(|i| r.element(x / 9u64.pow(i) % 9).unwrap()).collect();
        let lhs = ctx.concatenate(&constashift(&r, &v, gamma)).unwrap();
        let rhs = constashift(&r, &ctx.concatenate(&v).unwrap(), r.one());
        assert_eq!(lhs, rhs);
        assert_eq!(hamming_weight(&ctx.concatenate(&v).unwrap()), 2 * hamming_weight(&v));
    }
    // R^ℓ concatenates to a free code of rank ℓ
    let full = ctx.concatenation_code(&LinearCode::full(&r, 4)).unwrap();
    assert!(full.is_free() && full.rank() == 4 && full.is_cyclic());
    let not_const = LinearCode::new(&r, 4, &[common::ints(&r, &[1, 0, 0, 0])]).unwrap();
    assert!(ctx.concatenation_code(&not_const).is_err());
}

#[test]
fn weight_relation_on_the_ten_example() {
    let r = common::z9();
    let basis = EvalBasis::new(&r, 20).unwrap();
    let uni = basis.universe();
    let lam: BTreeMap<u64, u32> =
        uni.representatives().into_iter().map(|z| (z, if z == 1 { 0 } else if z == 5 { 1 } else { 2 })).collect();
    let c = basis.code_from_partition(&uni.make_partition(&lam, 2).unwrap()).unwrap();
    let k = contract_code(&c, 2).unwrap();
    let budget = Budget::default();
    let words = oracle::codewords(&k.code, &budget).unwrap();
    assert_eq!(words.len(), 59049);
    for w in &words {
        let image = k.context.concatenate(w).unwrap();
        assert!(c.contains(&image));
        assert_eq!(hamming_weight(&image), 2 * hamming_weight(w));
    }
    assert!(oracle::brute_is_constacyclic(&k.code, r.from_int(-1), &budget).unwrap());
    let image = k.context.concatenation_code(&k.code).unwrap();
    assert!(oracle::brute_is_constacyclic(&image, r.one(), &budget).unwrap());
}
