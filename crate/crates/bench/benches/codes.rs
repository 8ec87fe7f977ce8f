use std::collections::BTreeMap;
use std::hint::black_box;

use chaincodes::modcodes::DEFAULT_WEIGHT_BUDGET;
use chaincodes::oracle::{self, Budget};
use chaincodes::{contract_code, ChainRing, ChainRingSpec, EvalBasis, GaloisExtension, LinearCode};
use criterion::{criterion_group, criterion_main, Criterion};

fn z9() -> ChainRing {
    ChainRing::new(&ChainRingSpec::galois(3, 1, 2)).unwrap()
}

fn negacyclic_ten(basis: &EvalBasis) -> LinearCode {
    let uni = basis.universe();
    let lam: BTreeMap<u64, u32> =
        uni.representatives().into_iter().map(|z| (z, if z == 1 { 0 } else if z == 5 { 1 } else { 2 })).collect();
    basis.code_from_partition(&uni.make_partition(&lam, 2).unwrap()).unwrap()
}

fn rings(c: &mut Criterion) {
    c.bench_function("ring: GR(3^2, 4) construction", |b| {
        b.iter(|| ChainRing::new(&ChainRingSpec::galois(3, 4, 2)).unwrap())
    });
    c.bench_function("extension: Z9 degree 4", |b| b.iter(|| GaloisExtension::new(&z9(), 4).unwrap()));
}

fn codes(c: &mut Criterion) {
    let r = z9();
    let samples = oracle::sample_codes(&r, 12, 16, 3);
    c.bench_function("echelon+dual: 16 codes, Z9, l = 12", |b| {
        b.iter(|| samples.iter().map(|code| code.dual().rank()).sum::<usize>())
    });
    let basis = EvalBasis::new(&r, 20).unwrap();
    c.bench_function("code_from_partition: l = 20", |b| b.iter(|| negacyclic_ten(black_box(&basis))));
    let code = negacyclic_ten(&basis);
    c.bench_function("decompose_cyclic: l = 20", |b| b.iter(|| basis.decompose_cyclic(black_box(&code)).unwrap()));
    c.bench_function("contract_code: l = 20, u = 2", |b| b.iter(|| contract_code(black_box(&code), 2).unwrap()));
    let k = contract_code(&code, 2).unwrap().code;
    c.bench_function("min_weight: |K| = 3^10", |b| b.iter(|| k.min_weight(DEFAULT_WEIGHT_BUDGET).unwrap()));
}

fn oracle_scans(c: &mut Criterion) {
    let r = z9();
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    group.bench_function("enumerate_cyclic_submodules: Z9, l = 4", |b| {
        b.iter(|| oracle::enumerate_cyclic_submodules(&r, 4, &Budget::default()).unwrap())
    });
    let code = oracle::sample_codes(&r, 4, 1, 9).pop().unwrap();
    group.bench_function("brute_dual: Z9, l = 4", |b| b.iter(|| oracle::brute_dual(&code, &Budget::default()).unwrap()));
    group.finish();
}

criterion_group!(benches, rings, codes, oracle_scans);
criterion_main!(benches);
