//! Oracle cross-checks behind `verify`.

use std::fmt::Write;

use chaincodes::arith::{divisors, gcd};
use chaincodes::cosets::CosetSet;
use chaincodes::modcodes::{hamming_weight, DEFAULT_WEIGHT_BUDGET};
use chaincodes::oracle::{self, Budget};
use chaincodes::tracecodes::count_cyclic_codes;
use chaincodes::{contract_code, contract_dual, ChainRing, Error, EvalBasis, LinearCode, Result};
use clap::ValueEnum;
use num_bigint::BigUint;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Counting,
    Decomposition,
    Duality,
    Weight,
    Trace,
    Contraction,
}

const SUITES: [Suite; 6] =
    [Suite::Counting, Suite::Decomposition, Suite::Duality, Suite::Weight, Suite::Trace, Suite::Contraction];

impl Suite {
    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

pub struct Settings {
    pub budget: Budget,
    pub samples: usize,
    pub seed: u64,
}

#[derive(Default)]
struct Outcome {
    checks: usize,
    failures: Vec<String>,
    skipped: Option<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn skip(reason: impl Into<String>) -> Self {
        Outcome { skipped: Some(reason.into()), ..Outcome::default() }
    }

    fn status(&self) -> &'static str {
        match (&self.skipped, self.failures.is_empty()) {
            (Some(_), _) => "SKIP",
            (None, true) => "PASS",
            (None, false) => "FAIL",
        }
    }
}

fn require_coprime(ring: &ChainRing, ell: usize) -> Option<Outcome> {
    (gcd(ell as u64, ring.q()) != 1).then(|| Outcome::skip(format!("gcd({ell}, {}) != 1", ring.q())))
}

fn counting(ring: &ChainRing, ell: usize, s: &Settings) -> Result<Outcome> {
    if let Some(o) = require_coprime(ring, ell) {
        return Ok(o);
    }
    let codes = oracle::enumerate_cyclic_submodules(ring, ell, &s.budget)?;
    let (total, free) = count_cyclic_codes(ring, ell as u64)?;
    let mut o = Outcome::default();
    let found = BigUint::from(codes.len());
    o.check(found == total, || format!("enumerated {found} codes, formula {total}"));
    let found_free = BigUint::from(codes.iter().filter(|c| c.is_free()).count());
    o.check(found_free == free, || format!("enumerated {found_free} free codes, formula {free}"));
    Ok(o)
}

fn decomposition(ring: &ChainRing, ell: usize, s: &Settings) -> Result<Outcome> {
    if let Some(o) = require_coprime(ring, ell) {
        return Ok(o);
    }
    let basis = EvalBasis::new(ring, ell as u64)?;
    let mut o = Outcome::default();
    for c in oracle::enumerate_cyclic_submodules(ring, ell, &s.budget)? {
        let p = basis.decompose_cyclic(&c)?;
        let back = basis.code_from_partition(&p)?;
        o.check(oracle::same_code(&back, &c, &s.budget)?, || format!("code with partition {p} does not round-trip"));
    }
    for p in basis.universe().all_partitions(ring.s()) {
        let c = basis.code_from_partition(&p)?;
        o.check(basis.decompose_cyclic(&c)? == p, || format!("partition {p} does not round-trip"));
        o.check(c.code_type() == p.code_type(), || format!("partition {p} has the wrong type"));
    }
    Ok(o)
}

fn dual_type(c: &LinearCode) -> Vec<usize> {
    let k = c.code_type();
    let mut out = vec![c.length() - c.rank()];
    out.extend(k[1..].iter().rev());
    out
}

fn duality(ring: &ChainRing, ell: usize, s: &Settings) -> Result<Outcome> {
    let mut o = Outcome::default();
    let total = BigUint::from(ring.size()).pow(ell as u32);
    for (i, c) in oracle::sample_codes(ring, ell, s.samples, s.seed).iter().enumerate() {
        let d = c.dual();
        o.check(d.code_type() == dual_type(c), || format!("sample {i}: dual type"));
        o.check(c.cardinality() * d.cardinality() == total, || format!("sample {i}: |C||C^perp| != |R|^ell"));
        o.check(d.dual() == *c, || format!("sample {i}: double dual"));
        let brute = oracle::brute_dual(c, &s.budget)?;
        o.check(oracle::same_code(&d, &brute, &s.budget)?, || format!("sample {i}: dual differs from brute force"));
    }
    Ok(o)
}

fn weight(ring: &ChainRing, ell: usize, s: &Settings) -> Result<Outcome> {
    let mut o = Outcome::default();
    for (i, c) in oracle::sample_codes(ring, ell, s.samples, s.seed).iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let fast = c.min_weight(DEFAULT_WEIGHT_BUDGET)?;
        let brute = oracle::brute_min_weight(c, &s.budget)?;
        o.check(fast == brute, || format!("sample {i}: min weight {fast}, brute force {brute}"));
    }
    Ok(o)
}

fn trace(ring: &ChainRing, ell: usize, s: &Settings) -> Result<Outcome> {
    if let Some(o) = require_coprime(ring, ell) {
        return Ok(o);
    }
    if ell > 16 {
        return Ok(Outcome::skip("all subsets of Sigma_ell are only swept for ell <= 16"));
    }
    let basis = EvalBasis::new(ring, ell as u64)?;
    let uni = basis.universe();
    let mut o = Outcome::default();
    for mask in 0u64..1 << ell {
        let a: CosetSet = (0..ell as u64).filter(|i| mask >> i & 1 == 1).collect();
        let closed = uni.closure(&a);
        let c = basis.trace_eval_code(&a)?;
        o.check(c.rank() == closed.len() && c.is_free(), || format!("A = {a:?}: rank"));
        o.check(c == basis.trace_eval_code(&closed)?, || format!("A = {a:?}: closure"));
        let d = basis.trace_eval_code(&uni.dual(&closed))?;
        let brute = oracle::brute_dual(&c, &s.budget)?;
        o.check(oracle::same_code(&d, &brute, &s.budget)?, || format!("A = {a:?}: dual"));
    }
    Ok(o)
}

fn contraction(ring: &ChainRing, ell: usize, s: &Settings) -> Result<Outcome> {
    if let Some(o) = require_coprime(ring, ell) {
        return Ok(o);
    }
    let us: Vec<u64> = divisors(ell as u64).into_iter().filter(|&u| u > 1 && (ring.q() - 1).is_multiple_of(u)).collect();
    if us.is_empty() {
        return Ok(Outcome::skip(format!("no u > 1 divides both {ell} and q - 1")));
    }
    let basis = EvalBasis::new(ring, ell as u64)?;
    let mut o = Outcome::default();
    for &u in &us {
        for p in basis.universe().all_partitions(ring.s()) {
            let Ok(Some(_)) = p.information_residue(u) else { continue };
            let c = basis.code_from_partition(&p)?;
            let k = contract_code(&c, u as usize)?;
            let tag = || format!("u = {u}, {p}");
            o.check(oracle::brute_is_constacyclic(&k.code, k.gamma(), &s.budget)?, || tag() + ": not constacyclic");
            o.check(k.context.concatenation_code(&k.code)? == c, || tag() + ": concatenation");
            let brute = oracle::brute_dual(&k.code, &s.budget)?;
            o.check(oracle::same_code(&contract_dual(&k)?, &brute, &s.budget)?, || tag() + ": star dual");
            match oracle::codewords(&k.code, &s.budget) {
                Ok(words) => {
                    let ok = words.iter().all(|w| {
                        let image = k.context.concatenate(w).expect("length ell");
                        hamming_weight(&image) == u as usize * hamming_weight(w)
                    });
                    o.check(ok, || tag() + ": weight relation");
                }
                Err(Error::BudgetExceeded { .. }) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(o)
}

/// Runs the selected suites; returns the report and whether all passed.
pub fn run(ring: &ChainRing, ell: usize, suite: Suite, settings: &Settings, as_json: bool) -> Result<(String, bool)> {
    let selected: Vec<Suite> = if suite == Suite::All { SUITES.to_vec() } else { vec![suite] };
    let mut rows = Vec::new();
    for s in selected {
        let outcome = match s {
            Suite::Counting => counting(ring, ell, settings),
            Suite::Decomposition => decomposition(ring, ell, settings),
            Suite::Duality => duality(ring, ell, settings),
            Suite::Weight => weight(ring, ell, settings),
            Suite::Trace => trace(ring, ell, settings),
            Suite::Contraction => contraction(ring, ell, settings),
            Suite::All => unreachable!(),
        }?;
        rows.push((s, outcome));
    }
    let ok = rows.iter().all(|(_, o)| o.failures.is_empty());
    if as_json {
        let list: Vec<_> = rows
            .iter()
            .map(|(s, o)| {
                json!({"suite": s.name(), "status": o.status(), "checks": o.checks,
                       "failures": o.failures, "skipped": o.skipped})
            })
            .collect();
        let text = serde_json::to_string_pretty(&json!({"ok": ok, "suites": list})).unwrap() + "\n";
        return Ok((text, ok));
    }
    let mut out = String::new();
    writeln!(out, "{:<14} {:>7}  result", "suite", "checks").unwrap();
    for (s, o) in &rows {
        write!(out, "{:<14} {:>7}  {}", s.name(), o.checks, o.status()).unwrap();
        if let Some(reason) = &o.skipped {
            write!(out, " ({reason})").unwrap();
        }
        out.push('\n');
        for f in &o.failures {
            writeln!(out, "    {f}").unwrap();
        }
    }
    Ok((out, ok))
}
