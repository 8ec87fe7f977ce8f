//! Brute-force ground truth. Everything here works on explicit codeword sets
//! built by closing generators under addition and scalar multiplication; no
//! echelon form, diagonal reduction or coset structure is used, so agreement
//! with the structured modules is a genuine cross-check.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chainring::{ChainRing, Elem};
use crate::error::{Error, Result};
use crate::galois::GaloisExtension;
use crate::modcodes::{constashift, hamming_weight, LinearCode};

pub type Word = Vec<Elem>;
pub type WordSet = HashSet<Word>;

/// Enumeration caps; inputs beyond them are refused.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Cap on `|R|^ℓ` for full-space scans.
    pub max_vectors: u64,
    /// Cap on the size of any enumerated code.
    pub max_codewords: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_vectors: 10_000_000, max_codewords: 1_000_000 }
    }
}

/// Addition and multiplication tables for rings of at most 1024 elements.
struct Tables {
    n: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
}

struct Arith<'a> {
    ring: &'a ChainRing,
    tables: Option<Tables>,
}

impl<'a> Arith<'a> {
    fn new(ring: &'a ChainRing) -> Self {
        let n = ring.size() as usize;
        let tables = (n <= 1024).then(|| {
            let mut add = vec![0u32; n * n];
            let mut mul = vec![0u32; n * n];
            for a in ring.elements() {
                for b in ring.elements() {
                    let i = a.index() as usize * n + b.index() as usize;
                    add[i] = ring.add(a, b).index() as u32;
                    mul[i] = ring.mul(a, b).index() as u32;
                }
            }
            Tables { n, add, mul }
        });
        Arith { ring, tables }
    }

    fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => self.ring.element(t.add[a.index() as usize * t.n + b.index() as usize] as u64).unwrap(),
            None => self.ring.add(a, b),
        }
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => self.ring.element(t.mul[a.index() as usize * t.n + b.index() as usize] as u64).unwrap(),
            None => self.ring.mul(a, b),
        }
    }

    fn axpy(&self, x: &[Elem], r: Elem, w: &[Elem]) -> Word {
        x.iter().zip(w).map(|(&a, &b)| self.add(a, self.mul(r, b))).collect()
    }

    fn dot(&self, x: &[Elem], y: &[Elem]) -> Elem {
        x.iter().zip(y).fold(self.ring.zero(), |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }
}

fn over_budget(what: &'static str, needed: impl ToString, limit: u64) -> Error {
    Error::BudgetExceeded { what, needed: needed.to_string(), limit }
}

/// `span + R·w`.
fn extend_span(ar: &Arith, span: &WordSet, w: &[Elem], budget: &Budget) -> Result<WordSet> {
    let mut out = WordSet::with_capacity(span.len());
    for x in span {
        for r in ar.ring.elements() {
            out.insert(ar.axpy(x, r, w));
            if out.len() as u64 > budget.max_codewords {
                return Err(over_budget("codewords", format!("more than {}", budget.max_codewords), budget.max_codewords));
            }
        }
    }
    Ok(out)
}

/// The `R`-span of `rows` as an explicit set.
pub fn span(ring: &ChainRing, length: usize, rows: &[Word], budget: &Budget) -> Result<WordSet> {
    let ar = Arith::new(ring);
    let mut set: WordSet = [vec![ring.zero(); length]].into();
    for w in rows {
        if !set.contains(w) {
            set = extend_span(&ar, &set, w, budget)?;
        }
    }
    Ok(set)
}

pub fn codewords(c: &LinearCode, budget: &Budget) -> Result<WordSet> {
    span(c.ring(), c.length(), c.generators(), budget)
}

/// Greedy generators for a set of words that is known to be a submodule.
fn code_from_words<'a>(
    ring: &ChainRing,
    length: usize,
    words: impl IntoIterator<Item = &'a Word>,
    budget: &Budget,
) -> Result<LinearCode> {
    let ar = Arith::new(ring);
    let mut sorted: Vec<&Word> = words.into_iter().collect();
    sorted.sort();
    let mut gens = Vec::new();
    let mut set: WordSet = [vec![ring.zero(); length]].into();
    for w in sorted {
        if !set.contains(w) {
            set = extend_span(&ar, &set, w, budget)?;
            gens.push(w.clone());
        }
    }
    LinearCode::new(ring, length, &gens)
}

fn all_vectors<'a>(ring: &'a ChainRing, length: usize, budget: &Budget) -> Result<impl Iterator<Item = Word> + 'a> {
    let n = ring.size();
    let total = n.checked_pow(length as u32).filter(|&t| t <= budget.max_vectors);
    let total = total.ok_or_else(|| over_budget("vectors", format!("{n}^{length}"), budget.max_vectors))?;
    Ok((0..total).map(move |mut idx| {
        (0..length)
            .map(|_| {
                let e = ring.element(idx % n).unwrap();
                idx /= n;
                e
            })
            .collect()
    }))
}

/// All vectors orthogonal to every generator of `C`, by a full scan of `R^ℓ`.
pub fn brute_dual(c: &LinearCode, budget: &Budget) -> Result<LinearCode> {
    let ring = c.ring();
    let ar = Arith::new(ring);
    let words: Vec<Word> = all_vectors(ring, c.length(), budget)?
        .filter(|v| c.generators().iter().all(|g| ar.dot(g, v).is_zero()))
        .collect();
    code_from_words(ring, c.length(), &words, budget)
}

pub fn brute_min_weight(c: &LinearCode, budget: &Budget) -> Result<usize> {
    codewords(c, budget)?
        .iter()
        .map(|w| hamming_weight(w))
        .filter(|&w| w > 0)
        .min()
        .ok_or(Error::ZeroCode("minimum weight"))
}

/// `τ_γ(c) ∈ C` for every codeword `c`.
pub fn brute_is_constacyclic(c: &LinearCode, gamma: Elem, budget: &Budget) -> Result<bool> {
    let words = codewords(c, budget)?;
    Ok(words.iter().all(|w| words.contains(&constashift(c.ring(), w, gamma))))
}

/// `{Tr(b) : b ∈ B}`.
pub fn brute_trace_code(b: &LinearCode, ext: &GaloisExtension, budget: &Budget) -> Result<LinearCode> {
    let traced: WordSet = codewords(b, budget)?
        .iter()
        .map(|w| w.iter().map(|&x| ext.trace(x)).collect())
        .collect();
    code_from_words(ext.base(), b.length(), &traced, budget)
}

/// `B ∩ R^ℓ`, pulled back to `R`.
pub fn brute_res_subring(b: &LinearCode, ext: &GaloisExtension, budget: &Budget) -> Result<LinearCode> {
    let inside: WordSet = codewords(b, budget)?
        .iter()
        .filter_map(|w| w.iter().map(|&x| ext.restrict(x)).collect::<Option<Word>>())
        .collect();
    code_from_words(ext.base(), b.length(), &inside, budget)
}

/// Whether two codes have the same codeword set.
pub fn same_code(a: &LinearCode, b: &LinearCode, budget: &Budget) -> Result<bool> {
    Ok(a.ring() == b.ring() && a.length() == b.length() && codewords(a, budget)? == codewords(b, budget)?)
}

fn shifts(ring: &ChainRing, v: &[Elem]) -> Vec<Word> {
    let mut out = Vec::with_capacity(v.len());
    let mut w = v.to_vec();
    for _ in 0..v.len() {
        out.push(w.clone());
        w = constashift(ring, &w, ring.one());
    }
    out
}

/// Every `τ_1`-invariant submodule of `R^ℓ`, each exactly once, ordered by size
/// and then by sorted codeword list.
///
/// Single-generator cyclic submodules are formed from one vector per orbit of
/// units × shifts, then closed under sums until no new submodule appears.
pub fn enumerate_cyclic_submodules(ring: &ChainRing, length: usize, budget: &Budget) -> Result<Vec<LinearCode>> {
    let ar = Arith::new(ring);
    let units: Vec<Elem> = ring.elements().filter(|&a| ring.is_unit(a)).collect();
    // canonical key of a codeword set: sorted word list
    let key = |set: &WordSet| -> Vec<Word> {
        let mut v: Vec<Word> = set.iter().cloned().collect();
        v.sort();
        v
    };
    let mut found: BTreeMap<Vec<Word>, Vec<Word>> = BTreeMap::new();
    for v in all_vectors(ring, length, budget)? {
        let is_orbit_min = shifts(ring, &v)
            .iter()
            .all(|s| units.iter().all(|&c| s.iter().map(|&x| ar.mul(c, x)).collect::<Word>() >= v));
        if !is_orbit_min {
            continue;
        }
        let gens = shifts(ring, &v);
        let set = span(ring, length, &gens, budget)?;
        found.entry(key(&set)).or_insert(gens);
    }
    loop {
        let entries: Vec<(Vec<Word>, Vec<Word>)> = found.iter().map(|(k, g)| (k.clone(), g.clone())).collect();
        let mut added = false;
        for (i, (ka, ga)) in entries.iter().enumerate() {
            for (kb, gb) in &entries[i + 1..] {
                let set_a: WordSet = ka.iter().cloned().collect();
                if kb.iter().all(|w| set_a.contains(w)) {
                    continue;
                }
                let mut gens = ga.clone();
                gens.extend(gb.iter().cloned());
                let set = span(ring, length, &gens, budget)?;
                let k = key(&set);
                if let std::collections::btree_map::Entry::Vacant(e) = found.entry(k) {
                    e.insert(gens);
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut out: Vec<(usize, Vec<Word>, Vec<Word>)> =
        found.into_iter().map(|(k, g)| (k.len(), k, g)).collect();
    out.sort();
    out.into_iter().map(|(_, _, g)| LinearCode::new(ring, length, &g)).collect()
}

/// `count` reproducible random codes of length `ell`: up to `ell` rows, each a
/// uniform vector scaled by `θ^t` for a uniform level `t`, so that non-free
/// types turn up as often as free ones.
pub fn sample_codes(ring: &ChainRing, ell: usize, count: usize, seed: u64) -> Vec<LinearCode> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let nrows = rng.gen_range(0..=ell);
            let rows: Vec<Word> = (0..nrows)
                .map(|_| {
                    let th = ring.pow(ring.theta(), rng.gen_range(0..ring.s()) as u64);
                    (0..ell)
                        .map(|_| ring.mul(th, ring.element(rng.gen_range(0..ring.size())).unwrap()))
                        .collect()
                })
                .collect();
            LinearCode::new(ring, ell, &rows).expect("rows have length ell")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::ChainRingSpec;

    fn z9() -> ChainRing {
        ChainRing::new(&ChainRingSpec::galois(3, 1, 2)).unwrap()
    }

    #[test]
    fn small_duals() {
        let r = z9();
        let b = Budget::default();
        let c = LinearCode::new(&r, 2, &[vec![r.one(), r.one()]]).unwrap();
        let d = brute_dual(&c, &b).unwrap();
        assert_eq!(d, LinearCode::new(&r, 2, &[vec![r.one(), r.from_int(8)]]).unwrap());
        assert_eq!(brute_dual(&LinearCode::zero(&r, 2), &b).unwrap(), LinearCode::full(&r, 2));
    }

    #[test]
    fn cyclic_submodule_counts() {
        let b = Budget::default();
        let r = z9();
        assert_eq!(enumerate_cyclic_submodules(&r, 1, &b).unwrap().len(), 3);
        let codes = enumerate_cyclic_submodules(&r, 4, &b).unwrap();
        assert_eq!(codes.len(), 27);
        assert_eq!(codes.iter().filter(|c| c.is_free()).count(), 8);
        let f3 = ChainRing::new(&ChainRingSpec::galois(3, 1, 1)).unwrap();
        assert_eq!(enumerate_cyclic_submodules(&f3, 4, &b).unwrap().len(), 8);
    }

    #[test]
    fn definitional_examples() {
        let r = z9();
        let b = Budget::default();
        let rep = LinearCode::new(&r, 4, &[vec![r.one(); 4]]).unwrap();
        assert_eq!(brute_min_weight(&rep, &b).unwrap(), 4);
        assert!(brute_min_weight(&LinearCode::zero(&r, 2), &b).is_err());
        let ext = GaloisExtension::new(&r, 2).unwrap();
        let zero = LinearCode::zero(ext.top(), 3);
        assert!(brute_trace_code(&zero, &ext, &b).unwrap().is_zero());
        assert!(brute_res_subring(&zero, &ext, &b).unwrap().is_zero());
        assert!(brute_is_constacyclic(&rep, r.one(), &b).unwrap());
        assert!(!brute_is_constacyclic(&rep, r.from_int(-1), &b).unwrap());
    }

    #[test]
    fn samples_are_reproducible() {
        let r = z9();
        let a = sample_codes(&r, 3, 20, 7);
        assert_eq!(a, sample_codes(&r, 3, 20, 7));
        assert!(a.iter().any(|c| !c.is_free()) && a.iter().any(|c| c.is_free() && !c.is_zero()));
    }

    #[test]
    fn budget_is_enforced() {
        let r = z9();
        let tight = Budget { max_vectors: 100, max_codewords: 10 };
        assert!(matches!(brute_dual(&LinearCode::zero(&r, 3), &tight), Err(Error::BudgetExceeded { .. })));
        assert!(matches!(codewords(&LinearCode::full(&r, 2), &tight), Err(Error::BudgetExceeded { .. })));
    }
}
