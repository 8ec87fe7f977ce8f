//! Cyclotomic cosets of `q` modulo `ℓ` and partitions of `Σ_ℓ = {0, …, ℓ-1}`
//! into `q`-closed blocks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::arith::{divisors, euler_phi, gcd, mult_order};
use crate::error::{Error, Result};

/// A subset of `Σ_ℓ`, kept sorted.
pub type CosetSet = BTreeSet<u64>;

/// `Σ_ℓ` together with the multiplier `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CosetUniverse {
    ell: u64,
    q: u64,
    m: u64,
}

impl CosetUniverse {
    pub fn new(ell: u64, q: u64) -> Result<Self> {
        if ell == 0 {
            return Err(Error::InvalidSet("length must be positive".into()));
        }
        if q < 2 {
            return Err(Error::InvalidSet(format!("q = {q} is not a prime power")));
        }
        if gcd(ell, q) != 1 {
            return Err(Error::NotCoprime(ell, q));
        }
        Ok(CosetUniverse { ell, q, m: mult_order(q, ell) })
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `ord_ℓ(q)`.
    pub fn order(&self) -> u64 {
        self.m
    }

    pub fn full(&self) -> CosetSet {
        (0..self.ell).collect()
    }

    /// Validates and collects members, reducing nothing: out-of-range entries are errors.
    pub fn set(&self, members: impl IntoIterator<Item = u64>) -> Result<CosetSet> {
        let set: CosetSet = members.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&a| a >= self.ell) {
            return Err(Error::InvalidSet(format!("{bad} is not in Σ_{}", self.ell)));
        }
        Ok(set)
    }

    /// `∁_q({z})`.
    pub fn coset(&self, z: u64) -> CosetSet {
        let mut out = CosetSet::new();
        let mut x = z % self.ell;
        while out.insert(x) {
            x = x * self.q % self.ell;
        }
        out
    }

    /// Smallest `q`-closed superset.
    pub fn closure(&self, a: &CosetSet) -> CosetSet {
        let mut out = CosetSet::new();
        for &z in a {
            if !out.contains(&z) {
                out.extend(self.coset(z));
            }
        }
        out
    }

    pub fn is_closed(&self, a: &CosetSet) -> bool {
        a.iter().all(|&z| a.contains(&(z * self.q % self.ell)))
    }

    /// All cosets, ordered by their least element.
    pub fn cosets(&self) -> Vec<CosetSet> {
        let mut seen = vec![false; self.ell as usize];
        let mut out = Vec::new();
        for z in 0..self.ell {
            if !seen[z as usize] {
                let c = self.coset(z);
                for &x in &c {
                    seen[x as usize] = true;
                }
                out.push(c);
            }
        }
        out
    }

    /// The least element of each coset.
    pub fn representatives(&self) -> CosetSet {
        self.cosets().iter().map(|c| *c.first().unwrap()).collect()
    }

    /// Representative (least element) of the coset containing `z`.
    pub fn representative(&self, z: u64) -> u64 {
        *self.coset(z).first().unwrap()
    }

    pub fn count_classes(&self) -> usize {
        self.cosets().len()
    }

    /// `Σ_{d | ℓ} φ(d) / ord_d(q)`.
    pub fn count_classes_formula(&self) -> u64 {
        divisors(self.ell)
            .into_iter()
            .map(|d| euler_phi(d) / mult_order(self.q, d))
            .sum()
    }

    /// `c·A`; requires `gcd(c, ℓ) = 1` so that closed sets stay closed.
    pub fn multiples(&self, a: &CosetSet, c: u64) -> Result<CosetSet> {
        if gcd(c % self.ell, self.ell) != 1 {
            return Err(Error::NotCoprime(c, self.ell));
        }
        Ok(a.iter().map(|&z| z * (c % self.ell) % self.ell).collect())
    }

    /// `−A`.
    pub fn opposite(&self, a: &CosetSet) -> CosetSet {
        a.iter().map(|&z| (self.ell - z) % self.ell).collect()
    }

    /// `Σ_ℓ ∖ A`.
    pub fn complement(&self, a: &CosetSet) -> CosetSet {
        (0..self.ell).filter(|z| !a.contains(z)).collect()
    }

    /// `A^⋄`, the complement of `−A`.
    pub fn dual(&self, a: &CosetSet) -> CosetSet {
        self.complement(&self.opposite(a))
    }

    /// `A^{⋆u} = {a ∈ A^⋄ : a ≡ −ω (mod u)}`.
    pub fn star_dual(&self, a: &CosetSet, u: u64, omega: u64) -> CosetSet {
        let target = (u - omega % u) % u;
        self.dual(a).into_iter().filter(|z| z % u == target).collect()
    }

    /// Builds the partition `A_t = ∁_q(λ^{-1}(t))` from a map `λ` on the representatives.
    pub fn make_partition(&self, assignment: &BTreeMap<u64, u32>, s: u32) -> Result<CyclotomicPartition> {
        let reps = self.representatives();
        if let Some((&z, _)) = assignment.iter().find(|(z, _)| !reps.contains(z)) {
            return Err(Error::InvalidPartition(format!("{z} is not a coset representative")));
        }
        let mut blocks = vec![CosetSet::new(); s as usize + 1];
        for rep in &reps {
            let &level = assignment
                .get(rep)
                .ok_or_else(|| Error::InvalidPartition(format!("representative {rep} has no level")))?;
            if level > s {
                return Err(Error::InvalidPartition(format!("level {level} exceeds s = {s}")));
            }
            blocks[level as usize].extend(self.coset(*rep));
        }
        Ok(CyclotomicPartition { universe: *self, blocks })
    }

    /// Every `(q, s)`-cyclotomic partition, `(s+1)^N` of them for `N` classes,
    /// in lexicographic order of the level vector over the sorted representatives.
    pub fn all_partitions(&self, s: u32) -> impl Iterator<Item = CyclotomicPartition> + '_ {
        let reps: Vec<u64> = self.representatives().into_iter().collect();
        let n = reps.len();
        let total = (s as u64 + 1).checked_pow(n as u32).unwrap_or(u64::MAX);
        (0..total).map(move |mut idx| {
            let mut levels = vec![0u32; n];
            for slot in levels.iter_mut().rev() {
                *slot = (idx % (s as u64 + 1)) as u32;
                idx /= s as u64 + 1;
            }
            let assignment = reps.iter().copied().zip(levels).collect();
            self.make_partition(&assignment, s).expect("assignment is total")
        })
    }
}

/// `{a mod u : a ∈ A}`.
pub fn mod_u_image(a: &CosetSet, u: u64) -> BTreeSet<u64> {
    a.iter().map(|z| z % u).collect()
}

/// `(A_0, …, A_s)`: disjoint `q`-closed blocks covering `Σ_ℓ`. Block `t < s`
/// carries the components at level `θ^t`; `A_s` is the annihilated block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicPartition {
    universe: CosetUniverse,
    blocks: Vec<CosetSet>,
}

impl CyclotomicPartition {
    /// Validates `blocks` as a partition of `Σ_ℓ` into `q`-closed sets.
    pub fn new(universe: CosetUniverse, blocks: Vec<CosetSet>) -> Result<Self> {
        if blocks.len() < 2 {
            return Err(Error::InvalidPartition("need at least two blocks (s ≥ 1)".into()));
        }
        let mut seen = CosetSet::new();
        for (t, b) in blocks.iter().enumerate() {
            universe.set(b.iter().copied())?;
            if !universe.is_closed(b) {
                return Err(Error::InvalidPartition(format!("block {t} is not q-closed")));
            }
            for &z in b {
                if !seen.insert(z) {
                    return Err(Error::InvalidPartition(format!("{z} lies in two blocks")));
                }
            }
        }
        if seen.len() as u64 != universe.ell() {
            return Err(Error::InvalidPartition("blocks do not cover Σ_ℓ".into()));
        }
        Ok(CyclotomicPartition { universe, blocks })
    }

    pub fn universe(&self) -> &CosetUniverse {
        &self.universe
    }

    pub fn s(&self) -> u32 {
        (self.blocks.len() - 1) as u32
    }

    pub fn blocks(&self) -> &[CosetSet] {
        &self.blocks
    }

    pub fn block(&self, t: u32) -> &CosetSet {
        &self.blocks[t as usize]
    }

    /// The level `t` with `z ∈ A_t`.
    pub fn level_of(&self, z: u64) -> u32 {
        self.blocks.iter().position(|b| b.contains(&z)).expect("blocks cover Σ_ℓ") as u32
    }

    /// The serialized form: representative → level.
    pub fn assignment(&self) -> BTreeMap<u64, u32> {
        self.universe
            .representatives()
            .into_iter()
            .map(|z| (z, self.level_of(z)))
            .collect()
    }

    /// `(|A_0|, …, |A_{s-1}|)`.
    pub fn code_type(&self) -> Vec<usize> {
        self.blocks[..self.blocks.len() - 1].iter().map(BTreeSet::len).collect()
    }

    /// `∪_{t<s} A_t`.
    pub fn information_set(&self) -> CosetSet {
        self.blocks[..self.blocks.len() - 1].iter().flatten().copied().collect()
    }

    /// `(−A_s, −A_{s−1}, …, −A_0)`.
    pub fn tilde_dual(&self) -> CyclotomicPartition {
        let blocks = self.blocks.iter().rev().map(|b| self.universe.opposite(b)).collect();
        CyclotomicPartition { universe: self.universe, blocks }
    }

    /// The common residue `ω` of the information blocks modulo `u`, `None`
    /// when they are all empty.
    pub fn information_residue(&self, u: u64) -> Result<Option<u64>> {
        let image = mod_u_image(&self.information_set(), u);
        match image.len() {
            0 => Ok(None),
            1 => Ok(image.first().copied()),
            _ => Err(Error::SingletonViolation(format!(
                "information blocks meet residues {image:?} modulo {u}"
            ))),
        }
    }

    /// `(−A_s^⋆, −A_{s−1}, …, −A_1, −A_0^◁)` with `A_s^⋆ = {a ∈ A_s : a ≡ ω (mod u)}`
    /// and `A_0^◁ = A_0 ∪ (A_s ∖ A_s^⋆)`: the partition of the concatenation of the
    /// dual of the contracted code.
    pub fn star_dual(&self, u: u64, omega: u64) -> Result<CyclotomicPartition> {
        if u == 0 || omega >= u {
            return Err(Error::InvalidSet(format!("ω = {omega} is not a residue modulo {u}")));
        }
        if let Some(w) = self.information_residue(u)? {
            if w != omega {
                return Err(Error::SingletonViolation(format!(
                    "information blocks lie in class {w}, not {omega}, modulo {u}"
                )));
            }
        }
        let s = self.blocks.len() - 1;
        let uni = &self.universe;
        let (star, rest): (CosetSet, CosetSet) = self.blocks[s].iter().partition(|&&z| z % u == omega);
        let mut blocks = Vec::with_capacity(s + 1);
        blocks.push(uni.opposite(&star));
        for t in (1..s).rev() {
            blocks.push(uni.opposite(&self.blocks[t]));
        }
        let mut last = self.blocks[0].clone();
        last.extend(rest);
        blocks.push(uni.opposite(&last));
        Ok(CyclotomicPartition { universe: self.universe, blocks })
    }
}

impl fmt::Display for CyclotomicPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (t, b) in self.blocks.iter().enumerate() {
            if t > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", format_set(b))?;
        }
        write!(f, ")")
    }
}

/// `{a,b,c}` with no spaces.
pub fn format_set(a: &CosetSet) -> String {
    let items: Vec<String> = a.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(","))
}
