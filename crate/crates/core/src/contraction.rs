//! Contraction of cyclic codes of length `uℓ` to `γ`-constacyclic codes of
//! length `ℓ`, through `℘(c) = (γ^{u−1}c | γ^{u−2}c | … | γc | c)`.

use crate::arith::gcd;
use crate::chainring::{ChainRing, Elem};
use crate::cosets::CyclotomicPartition;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::modcodes::LinearCode;
use crate::tracecodes::EvalBasis;

/// Ring, block length `ℓ`, number of blocks `u`, and the unit `γ` with `γ^u = 1`.
#[derive(Debug, Clone)]
pub struct ContractionContext {
    ring: ChainRing,
    ell: usize,
    u: usize,
    gamma: Elem,
    gamma_order: u64,
}

impl ContractionContext {
    pub fn new(ring: &ChainRing, ell: usize, u: usize, gamma: Elem) -> Result<Self> {
        if ell == 0 || u == 0 {
            return Err(Error::InvalidSpec("ℓ and u must be positive".into()));
        }
        let total = (u * ell) as u64;
        if gcd(total, ring.q()) != 1 {
            return Err(Error::NotCoprime(total, ring.q()));
        }
        let gamma_order = ring.mult_order(gamma)?;
        if !(u as u64).is_multiple_of(gamma_order) {
            return Err(Error::InvalidSpec(format!(
                "γ = {} has order {gamma_order}, which does not divide u = {u}",
                ring.format_elem(gamma)
            )));
        }
        Ok(ContractionContext { ring: ring.clone(), ell, u, gamma, gamma_order })
    }

    pub fn ring(&self) -> &ChainRing {
        &self.ring
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn gamma(&self) -> Elem {
        self.gamma
    }

    /// Multiplicative order of `γ`; a proper divisor of `u` is allowed but flagged.
    pub fn gamma_order(&self) -> u64 {
        self.gamma_order
    }

    pub fn has_exact_order(&self) -> bool {
        self.gamma_order == self.u as u64
    }

    /// The same context with `γ^{-1}`.
    pub fn inverse(&self) -> ContractionContext {
        ContractionContext { gamma: self.ring.inverse(self.gamma).expect("γ is a unit"), ..self.clone() }
    }

    /// `℘(v)`.
    pub fn concatenate(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.ell {
            return Err(Error::Mismatch(format!("vector of length {} for ℓ = {}", v.len(), self.ell)));
        }
        let mut blocks = Vec::with_capacity(self.u);
        let mut g = self.ring.one();
        for _ in 0..self.u {
            blocks.push(linalg::scale_vec(&self.ring, v, g));
            g = self.ring.mul(g, self.gamma);
        }
        Ok(blocks.into_iter().rev().flatten().collect())
    }

    /// `℘(K)`; `K` must be `γ`-constacyclic.
    pub fn concatenation_code(&self, k: &LinearCode) -> Result<LinearCode> {
        if k.ring() != &self.ring || k.length() != self.ell {
            return Err(Error::Mismatch("code does not match the contraction context".into()));
        }
        if !k.is_constacyclic(self.gamma)? {
            return Err(Error::NotConstacyclic);
        }
        let rows = k.generators().iter().map(|g| self.concatenate(g)).collect::<Result<Matrix>>()?;
        LinearCode::new(&self.ring, self.ell * self.u, &rows)
    }

    /// `℘^{-1}(C)`: the last block of each generator, after checking that the
    /// generator is the concatenation of it.
    pub fn preimage(&self, c: &LinearCode) -> Result<LinearCode> {
        if c.ring() != &self.ring || c.length() != self.ell * self.u {
            return Err(Error::Mismatch("code does not match the contraction context".into()));
        }
        let start = (self.u - 1) * self.ell;
        let mut tails = Vec::with_capacity(c.rank());
        for g in c.generators() {
            let tail = g[start..].to_vec();
            if self.concatenate(&tail)? != *g {
                return Err(Error::SingletonViolation(
                    "a generator is not the concatenation of its last block".into(),
                ));
            }
            tails.push(tail);
        }
        LinearCode::new(&self.ring, self.ell, &tails)
    }
}

/// Output of [`contract_code`].
#[derive(Debug, Clone)]
pub struct Contraction {
    pub code: LinearCode,
    pub context: ContractionContext,
    /// The common residue modulo `u` of the information blocks.
    pub omega: u64,
    /// The partition of the cyclic code that was contracted.
    pub partition: CyclotomicPartition,
    basis: EvalBasis,
}

impl Contraction {
    pub fn gamma(&self) -> Elem {
        self.context.gamma
    }

    pub fn basis(&self) -> &EvalBasis {
        &self.basis
    }
}

/// `γ = β^{−ω}` with `β = ξ^{(q^m−1)/u}`, as an element of `R`.
pub fn derive_gamma(basis: &EvalBasis, u: u64, omega: u64) -> Result<Elem> {
    let ext = basis.extension();
    let top = ext.top();
    let beta = ext.root_of_unity(u)?;
    let gamma = top.inverse(top.pow(beta, omega % u))?;
    ext.restrict(gamma).ok_or(Error::NotInBaseRing)
}

/// Contracts a cyclic code of length `uℓ` whose information blocks all lie in
/// one residue class `ω` modulo `u`.
pub fn contract_code(c: &LinearCode, u: usize) -> Result<Contraction> {
    let n = c.length();
    if u == 0 || !n.is_multiple_of(u) {
        return Err(Error::Mismatch(format!("length {n} is not a multiple of u = {u}")));
    }
    let basis = EvalBasis::new(c.ring(), n as u64)?;
    contract_with_basis(c, u, basis)
}

fn contract_with_basis(c: &LinearCode, u: usize, basis: EvalBasis) -> Result<Contraction> {
    let partition = basis.decompose_cyclic(c)?;
    let omega = partition
        .information_residue(u as u64)?
        .ok_or(Error::ZeroCode("contraction needs a residue class ω; the zero code has none"))?;
    let gamma = derive_gamma(&basis, u as u64, omega)?;
    let context = ContractionContext::new(c.ring(), c.length() / u, u, gamma)?;
    let code = context.preimage(c)?;
    debug_assert_eq!(code.size_exponent(), c.size_exponent());
    Ok(Contraction { code, context, omega, partition, basis })
}

/// `K^⊥ = ℘'^{-1}(C_R(P^⋆))`, where `℘'` concatenates with `γ^{-1}` and `P^⋆`
/// is the star dual of the contracted partition.
pub fn contract_dual(k: &Contraction) -> Result<LinearCode> {
    let star = k.partition.star_dual(k.context.u as u64, k.omega)?;
    let c = k.basis.code_from_partition(&star)?;
    k.context.inverse().preimage(&c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::ChainRingSpec;
    use crate::cosets::CosetUniverse;

    fn z9() -> ChainRing {
        ChainRing::new(&ChainRingSpec::galois(3, 1, 2)).unwrap()
    }

    fn ints(r: &ChainRing, xs: &[i64]) -> Vec<Elem> {
        xs.iter().map(|&x| r.from_int(x)).collect()
    }

    #[test]
    fn concatenation() {
        let r = z9();
        let ctx = ContractionContext::new(&r, 2, 2, r.from_int(8)).unwrap();
        assert_eq!(ctx.concatenate(&ints(&r, &[1, 2])).unwrap(), ints(&r, &[8, 7, 1, 2]));
        let id = ContractionContext::new(&r, 2, 1, r.one()).unwrap();
        assert_eq!(id.concatenate(&ints(&r, &[1, 2])).unwrap(), ints(&r, &[1, 2]));
        assert!(ContractionContext::new(&r, 2, 2, r.from_int(2)).is_err());
    }

    #[test]
    fn negacyclic_ten() {
        let r = z9();
        let basis = EvalBasis::new(&r, 20).unwrap();
        let uni = basis.universe();
        let a0 = uni.coset(1);
        let a1 = uni.coset(5);
        let rest = uni.complement(&a0.union(&a1).copied().collect());
        let p = CyclotomicPartition::new(*uni, vec![a0, a1, rest]).unwrap();
        let c = basis.code_from_partition(&p).unwrap();
        let k = contract_code(&c, 2).unwrap();
        assert_eq!(k.gamma(), r.from_int(-1));
        assert_eq!(k.omega, 1);
        assert_eq!(k.code.code_type(), vec![4, 2]);
        assert_eq!(k.code.size_exponent(), 10);
        assert!(k.code.is_constacyclic(r.from_int(-1)).unwrap());
        assert_eq!(k.code.dual(), k.code);
        assert_eq!(contract_dual(&k).unwrap(), k.code);
        assert_eq!(k.context.concatenation_code(&k.code).unwrap(), c);
    }

    #[test]
    fn mixed_residues_are_rejected() {
        let r = z9();
        let basis = EvalBasis::new(&r, 20).unwrap();
        let uni = basis.universe();
        let lam = uni
            .representatives()
            .into_iter()
            .map(|z| (z, if z == 1 || z == 2 { 0 } else { 2 }))
            .collect();
        let c = basis.code_from_partition(&uni.make_partition(&lam, 2).unwrap()).unwrap();
        assert!(matches!(contract_code(&c, 2), Err(Error::SingletonViolation(_))));
    }

    #[test]
    fn order_three_star_dual() {
        // u = 3 separates ω from −ω
        let f7 = ChainRing::new(&ChainRingSpec::power_series(7, 1, 2)).unwrap();
        let basis = EvalBasis::new(&f7, 6).unwrap();
        let uni: CosetUniverse = *basis.universe();
        for p in uni.all_partitions(2) {
            let Ok(Some(omega)) = p.information_residue(3) else { continue };
            let c = basis.code_from_partition(&p).unwrap();
            let k = contract_code(&c, 3).unwrap();
            assert_eq!(k.omega, omega);
            assert!(k.code.is_constacyclic(k.gamma()).unwrap());
            assert_eq!(contract_dual(&k).unwrap(), k.code.dual(), "{p}");
        }
    }
}
