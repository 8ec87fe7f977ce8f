//! Evaluation codes at the powers of a primitive `ℓ`-th root of unity `η` and
//! the bijection between cyclic codes of length `ℓ` and cyclotomic partitions.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::chainring::{ChainRing, Elem};
use crate::cosets::{CosetSet, CosetUniverse, CyclotomicPartition};
use crate::error::{Error, Result};
use crate::galois::GaloisExtension;
use crate::linalg::{self, Matrix};
use crate::modcodes::LinearCode;

/// The extension `S|R` of degree `m = ord_ℓ(q)` and `η = ξ^{(q^m−1)/ℓ}`.
#[derive(Debug, Clone)]
pub struct EvalBasis {
    ext: GaloisExtension,
    universe: CosetUniverse,
    eta: Elem,
}

impl EvalBasis {
    pub fn new(ring: &ChainRing, ell: u64) -> Result<Self> {
        let universe = CosetUniverse::new(ell, ring.q())?;
        let ext = GaloisExtension::new(ring, universe.order() as u32)?;
        let eta = ext.root_of_unity(ell)?;
        Ok(EvalBasis { ext, universe, eta })
    }

    pub fn extension(&self) -> &GaloisExtension {
        &self.ext
    }

    pub fn ring(&self) -> &ChainRing {
        self.ext.base()
    }

    pub fn universe(&self) -> &CosetUniverse {
        &self.universe
    }

    pub fn ell(&self) -> usize {
        self.universe.ell() as usize
    }

    pub fn eta(&self) -> Elem {
        self.eta
    }

    /// `ev_η(X^a) = (1, η^a, …, η^{a(ℓ−1)})`.
    pub fn evaluation_row(&self, a: u64) -> Vec<Elem> {
        let top = self.ext.top();
        let step = top.pow(self.eta, a);
        let mut x = top.one();
        (0..self.ell())
            .map(|_| {
                let out = x;
                x = top.mul(x, step);
                out
            })
            .collect()
    }

    /// `L_η(S; A)`, spanned by `ev_η(X^a)` for `a ∈ A`.
    pub fn lrs_code(&self, a: &CosetSet) -> Result<LinearCode> {
        self.universe.set(a.iter().copied())?;
        let rows: Matrix = a.iter().map(|&z| self.evaluation_row(z)).collect();
        LinearCode::new(self.ext.top(), self.ell(), &rows)
    }

    /// `ψ_z(a) = Tr(a · ev_η(X^z))` for `a` in the degree-`m_z` subextension,
    /// `m_z = |∁_q(z)|`.
    pub fn psi(&self, z: u64, a: Elem) -> Result<Vec<Elem>> {
        let mz = self.universe.coset(z % self.universe.ell()).len() as u32;
        if !self.ext.in_subextension(a, mz) {
            return Err(Error::NotInSubextension(mz as usize));
        }
        let top = self.ext.top();
        Ok(self
            .evaluation_row(z)
            .into_iter()
            .map(|x| self.ext.trace(top.mul(a, x)))
            .collect())
    }

    /// `R`-basis `1, g, …, g^{m_z−1}` of the degree-`m_z` subextension, `g` its
    /// Teichmüller generator.
    pub fn subextension_basis(&self, z: u64) -> Vec<Elem> {
        let mz = self.universe.coset(z).len() as u32;
        let top = self.ext.top();
        let g = self.ext.subextension_generator(mz).expect("coset sizes divide m");
        let mut x = top.one();
        (0..mz)
            .map(|_| {
                let out = x;
                x = top.mul(x, g);
                out
            })
            .collect()
    }

    /// Reduced generators of `C_η(R; {z}) = Tr(ev_η(S·X^z))`, a free code of
    /// rank `m_z`. Traces are taken over an `R`-basis of all of `S`: on the
    /// subextension alone the trace picks up the factor `m/m_z`, which is not a
    /// unit when `p | m/m_z`.
    pub fn component_rows(&self, z: u64) -> Matrix {
        let top = self.ext.top();
        let xi = self.ext.teichmuller_generator();
        let ev = self.evaluation_row(z);
        let mut b = top.one();
        let rows: Matrix = (0..self.ext.degree())
            .map(|_| {
                let row = ev.iter().map(|&x| self.ext.trace(top.mul(b, x))).collect();
                b = top.mul(b, xi);
                row
            })
            .collect();
        let code = LinearCode::new(self.ring(), self.ell(), &rows).expect("rows have length ℓ");
        debug_assert!(code.is_free());
        code.generators().to_vec()
    }

    /// `C_η(R; A) = Tr(L_η(S; A))`.
    pub fn trace_eval_code(&self, a: &CosetSet) -> Result<LinearCode> {
        let closed = self.universe.closure(&self.universe.set(a.iter().copied())?);
        let mut rows = Vec::new();
        for c in self.universe.cosets() {
            let z = *c.first().unwrap();
            if closed.contains(&z) {
                rows.extend(self.component_rows(z));
            }
        }
        LinearCode::new(self.ring(), self.ell(), &rows)
    }

    fn check_partition(&self, p: &CyclotomicPartition) -> Result<()> {
        if p.universe() != &self.universe {
            return Err(Error::InvalidPartition(format!(
                "partition is modulo {} with q = {}, expected {} and {}",
                p.universe().ell(),
                p.universe().q(),
                self.universe.ell(),
                self.universe.q()
            )));
        }
        if p.s() != self.ring().s() {
            return Err(Error::InvalidPartition(format!(
                "partition has {} blocks, the ring needs {}",
                p.s() + 1,
                self.ring().s() + 1
            )));
        }
        Ok(())
    }

    /// `C_R(A) = ⊕_{t<s} θ^t C_η(R; A_t)`.
    pub fn code_from_partition(&self, p: &CyclotomicPartition) -> Result<LinearCode> {
        self.check_partition(p)?;
        let ring = self.ring();
        let mut rows = Vec::new();
        for c in self.universe.cosets() {
            let z = *c.first().unwrap();
            let t = p.level_of(z);
            if t < ring.s() {
                let th = linalg::theta_pow(ring, t);
                rows.extend(self.component_rows(z).iter().map(|r| linalg::scale_vec(ring, r, th)));
            }
        }
        LinearCode::new(ring, self.ell(), &rows)
    }

    /// Level `t_z` of each coset in a cyclic code: the least `t` with
    /// `θ^t g_z ∈ C`, `g_z` the first reduced generator of `C_η(R; {z})`, or
    /// `s` when there is none. Keyed by representative.
    fn levels(&self, code: &LinearCode) -> Result<BTreeMap<u64, u32>> {
        let ring = self.ring();
        if code.ring() != ring || code.length() != self.ell() {
            return Err(Error::Mismatch("code does not match the evaluation basis".into()));
        }
        if !code.is_cyclic() {
            return Err(Error::NotCyclic);
        }
        let mut levels = BTreeMap::new();
        for z in self.universe.representatives() {
            let gen = self.component_rows(z).swap_remove(0);
            let t = (0..ring.s())
                .find(|&t| code.contains(&linalg::scale_vec(ring, &gen, linalg::theta_pow(ring, t))))
                .unwrap_or(ring.s());
            levels.insert(z, t);
        }
        Ok(levels)
    }

    /// The unique partition `P` with `code_from_partition(P) = C`.
    pub fn decompose_cyclic(&self, code: &LinearCode) -> Result<CyclotomicPartition> {
        let levels = self.levels(code)?;
        self.universe.make_partition(&levels, self.ring().s())
    }

    /// The irreducible components `θ^{t_z} C_η(R; {z})` with `t_z < s`, as
    /// `(t_z, z)` ordered by representative.
    pub fn irreducible_components(&self, code: &LinearCode) -> Result<Vec<(u32, u64)>> {
        let s = self.ring().s();
        Ok(self
            .levels(code)?
            .into_iter()
            .filter(|&(_, t)| t < s)
            .map(|(z, t)| (t, z))
            .collect())
    }
}

/// `((s+1)^N, 2^N)` with `N = |Σ_ℓ(q)|`: the numbers of cyclic and of free
/// cyclic codes of length `ℓ`.
pub fn count_cyclic_codes(ring: &ChainRing, ell: u64) -> Result<(BigUint, BigUint)> {
    let n = CosetUniverse::new(ell, ring.q())?.count_classes() as u32;
    Ok((BigUint::from(ring.s() + 1).pow(n), BigUint::from(2u32).pow(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::ChainRingSpec;
    use crate::modcodes::constashift;

    fn z9() -> ChainRing {
        ChainRing::new(&ChainRingSpec::galois(3, 1, 2)).unwrap()
    }

    fn set(xs: &[u64]) -> CosetSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn lrs_basics() {
        let b = EvalBasis::new(&z9(), 4).unwrap();
        let top = b.extension().top().clone();
        assert_eq!(b.eta(), top.pow(b.extension().teichmuller_generator(), 2));
        assert!(b.lrs_code(&set(&[])).unwrap().is_zero());
        assert_eq!(b.lrs_code(&set(&[0])).unwrap().generators(), &[vec![top.one(); 4]]);
        assert_eq!(b.lrs_code(&b.universe().full()).unwrap(), LinearCode::full(&top, 4));
        assert_eq!(b.lrs_code(&set(&[1])).unwrap().rank(), 1);
    }

    #[test]
    fn trace_codes_at_four() {
        let r = z9();
        let b = EvalBasis::new(&r, 4).unwrap();
        let c = b.trace_eval_code(&set(&[1])).unwrap();
        assert_eq!(c.rank(), 2);
        assert!(c.is_free() && c.is_cyclic());
        assert_eq!(c, b.trace_eval_code(&set(&[1, 3])).unwrap());
        assert_eq!(b.trace_eval_code(&set(&[0])).unwrap(), {
            let one = vec![r.one(); 4];
            LinearCode::new(&r, 4, &[one]).unwrap()
        });
    }

    #[test]
    fn psi_is_injective_and_intertwines() {
        let r = z9();
        let b = EvalBasis::new(&r, 4).unwrap();
        let ext = b.extension();
        let top = ext.top();
        let sub: Vec<Elem> = top.elements().filter(|&a| ext.in_subextension(a, 2)).collect();
        assert_eq!(sub.len(), 81);
        let images: std::collections::HashSet<Vec<Elem>> = sub.iter().map(|&a| b.psi(1, a).unwrap()).collect();
        assert_eq!(images.len(), 81);
        let zeta = top.inverse(b.eta()).unwrap();
        for &a in sub.iter().step_by(7) {
            let lhs = b.psi(1, top.mul(zeta, a)).unwrap();
            assert_eq!(lhs, constashift(&r, &b.psi(1, a).unwrap(), r.one()));
        }
        assert!(b.psi(0, ext.teichmuller_generator()).is_err());
    }

    #[test]
    fn partition_round_trip() {
        let r = z9();
        let b = EvalBasis::new(&r, 4).unwrap();
        for p in b.universe().all_partitions(2) {
            let c = b.code_from_partition(&p).unwrap();
            assert_eq!(c.code_type(), p.code_type());
            assert_eq!(b.decompose_cyclic(&c).unwrap(), p);
        }
        let theta_full = LinearCode::new(
            &r,
            4,
            &(0..4).map(|i| (0..4).map(|j| if i == j { r.theta() } else { r.zero() }).collect()).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(b.irreducible_components(&theta_full).unwrap(), vec![(1, 0), (1, 1), (1, 2)]);
        let (total, free) = count_cyclic_codes(&r, 4).unwrap();
        assert_eq!((total, free), (BigUint::from(27u32), BigUint::from(8u32)));
    }
}
