//! Finite chain rings of invariants `(q, s)`.
//!
//! Two concrete families are provided:
//!
//! * Galois rings `GR(p^s, r) = Z_{p^s}[x]/(h(x))` with `θ = p`, where `h` is a monic
//!   basic irreducible polynomial of degree `r`;
//! * truncated power series rings `F_{p^r}[u]/(u^s)` with `θ = u`.
//!
//! Both are stored in one representation: an element is an array of
//! `blocks × r` coefficients in `Z_{pe}`, where `pe = p^s, blocks = 1` for Galois
//! rings and `pe = p, blocks = s` for power series rings. Block `k` holds the
//! coefficient of `u^k`, each block is a polynomial in `x` reduced modulo the
//! ring modulus. The mixed-radix integer formed by those coefficients (lowest
//! first) is the element's canonical index, so an [`Elem`] is a plain `u64`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::{inv_mod, is_prime, p_valuation, prime_factors};
use crate::error::{Error, Result};
use crate::poly;

/// Upper bound on the number of base coordinates of an element.
pub const MAX_COORDS: usize = 32;

type Coords = [u64; MAX_COORDS];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "GR", alias = "GALOIS_RING")]
    GaloisRing,
    #[serde(rename = "EU", alias = "EU_POWER_SERIES")]
    PowerSeries,
}

/// Parameters of a chain ring. `q = p^r` is the residue field size and `s` the
/// nilpotency index of `θ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRingSpec {
    pub family: Family,
    pub p: u64,
    pub r: u32,
    pub s: u32,
    /// Monic modulus of degree `r`, low degree first. Coefficients live in
    /// `Z_{p^s}` for Galois rings and in `F_p` for power series rings. Derived
    /// canonically when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

impl ChainRingSpec {
    pub fn galois(p: u64, r: u32, s: u32) -> Self {
        ChainRingSpec { family: Family::GaloisRing, p, r, s, modulus: None }
    }

    pub fn power_series(p: u64, r: u32, s: u32) -> Self {
        ChainRingSpec { family: Family::PowerSeries, p, r, s, modulus: None }
    }

    pub fn with_modulus(mut self, modulus: Vec<u64>) -> Self {
        self.modulus = Some(modulus);
        self
    }
}

/// An element of some [`ChainRing`], identified by its canonical index.
///
/// Elements do not carry their ring; all arithmetic goes through the ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Elem(pub(crate) u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);

    pub fn index(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug)]
struct Inner {
    family: Family,
    p: u64,
    r: usize,
    s: u32,
    pe: u64,
    blocks: usize,
    modulus: Vec<u64>,
    radix: Vec<u64>,
    size: u64,
    q: u64,
    unit_count: u64,
    unit_count_factors: Vec<u64>,
    theta: Elem,
    one: Elem,
    /// Whether `modulus` differs from the canonical choice.
    custom_modulus: bool,
}

/// A finite chain ring. Cheap to clone; all values are immutable.
#[derive(Clone)]
pub struct ChainRing {
    inner: Arc<Inner>,
}

impl fmt::Debug for ChainRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ChainRing({:?}, p={}, r={}, s={}, modulus={:?})",
            self.inner.family, self.inner.p, self.inner.r, self.inner.s, self.inner.modulus
        )
    }
}

impl PartialEq for ChainRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.family == other.inner.family
                && self.inner.p == other.inner.p
                && self.inner.r == other.inner.r
                && self.inner.s == other.inner.s
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for ChainRing {}

impl ChainRing {
    /// Builds the ring described by `spec`, deriving the canonical modulus
    /// when none is given.
    pub fn new(spec: &ChainRingSpec) -> Result<Self> {
        let ChainRingSpec { family, p, r, s, .. } = *spec;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if r == 0 {
            return Err(Error::InvalidSpec("residue degree r must be at least 1".into()));
        }
        if s == 0 {
            return Err(Error::InvalidSpec("nilpotency index s must be at least 1".into()));
        }
        let pe = coefficient_modulus(family, p, s)?;
        let modulus = match &spec.modulus {
            Some(m) => {
                if m.len() != r as usize + 1 || m.last() != Some(&1) {
                    return Err(Error::InvalidSpec(format!(
                        "modulus must be monic of degree {r} (got {m:?})"
                    )));
                }
                if m.iter().any(|&c| c >= pe) {
                    return Err(Error::InvalidSpec(format!(
                        "modulus coefficients must lie in [0, {pe})"
                    )));
                }
                if !poly::is_irreducible(m, p) {
                    return Err(Error::ReducibleModulus(m.clone()));
                }
                m.clone()
            }
            None => canonical_modulus(family, p, r, s)?,
        };
        let mut ring = Self::from_parts(family, p, r, s, modulus)?;
        if spec.modulus.is_some() && ring.inner.modulus != canonical_modulus(family, p, r, s)? {
            Arc::get_mut(&mut ring.inner).expect("fresh ring").custom_modulus = true;
        }
        Ok(ring)
    }

    /// Builds a ring from an already validated modulus.
    pub(crate) fn from_parts(family: Family, p: u64, r: u32, s: u32, modulus: Vec<u64>) -> Result<Self> {
        let pe = coefficient_modulus(family, p, s)?;
        let r = r as usize;
        let blocks = match family {
            Family::GaloisRing => 1,
            Family::PowerSeries => s as usize,
        };
        let ncoords = r * blocks;
        if ncoords > MAX_COORDS {
            return Err(Error::TooLarge(ncoords, pe));
        }
        let mut radix = Vec::with_capacity(ncoords + 1);
        let mut acc = 1u64;
        radix.push(1);
        for _ in 0..ncoords {
            acc = acc
                .checked_mul(pe)
                .filter(|&v| v < (1u64 << 62))
                .ok_or(Error::TooLarge(ncoords, pe))?;
            radix.push(acc);
        }
        let size = acc;
        let q = p.pow(r as u32);
        let unit_count = q.pow(s - 1) * (q - 1);
        let mut unit_count_factors = prime_factors(q - 1);
        if s > 1 && !unit_count_factors.contains(&p) {
            unit_count_factors.push(p);
            unit_count_factors.sort_unstable();
        }
        let theta = if s == 1 {
            Elem(0)
        } else {
            match family {
                Family::GaloisRing => Elem(p),
                Family::PowerSeries => Elem(radix[r]),
            }
        };
        Ok(ChainRing {
            inner: Arc::new(Inner {
                family,
                p,
                r,
                s,
                pe,
                blocks,
                modulus,
                radix,
                size,
                q,
                unit_count,
                unit_count_factors,
                theta,
                one: Elem(1),
                custom_modulus: false,
            }),
        })
    }

    /// The specification that rebuilds this ring; the modulus is listed only
    /// when it is not the canonical one.
    pub fn spec(&self) -> ChainRingSpec {
        ChainRingSpec {
            family: self.inner.family,
            p: self.inner.p,
            r: self.inner.r as u32,
            s: self.inner.s,
            modulus: self.inner.custom_modulus.then(|| self.inner.modulus.clone()),
        }
    }

    pub fn family(&self) -> Family {
        self.inner.family
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    /// Degree of the residue field over F_p.
    pub fn residue_degree(&self) -> u32 {
        self.inner.r as u32
    }

    pub fn s(&self) -> u32 {
        self.inner.s
    }

    /// Size of the residue field.
    pub fn q(&self) -> u64 {
        self.inner.q
    }

    /// `|R| = q^s`.
    pub fn size(&self) -> u64 {
        self.inner.size
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        self.inner.one
    }

    /// Generator of the maximal ideal (`p` or `u`); zero when `s = 1`.
    pub fn theta(&self) -> Elem {
        self.inner.theta
    }

    /// All elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.inner.size).map(Elem)
    }

    /// Number of integer coordinates in the internal representation.
    pub(crate) fn ncoords(&self) -> usize {
        self.inner.r * self.inner.blocks
    }

    /// Modulus of the coordinate ring `Z_{pe}`.
    pub(crate) fn coeff_modulus(&self) -> u64 {
        self.inner.pe
    }

    fn decode(&self, a: Elem) -> Coords {
        let mut c = [0u64; MAX_COORDS];
        let pe = self.inner.pe;
        let mut v = a.0;
        for slot in c.iter_mut().take(self.ncoords()) {
            *slot = v % pe;
            v /= pe;
        }
        c
    }

    fn encode(&self, c: &Coords) -> Elem {
        let mut v = 0u64;
        for i in (0..self.ncoords()).rev() {
            v = v * self.inner.pe + c[i];
        }
        Elem(v)
    }

    /// Internal coordinates of `a` (blocks of `r` coefficients in `Z_{pe}`).
    pub fn coords(&self, a: Elem) -> Vec<u64> {
        self.decode(a)[..self.ncoords()].to_vec()
    }

    pub fn from_coords(&self, coords: &[u64]) -> Result<Elem> {
        if coords.len() != self.ncoords() || coords.iter().any(|&c| c >= self.inner.pe) {
            return Err(Error::InvalidElement(format!("bad coordinates {coords:?}")));
        }
        let mut c = [0u64; MAX_COORDS];
        c[..coords.len()].copy_from_slice(coords);
        Ok(self.encode(&c))
    }

    pub fn element(&self, index: u64) -> Result<Elem> {
        if index >= self.inner.size {
            return Err(Error::InvalidElement(format!("index {index} out of range")));
        }
        Ok(Elem(index))
    }

    fn encoding_shape(&self) -> (usize, u64) {
        match self.inner.family {
            Family::GaloisRing => (self.inner.r, self.inner.pe),
            Family::PowerSeries => (self.inner.blocks, self.inner.q),
        }
    }

    /// External encoding: `r` integers in `[0, p^s)` for Galois rings, `s`
    /// integers in `[0, p^r)` (residue field elements, base-`p` packed) for
    /// power series rings; low degree first.
    pub fn encode_elem(&self, a: Elem) -> Vec<u64> {
        let (len, radix) = self.encoding_shape();
        let mut v = a.0;
        (0..len)
            .map(|_| {
                let d = v % radix;
                v /= radix;
                d
            })
            .collect()
    }

    pub fn decode_elem(&self, digits: &[u64]) -> Result<Elem> {
        let (len, radix) = self.encoding_shape();
        if digits.len() != len {
            return Err(Error::InvalidElement(format!(
                "expected {len} coefficients, got {digits:?}"
            )));
        }
        if let Some(d) = digits.iter().find(|&&d| d >= radix) {
            return Err(Error::InvalidElement(format!("coefficient {d} is not below {radix}")));
        }
        Ok(Elem(digits.iter().rev().fold(0u64, |acc, &d| acc * radix + d)))
    }

    pub fn format_elem(&self, a: Elem) -> String {
        let parts: Vec<String> = self.encode_elem(a).iter().map(u64::to_string).collect();
        format!("[{}]", parts.join(","))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let (x, y) = (self.decode(a), self.decode(b));
        let pe = self.inner.pe;
        let mut z = [0u64; MAX_COORDS];
        for i in 0..self.ncoords() {
            z[i] = (x[i] + y[i]) % pe;
        }
        self.encode(&z)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        let x = self.decode(a);
        let pe = self.inner.pe;
        let mut z = [0u64; MAX_COORDS];
        for i in 0..self.ncoords() {
            z[i] = (pe - x[i]) % pe;
        }
        self.encode(&z)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// Multiplication by an integer (the action of `Z_{pe}` on coordinates).
    pub fn scale(&self, a: Elem, c: u64) -> Elem {
        let x = self.decode(a);
        let pe = self.inner.pe;
        let c = c % pe;
        let mut z = [0u64; MAX_COORDS];
        for i in 0..self.ncoords() {
            z[i] = x[i] * c % pe;
        }
        self.encode(&z)
    }

    /// Image of an integer in the ring.
    pub fn from_int(&self, n: i64) -> Elem {
        let pe = self.inner.pe as i64;
        Elem(n.rem_euclid(pe) as u64)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let x = self.decode(a);
        let y = self.decode(b);
        let r = self.inner.r;
        let pe = self.inner.pe;
        let h = &self.inner.modulus;
        let blocks = self.inner.blocks;
        let mut out = [0u64; MAX_COORDS];
        let mut tmp = [0u64; 2 * MAX_COORDS];
        for k1 in 0..blocks {
            let xa = &x[k1 * r..k1 * r + r];
            if xa.iter().all(|&c| c == 0) {
                continue;
            }
            for k2 in 0..blocks - k1 {
                let yb = &y[k2 * r..k2 * r + r];
                if yb.iter().all(|&c| c == 0) {
                    continue;
                }
                tmp[..2 * r].fill(0);
                for (i, &xi) in xa.iter().enumerate() {
                    if xi == 0 {
                        continue;
                    }
                    for (j, &yj) in yb.iter().enumerate() {
                        tmp[i + j] = (tmp[i + j] + xi * yj) % pe;
                    }
                }
                for d in (r..2 * r - 1).rev() {
                    let c = tmp[d];
                    if c == 0 {
                        continue;
                    }
                    for j in 0..r {
                        let t = c * h[j] % pe;
                        tmp[d - r + j] = (tmp[d - r + j] + pe - t) % pe;
                    }
                    tmp[d] = 0;
                }
                let base = (k1 + k2) * r;
                for i in 0..r {
                    out[base + i] = (out[base + i] + tmp[i]) % pe;
                }
            }
        }
        self.encode(&out)
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut acc = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    /// θ-adic valuation: largest `t` with `a ∈ Rθ^t`; `s` for zero.
    pub fn valuation(&self, a: Elem) -> u32 {
        let s = self.inner.s;
        if a.is_zero() {
            return s;
        }
        let x = self.decode(a);
        match self.inner.family {
            Family::GaloisRing => x[..self.ncoords()]
                .iter()
                .map(|&c| p_valuation(c, self.inner.p, s))
                .min()
                .unwrap_or(s),
            Family::PowerSeries => {
                let r = self.inner.r;
                (0..self.inner.blocks)
                    .find(|&k| x[k * r..k * r + r].iter().any(|&c| c != 0))
                    .map_or(s, |k| k as u32)
            }
        }
    }

    pub fn is_unit(&self, a: Elem) -> bool {
        self.valuation(a) == 0
    }

    /// `|R^×| = q^(s-1) (q-1)`.
    pub fn unit_group_order(&self) -> u64 {
        self.inner.unit_count
    }

    pub fn inverse(&self, a: Elem) -> Result<Elem> {
        if !self.is_unit(a) {
            return Err(Error::NotAUnit);
        }
        Ok(self.pow(a, self.inner.unit_count - 1))
    }

    /// Multiplicative order of a unit.
    pub fn mult_order(&self, a: Elem) -> Result<u64> {
        if !self.is_unit(a) {
            return Err(Error::NotAUnit);
        }
        let mut order = self.inner.unit_count;
        for &t in &self.inner.unit_count_factors {
            while order.is_multiple_of(t) && self.pow(a, order / t) == self.one() {
                order /= t;
            }
        }
        Ok(order)
    }

    /// Some `b` with `θ^k b = a` (no canonical choice). Requires `valuation(a) >= k`.
    pub(crate) fn quo_theta_pow(&self, a: Elem, k: u32) -> Elem {
        debug_assert!(self.valuation(a) >= k);
        if k == 0 {
            return a;
        }
        let x = self.decode(a);
        let mut z = [0u64; MAX_COORDS];
        match self.inner.family {
            Family::GaloisRing => {
                let d = self.inner.p.pow(k);
                for i in 0..self.ncoords() {
                    z[i] = x[i] / d;
                }
            }
            Family::PowerSeries => {
                let r = self.inner.r;
                let shift = k as usize * r;
                let n = self.ncoords();
                if shift < n {
                    z[..n - shift].copy_from_slice(&x[shift..n]);
                }
            }
        }
        self.encode(&z)
    }

    /// Some `c` with `b c = a`, if one exists.
    pub fn divide(&self, a: Elem, b: Elem) -> Option<Elem> {
        if a.is_zero() {
            return Some(Elem(0));
        }
        let vb = self.valuation(b);
        if vb == self.inner.s || self.valuation(a) < vb {
            return None;
        }
        let unit = self.quo_theta_pow(b, vb);
        let inv = self.inverse(unit).expect("shifted element is a unit");
        Some(self.mul(self.quo_theta_pow(a, vb), inv))
    }

    /// Teichmüller representative of `a`: the limit of `a, a^q, a^(q^2), ...`.
    pub fn teichmuller(&self, a: Elem) -> Elem {
        let mut x = a;
        for _ in 0..=self.inner.s + 1 {
            let y = self.pow(x, self.inner.q);
            if y == x {
                return x;
            }
            x = y;
        }
        unreachable!("Teichmüller iteration stabilises within s steps")
    }

    /// The `q` solutions of `b^q = b`, sorted by index.
    pub fn teichmuller_set(&self) -> Vec<Elem> {
        let residue = self.residue_field();
        let mut out: Vec<Elem> = residue
            .elements()
            .map(|f| self.teichmuller(self.lift_residue(f)))
            .collect();
        out.sort_unstable();
        out
    }

    /// The unique Teichmüller digits `(a_0, ..., a_{s-1})` with `a = Σ a_t θ^t`.
    pub fn theta_adic_expansion(&self, a: Elem) -> Vec<Elem> {
        let s = self.inner.s;
        let mut digits = Vec::with_capacity(s as usize);
        let mut rest = a;
        let mut theta_t = self.one();
        for t in 0..s {
            let shifted = self.quo_theta_pow(rest, t);
            let d = self.teichmuller(shifted);
            digits.push(d);
            rest = self.sub(rest, self.mul(d, theta_t));
            theta_t = self.mul(theta_t, self.theta());
        }
        debug_assert!(rest.is_zero());
        digits
    }

    /// `Σ d_t θ^t`.
    pub fn recompose(&self, digits: &[Elem]) -> Elem {
        digits.iter().rev().fold(self.zero(), |acc, &d| self.add(self.mul(acc, self.theta()), d))
    }

    /// `a / θ^k` choosing the preimage whose top `k` θ-digits are zero.
    pub fn div_theta_pow(&self, a: Elem, k: u32) -> Result<Elem> {
        if self.valuation(a) < k {
            return Err(Error::InvalidElement(format!("{} is not divisible by θ^{k}", self.format_elem(a))));
        }
        let digits = self.theta_adic_expansion(a);
        Ok(self.recompose(&digits[k.min(self.inner.s) as usize..]))
    }

    /// The residue field `F_q` as a chain ring with `s = 1`.
    pub fn residue_field(&self) -> ChainRing {
        if self.inner.s == 1 {
            return self.clone();
        }
        let p = self.inner.p;
        let m: Vec<u64> = self.inner.modulus.iter().map(|c| c % p).collect();
        ChainRing::from_parts(self.inner.family, p, self.inner.r as u32, 1, m)
            .expect("residue field is smaller than the ring")
    }

    /// The canonical projection `π : R → F_q`.
    pub fn residue(&self, a: Elem) -> Elem {
        let x = self.decode(a);
        let p = self.inner.p;
        let mut v = 0u64;
        for i in (0..self.inner.r).rev() {
            v = v * p + x[i] % p;
        }
        Elem(v)
    }

    /// The element of `R` whose coordinates are those of the residue `f`.
    pub fn lift_residue(&self, f: Elem) -> Elem {
        let p = self.inner.p;
        let mut c = [0u64; MAX_COORDS];
        let mut v = f.0;
        for slot in c.iter_mut().take(self.inner.r) {
            *slot = v % p;
            v /= p;
        }
        self.encode(&c)
    }

    /// The class of `x` in `Z_{pe}[x]/(h)`; used to build moduli and embeddings.
    pub(crate) fn x(&self) -> Elem {
        if self.inner.r == 1 {
            let pe = self.inner.pe;
            Elem((pe - self.inner.modulus[0]) % pe)
        } else {
            Elem(self.inner.radix[1])
        }
    }

    /// `θ^k` times the `i`-th monomial `x^i`: the `Z_{pe}`-basis element at
    /// coordinate `k * r + i`.
    pub(crate) fn basis_elem(&self, coord: usize) -> Elem {
        Elem(self.inner.radix[coord])
    }
}

fn coefficient_modulus(family: Family, p: u64, s: u32) -> Result<u64> {
    match family {
        Family::GaloisRing => p
            .checked_pow(s)
            .filter(|&v| v < (1u64 << 31))
            .ok_or(Error::TooLarge(1, p)),
        Family::PowerSeries => Ok(p),
    }
}

/// Smallest monic irreducible of degree `r` over F_p; for Galois rings its
/// unique lift to `Z_{p^s}` dividing `x^(p^r) - x` (the lift whose roots are
/// Teichmüller elements).
fn canonical_modulus(family: Family, p: u64, r: u32, s: u32) -> Result<Vec<u64>> {
    let hbar = poly::smallest_irreducible(p, r);
    if family == Family::PowerSeries || s == 1 || r == 1 {
        return Ok(hbar);
    }
    let naive = ChainRing::from_parts(family, p, r, s, hbar)?;
    let root = naive.teichmuller(naive.x());
    // ∏_{i<r} (y - root^(p^i)), coefficients in `naive`, low degree first
    let mut coeffs = vec![naive.one()];
    let mut conj = root;
    for _ in 0..r {
        let mut next = vec![naive.zero(); coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] = naive.add(next[i + 1], c);
            next[i] = naive.sub(next[i], naive.mul(c, conj));
        }
        coeffs = next;
        conj = naive.pow(conj, p);
    }
    coeffs
        .into_iter()
        .map(|c| {
            let cs = naive.coords(c);
            if cs[1..].iter().any(|&v| v != 0) {
                Err(Error::InvalidSpec("Teichmüller lift produced a non-constant coefficient".into()))
            } else {
                Ok(cs[0])
            }
        })
        .collect()
}

/// Modular inverse in `Z_{pe}`, used by coordinate linear algebra.
pub(crate) fn zmod_inverse(a: u64, pe: u64) -> Option<u64> {
    inv_mod(a % pe, pe)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z9() -> ChainRing {
        ChainRing::new(&ChainRingSpec::galois(3, 1, 2)).unwrap()
    }

    fn eu9() -> ChainRing {
        ChainRing::new(&ChainRingSpec::power_series(3, 1, 2)).unwrap()
    }

    fn z4() -> ChainRing {
        ChainRing::new(&ChainRingSpec::galois(2, 1, 2)).unwrap()
    }

    fn int(r: &ChainRing, n: i64) -> Elem {
        r.from_int(n)
    }

    #[test]
    fn sizes() {
        assert_eq!(z9().size(), 9);
        assert_eq!(z9().q(), 3);
        assert_eq!(eu9().size(), 9);
        let gr = ChainRing::new(&ChainRingSpec::galois(2, 2, 3)).unwrap();
        assert_eq!((gr.q(), gr.s(), gr.size()), (4, 3, 64));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(ChainRing::new(&ChainRingSpec::galois(4, 1, 2)).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            ChainRing::new(&ChainRingSpec::galois(3, 0, 2)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            ChainRing::new(&ChainRingSpec::galois(3, 2, 1).with_modulus(vec![2, 0, 1])),
            Err(Error::ReducibleModulus(_))
        ));
        assert!(ChainRing::new(&ChainRingSpec::galois(3, 2, 2).with_modulus(vec![1, 0, 1])).is_ok());
    }

    #[test]
    fn residue_projection() {
        let r = z9();
        let f = r.residue_field();
        assert_eq!(r.residue(r.one()), f.one());
        assert_eq!(r.residue(r.theta()), f.zero());
        // exhaustive: π(a) = a mod 3 on Z_9
        for a in r.elements() {
            assert_eq!(r.residue(a).index(), a.index() % 3);
        }
        assert_eq!(r.residue(int(&r, 5)).index(), 2);
    }

    #[test]
    fn teichmuller_sets() {
        let idx = |v: Vec<Elem>| v.into_iter().map(Elem::index).collect::<Vec<_>>();
        assert_eq!(idx(z9().teichmuller_set()), vec![0, 1, 8]);
        assert_eq!(idx(eu9().teichmuller_set()), vec![0, 1, 2]);
        assert_eq!(idx(z4().teichmuller_set()), vec![0, 1]);
        // exhaustive b^q = b check agrees
        for r in [z9(), eu9(), z4()] {
            let brute: Vec<Elem> = r.elements().filter(|&b| r.pow(b, r.q()) == b).collect();
            assert_eq!(brute, r.teichmuller_set());
        }
    }

    #[test]
    fn expansions_in_z9() {
        let r = z9();
        let idx = |v: Vec<Elem>| v.into_iter().map(Elem::index).collect::<Vec<_>>();
        assert_eq!(idx(r.theta_adic_expansion(r.zero())), vec![0, 0]);
        assert_eq!(idx(r.theta_adic_expansion(int(&r, 2))), vec![8, 1]);
        assert_eq!(idx(r.theta_adic_expansion(int(&r, 5))), vec![8, 8]);
        assert_eq!(r.div_theta_pow(int(&r, 6), 1).unwrap().index(), 8);
        assert!(r.div_theta_pow(int(&r, 5), 1).is_err());
    }

    #[test]
    fn unit_counts() {
        for (r, expected) in [(z9(), 6), (z4(), 2), (eu9(), 6)] {
            assert_eq!(r.unit_group_order(), expected);
            let brute = r
                .elements()
                .filter(|&a| r.elements().any(|b| r.mul(a, b) == r.one()))
                .count() as u64;
            assert_eq!(brute, expected);
        }
    }

    #[test]
    fn canonical_galois_modulus_is_teichmuller_lift() {
        // GR(9, 2): x^2 + 1 over F_3 lifts to itself (its roots have order 4 already).
        let r = ChainRing::new(&ChainRingSpec::galois(3, 2, 2)).unwrap();
        assert_eq!(r.modulus(), &[1, 0, 1]);
        assert_eq!(r.teichmuller(r.x()), r.x());
        // GR(4, 2): x^2 + x + 1 is already a divisor of x^4 - x over Z_4.
        let r = ChainRing::new(&ChainRingSpec::galois(2, 2, 2)).unwrap();
        assert_eq!(r.modulus(), &[1, 1, 1]);
        // GR(8, 3): x becomes a Teichmüller element of order 7.
        let r = ChainRing::new(&ChainRingSpec::galois(2, 3, 3)).unwrap();
        assert_eq!(r.teichmuller(r.x()), r.x());
        assert_eq!(r.pow(r.x(), 7), r.one());
        assert_eq!(r.modulus().iter().map(|c| c % 2).collect::<Vec<_>>(), vec![1, 0, 1, 1]);
    }

    #[test]
    fn encodings_round_trip() {
        let r = ChainRing::new(&ChainRingSpec::power_series(3, 2, 2)).unwrap();
        for a in r.elements() {
            let enc = r.encode_elem(a);
            assert_eq!(enc.len(), 2);
            assert!(enc.iter().all(|&d| d < 9));
            assert_eq!(r.decode_elem(&enc).unwrap(), a);
        }
        let g = ChainRing::new(&ChainRingSpec::galois(3, 2, 2)).unwrap();
        assert_eq!(g.encode_elem(g.x()), vec![0, 1]);
        assert!(g.decode_elem(&[9, 0]).is_err());
        assert!(g.decode_elem(&[1]).is_err());
    }

    #[test]
    fn divide_inverts_multiplication() {
        let r = ChainRing::new(&ChainRingSpec::galois(2, 2, 3)).unwrap();
        for a in r.elements() {
            for b in r.elements() {
                match r.divide(a, b) {
                    Some(c) => assert_eq!(r.mul(b, c), a),
                    None => assert!(r.elements().all(|c| r.mul(b, c) != a)),
                }
            }
        }
    }
}
