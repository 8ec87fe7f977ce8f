//! Unramified Galois extensions `S|R` of degree `m`.
//!
//! `S` lives in the same family as `R` with residue degree `r·m`. Both rings
//! are free over the coordinate ring `Z_pe`, and the embedding, Frobenius and
//! trace are all `Z_pe`-linear, so each is stored as its values on the
//! coordinate basis.

use std::sync::Arc;

use crate::arith::{gcd, prime_factors};
use crate::chainring::{zmod_inverse, ChainRing, Elem, Family};
use crate::error::{Error, Result};
use crate::linalg;

#[derive(Debug)]
struct Inner {
    base: ChainRing,
    top: ChainRing,
    degree: u32,
    /// `embed(basis_c)` for each coordinate `c` of the base.
    embed_images: Vec<Elem>,
    /// Left inverse (`r × rm`, over `Z_pe`) of the per-block embedding matrix.
    left_inverse: Vec<Vec<u64>>,
    /// Per-block embedding matrix (`rm × r`).
    embed_matrix: Vec<Vec<u64>>,
    /// `frob[j][c] = σ^j(basis_c)` for `j < m`.
    frob: Vec<Vec<Elem>>,
    /// `Tr(basis_c)` as base elements.
    trace_images: Vec<Elem>,
    xi: Elem,
    /// Trace-dual basis to `1, ξ, …, ξ^{m-1}`.
    dual_basis: Vec<Elem>,
}

/// `S|R` with Frobenius `σ`, trace, and Teichmüller generator `ξ`.
#[derive(Debug, Clone)]
pub struct GaloisExtension {
    inner: Arc<Inner>,
}

impl PartialEq for GaloisExtension {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.base == other.inner.base && self.inner.degree == other.inner.degree)
    }
}

impl Eq for GaloisExtension {}

/// Polynomial with integer coefficients evaluated in `ring`.
fn eval_int_poly(ring: &ChainRing, coeffs: &[u64], x: Elem) -> Elem {
    coeffs
        .iter()
        .rev()
        .fold(ring.zero(), |acc, &c| ring.add(ring.mul(acc, x), ring.from_int(c as i64)))
}

fn primitive_in_field(field: &ChainRing) -> Elem {
    let order = field.q() - 1;
    let factors = prime_factors(order);
    field
        .elements()
        .skip(1)
        .find(|&a| factors.iter().all(|&t| field.pow(a, order / t) != field.one()))
        .expect("a finite field has a primitive element")
}

/// Left inverse of an `n × k` matrix over `Z_pe` (`pe` a prime power) whose
/// reduction mod p has full column rank.
fn zmod_left_inverse(m: &[Vec<u64>], pe: u64, p: u64) -> Option<Vec<Vec<u64>>> {
    let n = m.len();
    let k = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u64::from(i == j)));
            r
        })
        .collect();
    for col in 0..k {
        let row = (col..n).find(|&r| !a[r][col].is_multiple_of(p))?;
        a.swap(col, row);
        let inv = zmod_inverse(a[col][col], pe)?;
        for x in a[col].iter_mut() {
            *x = *x * inv % pe;
        }
        let pivot = a[col].clone();
        for (r, other) in a.iter_mut().enumerate() {
            let c = other[col];
            if r != col && c != 0 {
                for (x, &y) in other.iter_mut().zip(&pivot) {
                    *x = (*x + pe - c * y % pe) % pe;
                }
            }
        }
    }
    Some(a.into_iter().take(k).map(|r| r[k..].to_vec()).collect())
}

impl GaloisExtension {
    /// The extension of degree `m`; `m = 1` gives `S = R` with the identity embedding.
    pub fn new(base: &ChainRing, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidSpec("extension degree must be at least 1".into()));
        }
        let r = base.residue_degree() as usize;
        let s = base.s();
        let top = if m == 1 {
            base.clone()
        } else {
            let spec = crate::chainring::ChainRingSpec {
                family: base.family(),
                p: base.p(),
                r: base.residue_degree() * m,
                s,
                modulus: None,
            };
            ChainRing::new(&spec)?
        };
        let pe = base.coeff_modulus();
        let rm = r * m as usize;
        let blocks = base.ncoords() / r;

        // image of x: the smallest root of the base modulus, lifted
        let rho = if m == 1 {
            top.x()
        } else {
            let field = top.residue_field();
            let hbar: Vec<u64> = base.modulus().iter().map(|c| c % base.p()).collect();
            let root = field
                .elements()
                .find(|&a| eval_int_poly(&field, &hbar, a).is_zero())
                .expect("F_q embeds in F_{q^m}");
            let mut rho = top.lift_residue(root);
            if base.family() == Family::GaloisRing {
                let h = base.modulus();
                let dh: Vec<u64> = h.iter().enumerate().skip(1).map(|(i, &c)| c * i as u64 % pe).collect();
                for _ in 0..s {
                    let num = eval_int_poly(&top, h, rho);
                    let den = top.inverse(eval_int_poly(&top, &dh, rho))?;
                    rho = top.sub(rho, top.mul(num, den));
                }
            }
            rho
        };

        let mut powers = Vec::with_capacity(r);
        let mut acc = top.one();
        for _ in 0..r {
            powers.push(acc);
            acc = top.mul(acc, rho);
        }
        // column i holds the coordinates of rho^i
        let embed_matrix: Vec<Vec<u64>> = (0..rm)
            .map(|row| powers.iter().map(|&e| top.coords(e)[row]).collect())
            .collect();
        let left_inverse = zmod_left_inverse(&embed_matrix, pe, base.p())
            .ok_or_else(|| Error::InvalidSpec("embedding is not injective".into()))?;
        let mut embed_images = Vec::with_capacity(base.ncoords());
        for k in 0..blocks {
            for i in 0..r {
                let mut c = vec![0u64; top.ncoords()];
                for (row, entries) in embed_matrix.iter().enumerate() {
                    c[k * rm + row] = entries[i];
                }
                embed_images.push(top.from_coords(&c)?);
            }
        }

        let ncoords = top.ncoords();
        let basis: Vec<Elem> = (0..ncoords).map(|c| top.basis_elem(c)).collect();
        let sigma1: Vec<Elem> = basis.iter().map(|&b| frobenius_by_digits(&top, base.q(), b)).collect();
        let mut frob = vec![basis.clone()];
        for j in 1..m as usize {
            let prev = &frob[j - 1];
            let next = prev.iter().map(|&e| apply_linear(&top, &sigma1, top.coords(e))).collect();
            frob.push(next);
        }

        let mut ext = GaloisExtension {
            inner: Arc::new(Inner {
                base: base.clone(),
                top: top.clone(),
                degree: m,
                embed_images,
                left_inverse,
                embed_matrix,
                frob,
                trace_images: Vec::new(),
                xi: Elem::ZERO,
                dual_basis: Vec::new(),
            }),
        };

        let trace_images = (0..ncoords)
            .map(|c| {
                let full = ext.inner.frob.iter().fold(top.zero(), |acc, f| top.add(acc, f[c]));
                ext.restrict(full)
                    .ok_or_else(|| Error::InvalidSpec("trace left the base ring".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let xi = top.teichmuller(top.lift_residue(primitive_in_field(&top.residue_field())));
        {
            let inner = Arc::get_mut(&mut ext.inner).expect("unshared during construction");
            inner.trace_images = trace_images;
            inner.xi = xi;
        }

        let mu = m as usize;
        let xi_pows: Vec<Elem> = (0..2 * mu).map(|i| top.pow(xi, i as u64)).collect();
        let gram: Vec<Vec<Elem>> = (0..mu)
            .map(|i| (0..mu).map(|j| ext.trace(xi_pows[i + j])).collect())
            .collect();
        let gram_inv = linalg::invert(base, &gram)?;
        let dual_basis = (0..mu)
            .map(|i| {
                (0..mu).fold(top.zero(), |acc, k| {
                    top.add(acc, top.mul(ext.embed(gram_inv[i][k]), xi_pows[k]))
                })
            })
            .collect();
        Arc::get_mut(&mut ext.inner).expect("unshared during construction").dual_basis = dual_basis;
        Ok(ext)
    }

    pub fn base(&self) -> &ChainRing {
        &self.inner.base
    }

    pub fn top(&self) -> &ChainRing {
        &self.inner.top
    }

    pub fn degree(&self) -> u32 {
        self.inner.degree
    }

    /// `q^m`, the residue field size of `S`.
    pub fn residue_size(&self) -> u64 {
        self.inner.top.q()
    }

    /// ξ: the Teichmüller lift of the smallest primitive element of `F_{q^m}`.
    pub fn teichmuller_generator(&self) -> Elem {
        self.inner.xi
    }

    pub fn embed(&self, a: Elem) -> Elem {
        apply_linear(&self.inner.top, &self.inner.embed_images, self.inner.base.coords(a))
    }

    /// The preimage of `b` under the embedding, if `b` lies in `R`.
    pub fn restrict(&self, b: Elem) -> Option<Elem> {
        let base = &self.inner.base;
        let pe = base.coeff_modulus();
        let r = base.residue_degree() as usize;
        let rm = r * self.inner.degree as usize;
        let coords = self.inner.top.coords(b);
        let mut out = Vec::with_capacity(base.ncoords());
        for block in coords.chunks(rm) {
            let x: Vec<u64> = self
                .inner
                .left_inverse
                .iter()
                .map(|row| row.iter().zip(block).fold(0, |acc, (&l, &v)| (acc + l * v) % pe))
                .collect();
            for (row, &want) in self.inner.embed_matrix.iter().zip(block) {
                let got = row.iter().zip(&x).fold(0, |acc, (&e, &v)| (acc + e * v) % pe);
                if got != want {
                    return None;
                }
            }
            out.extend(x);
        }
        base.from_coords(&out).ok()
    }

    /// `σ^power(a)` with σ the Frobenius generator.
    pub fn frobenius(&self, a: Elem, power: u64) -> Elem {
        let j = (power % self.inner.degree as u64) as usize;
        if j == 0 {
            return a;
        }
        apply_linear(&self.inner.top, &self.inner.frob[j], self.inner.top.coords(a))
    }

    /// `σ(a)` computed from the θ-adic expansion of `a` by raising each digit
    /// to the `q`-th power. Agrees with [`Self::frobenius`].
    pub fn frobenius_by_digits(&self, a: Elem) -> Elem {
        frobenius_by_digits(&self.inner.top, self.inner.base.q(), a)
    }

    /// `Tr(a) = Σ_{i<m} σ^i(a)`, as an element of `R`.
    pub fn trace(&self, a: Elem) -> Elem {
        apply_linear(&self.inner.base, &self.inner.trace_images, self.inner.top.coords(a))
    }

    /// `Σ_{i < m/d} σ^{d i}(a)`: the trace from `S` down to its degree-`d` subextension.
    pub fn partial_trace(&self, a: Elem, d: u32) -> Result<Elem> {
        self.check_divisor(d)?;
        let top = &self.inner.top;
        Ok((0..self.inner.degree / d)
            .fold(top.zero(), |acc, i| top.add(acc, self.frobenius(a, (i * d) as u64))))
    }

    /// η = ξ^{(q^m−1)/ℓ}, of multiplicative order exactly ℓ.
    pub fn root_of_unity(&self, ell: u64) -> Result<Elem> {
        let big = self.residue_size() - 1;
        if ell == 0 || !big.is_multiple_of(ell) {
            return Err(Error::NoRootOfUnity(ell, big));
        }
        Ok(self.inner.top.pow(self.inner.xi, big / ell))
    }

    fn check_divisor(&self, d: u32) -> Result<()> {
        if d == 0 || !self.inner.degree.is_multiple_of(d) {
            return Err(Error::InvalidSpec(format!(
                "{d} does not divide the extension degree {}",
                self.inner.degree
            )));
        }
        Ok(())
    }

    /// Generator `ξ^{(q^m−1)/(q^d−1)}` of the Teichmüller group of the
    /// degree-`d` subextension.
    pub fn subextension_generator(&self, d: u32) -> Result<Elem> {
        self.check_divisor(d)?;
        let q = self.inner.base.q();
        let big = self.residue_size() - 1;
        Ok(self.inner.top.pow(self.inner.xi, big / (q.pow(d) - 1)))
    }

    /// Whether `a` lies in the degree-`d` subextension (the fixed ring of σ^d).
    pub fn in_subextension(&self, a: Elem, d: u32) -> bool {
        self.check_divisor(d).is_ok() && self.frobenius(a, d as u64) == a
    }

    /// Coordinates of `a` over `R` in the basis `1, ξ, …, ξ^{m-1}`.
    pub fn coordinates(&self, a: Elem) -> Vec<Elem> {
        let top = &self.inner.top;
        self.inner.dual_basis.iter().map(|&d| self.trace(top.mul(a, d))).collect()
    }

    pub fn from_coordinates(&self, coords: &[Elem]) -> Elem {
        let top = &self.inner.top;
        let mut acc = top.zero();
        let mut pow = top.one();
        for &c in coords {
            acc = top.add(acc, top.mul(self.embed(c), pow));
            pow = top.mul(pow, self.inner.xi);
        }
        acc
    }

    /// Whether `ell` admits a primitive root of unity in `S` (`ℓ | q^m − 1`).
    pub fn supports_length(&self, ell: u64) -> bool {
        ell > 0 && gcd(ell, self.inner.base.q()) == 1 && (self.residue_size() - 1).is_multiple_of(ell)
    }
}

fn apply_linear(ring: &ChainRing, images: &[Elem], coords: impl IntoIterator<Item = u64>) -> Elem {
    images
        .iter()
        .zip(coords)
        .filter(|&(_, c)| c != 0)
        .fold(ring.zero(), |acc, (&img, c)| ring.add(acc, ring.scale(img, c)))
}

fn frobenius_by_digits(ring: &ChainRing, q: u64, a: Elem) -> Elem {
    let digits: Vec<Elem> = ring.theta_adic_expansion(a).into_iter().map(|d| ring.pow(d, q)).collect();
    ring.recompose(&digits)
}
