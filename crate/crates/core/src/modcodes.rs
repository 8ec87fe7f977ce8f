//! Linear codes over a chain ring.
//!
//! A code is held in reduced echelon form (see [`crate::linalg::echelon`]),
//! computed once at construction. Row `i` has `θ^{t_i}` in its pivot column and
//! zeros in every other pivot column, so membership, enumeration and the type
//! `(k_0, …, k_{s-1})` all read straight off the rows.

use num_bigint::BigUint;

use crate::chainring::{ChainRing, Elem};
use crate::error::{Error, Result};
use crate::galois::GaloisExtension;
use crate::linalg::{self, Echelon, Matrix, Pivot};

/// Enumeration limit used by [`LinearCode::min_weight`] unless overridden.
pub const DEFAULT_WEIGHT_BUDGET: u64 = 1 << 24;

#[derive(Debug, Clone)]
pub struct LinearCode {
    ring: ChainRing,
    length: usize,
    form: Echelon,
}

/// The generator matrix in the block shape `[θ^t I | *]` after moving pivot
/// columns to the front.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    pub rows: Matrix,
    /// `permutation[j]` is the original column placed at position `j`.
    pub permutation: Vec<usize>,
    pub code_type: Vec<usize>,
}

pub fn hamming_weight(v: &[Elem]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// `τ_γ(c_0, …, c_{ℓ−1}) = (γ c_{ℓ−1}, c_0, …, c_{ℓ−2})`.
pub fn constashift(ring: &ChainRing, v: &[Elem], gamma: Elem) -> Vec<Elem> {
    let Some((&last, init)) = v.split_last() else {
        return Vec::new();
    };
    std::iter::once(ring.mul(gamma, last)).chain(init.iter().copied()).collect()
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.length == other.length
            && self.size_exponent() == other.size_exponent()
            && other.form.rows.iter().all(|g| self.contains(g))
    }
}

impl Eq for LinearCode {}

impl LinearCode {
    /// The code spanned by `rows`, each of length `length`.
    pub fn new(ring: &ChainRing, length: usize, rows: &[Vec<Elem>]) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != length) {
            return Err(Error::Mismatch(format!(
                "generator of length {} in a code of length {length}",
                bad.len()
            )));
        }
        let size = ring.size();
        if rows.iter().flatten().any(|e| e.index() >= size) {
            return Err(Error::InvalidElement("generator entry outside the ring".into()));
        }
        Ok(LinearCode { ring: ring.clone(), length, form: linalg::echelon(ring, rows, length) })
    }

    pub fn zero(ring: &ChainRing, length: usize) -> Self {
        LinearCode { ring: ring.clone(), length, form: Echelon { rows: Vec::new(), pivots: Vec::new() } }
    }

    /// `R^ℓ`.
    pub fn full(ring: &ChainRing, length: usize) -> Self {
        let rows: Matrix = (0..length)
            .map(|i| (0..length).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
            .collect();
        LinearCode::new(ring, length, &rows).expect("identity rows are well formed")
    }

    pub fn ring(&self) -> &ChainRing {
        &self.ring
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Reduced generator rows (one per pivot).
    pub fn generators(&self) -> &[Vec<Elem>] {
        &self.form.rows
    }

    pub fn pivots(&self) -> &[Pivot] {
        &self.form.pivots
    }

    pub fn standard_form(&self) -> StandardForm {
        let mut permutation: Vec<usize> = self.form.pivots.iter().map(|p| p.col).collect();
        permutation.extend((0..self.length).filter(|c| !self.form.pivots.iter().any(|p| p.col == *c)));
        let rows = self
            .form
            .rows
            .iter()
            .map(|r| permutation.iter().map(|&c| r[c]).collect())
            .collect();
        StandardForm { rows, permutation, code_type: self.code_type() }
    }

    /// `(k_0, …, k_{s-1})`: the number of pivots at each level.
    pub fn code_type(&self) -> Vec<usize> {
        let mut k = vec![0usize; self.ring.s() as usize];
        for p in &self.form.pivots {
            k[p.level as usize] += 1;
        }
        k
    }

    pub fn rank(&self) -> usize {
        self.form.pivots.len()
    }

    pub fn is_free(&self) -> bool {
        self.form.pivots.iter().all(|p| p.level == 0)
    }

    pub fn is_zero(&self) -> bool {
        self.form.rows.is_empty()
    }

    /// `Σ_t (s − t) k_t`, so that `|C| = q^{size_exponent}`.
    pub fn size_exponent(&self) -> u64 {
        let s = self.ring.s();
        self.form.pivots.iter().map(|p| (s - p.level) as u64).sum()
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(self.ring.q()).pow(self.size_exponent() as u32)
    }

    /// `|C|` when it fits in a `u64`.
    pub fn cardinality_u64(&self) -> Option<u64> {
        self.ring.q().checked_pow(self.size_exponent().try_into().ok()?)
    }

    fn check_compatible(&self, other: &LinearCode) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::Mismatch("codes are over different rings".into()));
        }
        if self.length != other.length {
            return Err(Error::Mismatch(format!("lengths {} and {} differ", self.length, other.length)));
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        if v.len() != self.length {
            return false;
        }
        let mut w = v.to_vec();
        for (row, p) in self.form.rows.iter().zip(&self.form.pivots) {
            let e = w[p.col];
            if e.is_zero() {
                continue;
            }
            if self.ring.valuation(e) < p.level {
                return false;
            }
            linalg::sub_scaled(&self.ring, &mut w, row, self.ring.quo_theta_pow(e, p.level));
        }
        w.iter().all(|x| x.is_zero())
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.ring == other.ring && self.length == other.length && self.form.rows.iter().all(|g| other.contains(g))
    }

    /// `C^⊥ = {x : Σ c_i x_i = 0 for all c ∈ C}`, from a diagonal reduction of the
    /// generator matrix.
    pub fn dual(&self) -> LinearCode {
        let ring = &self.ring;
        let smith = linalg::smith(ring, &self.form.rows, self.length);
        let q = &smith.col_transform;
        let s = ring.s();
        let rank = smith.levels.len();
        let mut rows = Vec::with_capacity(self.length);
        for i in 0..self.length {
            let scale = if i < rank {
                let t = smith.levels[i];
                if t == 0 {
                    continue;
                }
                linalg::theta_pow(ring, s - t)
            } else {
                ring.one()
            };
            rows.push(q.iter().map(|r| ring.mul(r[i], scale)).collect());
        }
        LinearCode::new(ring, self.length, &rows).expect("dual rows have the code length")
    }

    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        let mut rows = self.form.rows.clone();
        rows.extend(other.form.rows.iter().cloned());
        LinearCode::new(&self.ring, self.length, &rows)
    }

    /// `(C_1^⊥ + C_2^⊥)^⊥`.
    pub fn intersect(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_compatible(other)?;
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// Iterates over all `|C|` codewords, each exactly once.
    pub fn codewords(&self) -> Codewords<'_> {
        Codewords::new(self)
    }

    /// Minimum Hamming weight of a nonzero codeword, by enumeration of at most
    /// `budget` codewords.
    pub fn min_weight(&self, budget: u64) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroCode("minimum weight"));
        }
        let size = self.cardinality();
        if size > BigUint::from(budget) {
            return Err(Error::BudgetExceeded { what: "codewords", needed: size.to_string(), limit: budget });
        }
        let mut best = self.length;
        for c in self.codewords() {
            let w = hamming_weight(&c);
            if w > 0 && w < best {
                best = w;
                if best == 1 {
                    break;
                }
            }
        }
        Ok(best)
    }

    /// `τ_γ(C) ⊆ C`, checked on the generators. `γ` must be a unit.
    pub fn is_constacyclic(&self, gamma: Elem) -> Result<bool> {
        if !self.ring.is_unit(gamma) {
            return Err(Error::NotAUnit);
        }
        Ok(self.form.rows.iter().all(|g| self.contains(&constashift(&self.ring, g, gamma))))
    }

    pub fn is_cyclic(&self) -> bool {
        self.is_constacyclic(self.ring.one()).expect("1 is a unit")
    }

    /// `π(C)` over the residue field.
    pub fn residue_code(&self) -> LinearCode {
        let field = self.ring.residue_field();
        let rows: Matrix = self
            .form
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| self.ring.residue(x)).collect())
            .collect();
        LinearCode::new(&field, self.length, &rows).expect("residues lie in the field")
    }

    fn check_over_top(&self, ext: &GaloisExtension) -> Result<()> {
        if &self.ring != ext.top() {
            return Err(Error::Mismatch("code is not over the extension ring".into()));
        }
        Ok(())
    }

    /// The rows `ξ^i b` for every generator `b` and `i < m`: an `R`-spanning set of `B`.
    fn r_spanning_rows(&self, ext: &GaloisExtension) -> Matrix {
        let top = ext.top();
        let xi = ext.teichmuller_generator();
        let mut rows = Vec::new();
        for g in &self.form.rows {
            let mut row = g.clone();
            for _ in 0..ext.degree() {
                rows.push(row.clone());
                row = row.iter().map(|&x| top.mul(x, xi)).collect();
            }
        }
        rows
    }

    /// `Res_R(B) = B ∩ R^ℓ`.
    pub fn res_subring(&self, ext: &GaloisExtension) -> Result<LinearCode> {
        self.check_over_top(ext)?;
        let base = ext.base();
        let m = ext.degree() as usize;
        let n = self.length * m;
        // S^ℓ ≅ R^{mℓ}, coordinate (j, i) at position j*m + i
        let flat: Matrix = self
            .r_spanning_rows(ext)
            .iter()
            .map(|row| row.iter().flat_map(|&x| ext.coordinates(x)).collect())
            .collect();
        let lattice: Matrix = (0..self.length)
            .map(|j| (0..n).map(|c| if c == j * m { base.one() } else { base.zero() }).collect())
            .collect();
        let meet = LinearCode::new(base, n, &flat)?.intersect(&LinearCode::new(base, n, &lattice)?)?;
        let rows: Matrix = meet
            .generators()
            .iter()
            .map(|r| (0..self.length).map(|j| r[j * m]).collect())
            .collect();
        LinearCode::new(base, self.length, &rows)
    }

    /// `Tr(B)`, the componentwise trace of every codeword.
    pub fn trace_code(&self, ext: &GaloisExtension) -> Result<LinearCode> {
        self.check_over_top(ext)?;
        let rows: Matrix = self
            .r_spanning_rows(ext)
            .iter()
            .map(|row| row.iter().map(|&x| ext.trace(x)).collect())
            .collect();
        LinearCode::new(ext.base(), self.length, &rows)
    }

    /// The `S`-code spanned by an `R`-code.
    pub fn extend_code(&self, ext: &GaloisExtension) -> Result<LinearCode> {
        if &self.ring != ext.base() {
            return Err(Error::Mismatch("code is not over the base ring".into()));
        }
        let rows: Matrix = self
            .form
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| ext.embed(x)).collect())
            .collect();
        LinearCode::new(ext.top(), self.length, &rows)
    }

    /// `σ^power(B)`.
    pub fn sigma_image(&self, ext: &GaloisExtension, power: u64) -> Result<LinearCode> {
        self.check_over_top(ext)?;
        let rows: Matrix = self
            .form
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| ext.frobenius(x, power)).collect())
            .collect();
        LinearCode::new(ext.top(), self.length, &rows)
    }

    /// `B̃ = Σ_{i<m} σ^i(B)`, the smallest σ-invariant code containing `B`.
    pub fn closure_code(&self, ext: &GaloisExtension) -> Result<LinearCode> {
        let mut acc = self.clone();
        for i in 1..ext.degree() as u64 {
            acc = acc.sum(&self.sigma_image(ext, i)?)?;
        }
        Ok(acc)
    }

    pub fn is_sigma_invariant(&self, ext: &GaloisExtension) -> Result<bool> {
        Ok(self.sigma_image(ext, 1)?.is_subcode_of(self))
    }
}

/// Odometer over the information digits of a code: row `i` at level `t` is
/// multiplied by every element whose θ-digits vanish from position `s − t` on.
pub struct Codewords<'a> {
    code: &'a LinearCode,
    /// Teichmüller set; coefficient of row `i` is `Σ_j teich[digits[i][j]] θ^j`.
    teich: Vec<Elem>,
    digits: Vec<Vec<usize>>,
    current: Vec<Elem>,
    done: bool,
}

impl<'a> Codewords<'a> {
    fn new(code: &'a LinearCode) -> Self {
        let ring = &code.ring;
        let s = ring.s();
        let digits = code.form.pivots.iter().map(|p| vec![0; (s - p.level) as usize]).collect();
        Codewords {
            code,
            teich: ring.teichmuller_set(),
            digits,
            current: vec![ring.zero(); code.length],
            done: false,
        }
    }

    fn coefficient(&self, i: usize) -> Elem {
        let ring = &self.code.ring;
        let d: Vec<Elem> = self.digits[i].iter().map(|&j| self.teich[j]).collect();
        ring.recompose(&d)
    }
}

impl Iterator for Codewords<'_> {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let ring = self.code.ring.clone();
        let q = self.teich.len();
        // advance the odometer, updating the running codeword by the coefficient change
        let mut advanced = false;
        'rows: for i in 0..self.digits.len() {
            let before = self.coefficient(i);
            for j in 0..self.digits[i].len() {
                self.digits[i][j] += 1;
                if self.digits[i][j] < q {
                    let delta = ring.sub(self.coefficient(i), before);
                    let row = &self.code.form.rows[i];
                    for (c, &x) in self.current.iter_mut().zip(row) {
                        *c = ring.add(*c, ring.mul(delta, x));
                    }
                    advanced = true;
                    break 'rows;
                }
                self.digits[i][j] = 0;
            }
            let row = &self.code.form.rows[i];
            for (c, &x) in self.current.iter_mut().zip(row) {
                *c = ring.sub(*c, ring.mul(before, x));
            }
        }
        if !advanced {
            self.done = true;
        }
        Some(out)
    }
}

/// Rows rendered as `[e,e,…]` lines using the canonical element encoding.
pub fn format_matrix(ring: &ChainRing, rows: &[Vec<Elem>]) -> Vec<String> {
    rows.iter()
        .map(|r| {
            let items: Vec<String> = r.iter().map(|&x| ring.format_elem(x)).collect();
            format!("[{}]", items.join(","))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chainring::ChainRingSpec;
    use std::collections::HashSet;

    fn z9() -> ChainRing {
        ChainRing::new(&ChainRingSpec::galois(3, 1, 2)).unwrap()
    }

    fn code(ring: &ChainRing, rows: &[&[i64]]) -> LinearCode {
        let m: Matrix = rows.iter().map(|r| r.iter().map(|&x| ring.from_int(x)).collect()).collect();
        LinearCode::new(ring, rows[0].len(), &m).unwrap()
    }

    #[test]
    fn types_and_sizes() {
        let r = z9();
        let c = code(&r, &[&[1, 1], &[0, 3]]);
        assert_eq!(c.code_type(), vec![1, 1]);
        assert_eq!(c.cardinality(), BigUint::from(27u32));
        assert_eq!(c.codewords().count(), 27);
        assert_eq!(c.codewords().collect::<HashSet<_>>().len(), 27);
        assert_eq!(code(&r, &[&[3, 3]]).code_type(), vec![0, 1]);
        assert_eq!(LinearCode::full(&r, 4).cardinality(), BigUint::from(6561u32));
        assert_eq!(LinearCode::zero(&r, 3).cardinality(), BigUint::from(1u32));
        assert_eq!(c.min_weight(DEFAULT_WEIGHT_BUDGET).unwrap(), 1);
        assert_eq!(code(&r, &[&[1, 1, 1, 1]]).min_weight(DEFAULT_WEIGHT_BUDGET).unwrap(), 4);
    }

    #[test]
    fn duals() {
        let r = z9();
        let c = code(&r, &[&[1, 1]]);
        assert_eq!(c.dual(), code(&r, &[&[1, 8]]));
        let c = code(&r, &[&[1, 2, 0, 4], &[0, 3, 3, 6]]);
        let d = c.dual();
        assert_eq!(d.code_type(), vec![2, 1]);
        assert_eq!(d.dual(), c);
        assert!(LinearCode::full(&r, 3).dual().is_zero());
    }

    #[test]
    fn intersections() {
        let r = z9();
        let a = code(&r, &[&[1, 0]]);
        let b = code(&r, &[&[1, 1]]);
        assert!(a.intersect(&b).unwrap().is_zero());
        let c = code(&r, &[&[3, 0], &[0, 1]]);
        assert_eq!(a.intersect(&c).unwrap(), code(&r, &[&[3, 0]]));
    }

    #[test]
    fn shifts() {
        let r = z9();
        let v: Vec<Elem> = [1, 2, 3].iter().map(|&x| r.from_int(x)).collect();
        let w: Vec<Elem> = [6, 1, 2].iter().map(|&x| r.from_int(x)).collect();
        assert_eq!(constashift(&r, &v, r.from_int(-1)), w);
        assert_eq!(code(&r, &[&[3, 3]]).residue_code().rank(), 0);
        assert!(code(&r, &[&[1, 1, 1]]).is_cyclic());
        assert!(!code(&r, &[&[1, 0, 0]]).is_cyclic());
        assert_eq!(code(&r, &[&[1, 0]]).is_constacyclic(r.from_int(3)), Err(Error::NotAUnit));
    }
}
