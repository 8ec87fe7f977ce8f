//! Matrix reductions over a chain ring.
//!
//! Every nonzero entry is `θ^t · unit`, so elimination always pivots on an
//! entry of minimum valuation: such a pivot divides everything left in the
//! active submatrix.

use crate::chainring::{ChainRing, Elem};
use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<Elem>>;

/// Position and θ-level of a pivot of an echelon form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pivot {
    pub col: usize,
    pub level: u32,
}

/// Row echelon form with pivots of nondecreasing level. Row `i` has the entry
/// `θ^level` at `pivots[i].col`, zeros in the pivot columns of every other row,
/// and every entry divisible by `θ^level`.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rows: Matrix,
    pub pivots: Vec<Pivot>,
}

pub fn dot(ring: &ChainRing, a: &[Elem], b: &[Elem]) -> Elem {
    a.iter()
        .zip(b)
        .fold(ring.zero(), |acc, (&x, &y)| ring.add(acc, ring.mul(x, y)))
}

/// `target -= c * src`.
pub fn sub_scaled(ring: &ChainRing, target: &mut [Elem], src: &[Elem], c: Elem) {
    if c.is_zero() {
        return;
    }
    for (t, &x) in target.iter_mut().zip(src) {
        if !x.is_zero() {
            *t = ring.sub(*t, ring.mul(c, x));
        }
    }
}

pub fn scale_vec(ring: &ChainRing, v: &[Elem], c: Elem) -> Vec<Elem> {
    v.iter().map(|&x| ring.mul(c, x)).collect()
}

pub fn theta_pow(ring: &ChainRing, t: u32) -> Elem {
    ring.pow(ring.theta(), t as u64)
}

/// Smallest-valuation entry among `rows[row_from..]` and the allowed columns;
/// ties go to the leftmost column, then the topmost row.
fn min_valuation_entry(
    ring: &ChainRing,
    rows: &[Vec<Elem>],
    row_from: usize,
    cols: impl Iterator<Item = usize>,
) -> Option<(usize, usize, u32)> {
    let mut best: Option<(usize, usize, u32)> = None;
    for col in cols {
        for (i, row) in rows.iter().enumerate().skip(row_from) {
            if row[col].is_zero() {
                continue;
            }
            let v = ring.valuation(row[col]);
            if best.is_none_or(|(_, _, bv)| v < bv) {
                best = Some((i, col, v));
                if v == 0 {
                    return best;
                }
            }
        }
    }
    best
}

/// Reduces `rows` (each of length `ncols`) to echelon form by valuation-greedy
/// elimination. Zero rows are dropped.
pub fn echelon(ring: &ChainRing, rows: &[Vec<Elem>], ncols: usize) -> Echelon {
    let mut a: Matrix = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut used = vec![false; ncols];
    let mut pivots = Vec::new();
    let mut top = 0;
    while top < a.len() {
        let free_cols = (0..ncols).filter(|&c| !used[c]);
        let Some((row, col, level)) = min_valuation_entry(ring, &a, top, free_cols) else {
            break;
        };
        a.swap(top, row);
        let unit = ring.quo_theta_pow(a[top][col], level);
        let inv = ring.inverse(unit).expect("valuation-shifted entry is a unit");
        for x in a[top].iter_mut() {
            *x = ring.mul(*x, inv);
        }
        let (head, tail) = a.split_at_mut(top);
        let (pivot_row, below) = tail.split_first_mut().unwrap();
        for r in below.iter_mut() {
            let e = r[col];
            if !e.is_zero() {
                sub_scaled(ring, r, pivot_row, ring.quo_theta_pow(e, level));
            }
        }
        for r in head.iter_mut() {
            let e = r[col];
            if e.is_zero() {
                continue;
            }
            // keep only the θ-digits below `level`
            let c = if level == 0 {
                e
            } else {
                let digits = ring.theta_adic_expansion(e);
                ring.recompose(&digits[level as usize..])
            };
            sub_scaled(ring, r, pivot_row, c);
        }
        used[col] = true;
        pivots.push(Pivot { col, level });
        top += 1;
    }
    a.truncate(top);
    Echelon { rows: a, pivots }
}

/// Diagonal reduction `P · A · Q = diag(θ^{t_0}, …, θ^{t_{k-1}}, 0, …)` with
/// invertible `P` (`rows × rows`) and `Q` (`ncols × ncols`). Only `Q` is kept.
#[derive(Debug, Clone)]
pub struct Smith {
    /// θ-levels of the nonzero diagonal entries, nondecreasing.
    pub levels: Vec<u32>,
    /// The column transform `Q`, stored row-major.
    pub col_transform: Matrix,
}

pub fn smith(ring: &ChainRing, rows: &[Vec<Elem>], ncols: usize) -> Smith {
    let mut a: Matrix = rows.to_vec();
    let mut q: Matrix = (0..ncols)
        .map(|i| (0..ncols).map(|j| if i == j { ring.one() } else { ring.zero() }).collect())
        .collect();
    let mut levels = Vec::new();
    let mut i = 0;
    while i < a.len() && i < ncols {
        let Some((row, col, level)) = min_valuation_entry(ring, &a, i, i..ncols) else {
            break;
        };
        a.swap(i, row);
        if col != i {
            for r in a.iter_mut() {
                r.swap(i, col);
            }
            for r in q.iter_mut() {
                r.swap(i, col);
            }
        }
        let unit = ring.quo_theta_pow(a[i][i], level);
        let inv = ring.inverse(unit).expect("valuation-shifted entry is a unit");
        let (head, tail) = a.split_at_mut(i + 1);
        let pivot_row = &head[i];
        for r in tail.iter_mut() {
            let e = r[i];
            if !e.is_zero() {
                let c = ring.mul(ring.quo_theta_pow(e, level), inv);
                sub_scaled(ring, r, pivot_row, c);
            }
        }
        for j in i + 1..ncols {
            let e = a[i][j];
            if e.is_zero() {
                continue;
            }
            let c = ring.mul(ring.quo_theta_pow(e, level), inv);
            // column j -= c * column i; only row i of `a` is nonzero in column i
            a[i][j] = ring.zero();
            for r in q.iter_mut() {
                let qi = r[i];
                if !qi.is_zero() {
                    r[j] = ring.sub(r[j], ring.mul(c, qi));
                }
            }
        }
        levels.push(level);
        i += 1;
    }
    Smith { levels, col_transform: q }
}

/// Inverse of a square matrix over the ring.
pub fn invert(ring: &ChainRing, m: &[Vec<Elem>]) -> Result<Matrix> {
    let n = m.len();
    let mut a: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { ring.one() } else { ring.zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let row = (col..n).find(|&r| ring.is_unit(a[r][col])).ok_or(Error::Singular)?;
        a.swap(col, row);
        let inv = ring.inverse(a[col][col])?;
        for x in a[col].iter_mut() {
            *x = ring.mul(*x, inv);
        }
        let pivot_row = a[col].clone();
        for (r, other) in a.iter_mut().enumerate() {
            if r != col {
                let c = other[col];
                sub_scaled(ring, other, &pivot_row, c);
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(ring: &ChainRing, a: &[Vec<Elem>], b: &[Vec<Elem>]) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(ring.zero(), |acc, (&x, brow)| ring.add(acc, ring.mul(x, brow[j])))
                })
                .collect()
        })
        .collect()
}
