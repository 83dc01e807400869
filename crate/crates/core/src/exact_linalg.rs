//! Exact symmetric matrices over the rationals and their inertia.
//!
//! Inertia is computed by symmetric Gaussian congruence `S A S^T`, which by
//! Sylvester's law leaves the number of negative, zero and positive
//! eigenvalues unchanged. Pivots are taken from the diagonal when possible;
//! when every remaining diagonal entry is zero a 2x2 block `[[0, a], [a, d]]`
//! with `a != 0` is eliminated instead (determinant `-a^2 < 0`, one eigenvalue
//! of each sign).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// Dense square matrix of rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(n: usize) -> Self {
        ExactMatrix {
            n,
            entries: vec![Rational::zero(); n * n],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { n, entries }
    }

    /// From integer rows; panics if the rows are not square.
    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == n),
            "rows must form a square matrix"
        );
        ExactMatrix::from_fn(n, |i, j| integer(rows[i][j]))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v;
    }

    /// `self - c I`.
    pub fn shifted(&self, c: &Rational) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            let v = m.get(i, i) - c;
            m.set(i, i, v);
        }
        m
    }

    /// First asymmetric position, if any.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Inertia {
    pub negatives: usize,
    pub zeros: usize,
    pub positives: usize,
}

impl Inertia {
    pub fn order(&self) -> usize {
        self.negatives + self.zeros + self.positives
    }
}

impl fmt::Display for Inertia {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.negatives, self.zeros, self.positives
        )
    }
}

/// Sparse working copy: diagonal plus nonzero off-diagonal entries per row.
struct Work {
    diag: Vec<Rational>,
    off: Vec<BTreeMap<usize, Rational>>,
    active: Vec<bool>,
}

impl Work {
    fn new(m: &ExactMatrix) -> Self {
        let n = m.order();
        let diag = (0..n).map(|i| m.get(i, i).clone()).collect();
        let off = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i && !m.get(i, j).is_zero())
                    .map(|j| (j, m.get(i, j).clone()))
                    .collect()
            })
            .collect();
        Work {
            diag,
            off,
            active: vec![true; n],
        }
    }

    fn entry(&self, i: usize, j: usize) -> Rational {
        if i == j {
            self.diag[i].clone()
        } else {
            self.off[i].get(&j).cloned().unwrap_or_else(Rational::zero)
        }
    }

    /// `a_ij -= delta` on both triangles.
    fn subtract(&mut self, i: usize, j: usize, delta: &Rational) {
        if delta.is_zero() {
            return;
        }
        if i == j {
            self.diag[i] -= delta;
            return;
        }
        for (a, b) in [(i, j), (j, i)] {
            let e = self.off[a].entry(b).or_insert_with(Rational::zero);
            *e -= delta;
            if e.is_zero() {
                self.off[a].remove(&b);
            }
        }
    }

    fn retire(&mut self, p: usize) {
        self.active[p] = false;
        let nbrs: Vec<usize> = self.off[p].keys().copied().collect();
        for q in nbrs {
            self.off[q].remove(&p);
        }
        self.off[p].clear();
    }

    /// Active vertex with nonzero diagonal and fewest off-diagonal entries.
    fn diagonal_pivot(&self) -> Option<usize> {
        (0..self.diag.len())
            .filter(|&i| self.active[i] && !self.diag[i].is_zero())
            .min_by_key(|&i| (self.off[i].len(), i))
    }

    fn block_pivot(&self) -> Option<(usize, usize)> {
        let p = (0..self.diag.len())
            .filter(|&i| self.active[i] && !self.off[i].is_empty())
            .min_by_key(|&i| (self.off[i].len(), i))?;
        let q = self.off[p]
            .keys()
            .copied()
            .min_by_key(|&j| (self.off[j].len(), j))?;
        Some((p, q))
    }

    fn eliminate_single(&mut self, p: usize) {
        let pivot = self.diag[p].clone();
        let col: Vec<(usize, Rational)> =
            self.off[p].iter().map(|(&j, v)| (j, v.clone())).collect();
        for (a, (i, aip)) in col.iter().enumerate() {
            let scaled = aip / &pivot;
            for (j, apj) in &col[a..] {
                let delta = &scaled * apj;
                self.subtract(*i, *j, &delta);
            }
        }
        self.retire(p);
    }

    fn eliminate_block(&mut self, p: usize, q: usize) {
        let (a, b, d) = (self.diag[p].clone(), self.entry(p, q), self.diag[q].clone());
        let det = &a * &d - &b * &b;
        // inverse of [[a, b], [b, d]]
        let (ia, ib, id) = (&d / &det, -(&b / &det), &a / &det);
        let mut nbrs: Vec<usize> = self.off[p]
            .keys()
            .chain(self.off[q].keys())
            .copied()
            .filter(|&j| j != p && j != q)
            .collect();
        nbrs.sort_unstable();
        nbrs.dedup();
        let cols: Vec<(usize, Rational, Rational)> = nbrs
            .iter()
            .map(|&i| (i, self.entry(i, p), self.entry(i, q)))
            .collect();
        for (x, (i, ip, iq)) in cols.iter().enumerate() {
            // row i of [A_ip A_iq] * B^{-1}
            let u = ip * &ia + iq * &ib;
            let v = ip * &ib + iq * &id;
            for (j, jp, jq) in &cols[x..] {
                let delta = &u * jp + &v * jq;
                self.subtract(*i, *j, &delta);
            }
        }
        self.retire(p);
        self.retire(q);
    }
}

/// Numbers of negative, zero and positive eigenvalues of a symmetric matrix.
pub fn inertia(m: &ExactMatrix) -> Result<Inertia> {
    if let Some((i, j)) = m.asymmetry() {
        return Err(Error::NonSymmetric(i, j));
    }
    let mut w = Work::new(m);
    let mut out = Inertia::default();
    loop {
        if let Some(p) = w.diagonal_pivot() {
            if w.diag[p].is_negative() {
                out.negatives += 1;
            } else {
                out.positives += 1;
            }
            w.eliminate_single(p);
        } else if let Some((p, q)) = w.block_pivot() {
            out.negatives += 1;
            out.positives += 1;
            w.eliminate_block(p, q);
        } else {
            out.zeros += w.active.iter().filter(|&&a| a).count();
            break;
        }
    }
    debug_assert_eq!(out.order(), m.order());
    Ok(out)
}

/// Dimension of the kernel of a symmetric matrix.
pub fn nullity(m: &ExactMatrix) -> Result<usize> {
    inertia(m).map(|i| i.zeros)
}
