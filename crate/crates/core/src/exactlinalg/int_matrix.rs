use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlinalg::FieldMatrix;
use crate::polyring::Domain;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// Smith normal form summary: the nonzero diagonal entries `d1 | d2 | ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

/// Smith form together with the left transform `U` (rows of `U * M * V = D`).
#[derive(Clone, Debug)]
pub struct SnfDecomposition {
    pub snf: SnfResult,
    pub left: IntMatrix,
}

impl SnfResult {
    /// Invariant factors other than 1: the torsion of the cokernel.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.invariant_factors.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    /// Free rank of the cokernel `Z^rows / im(M)`.
    pub fn cokernel_free_rank(&self, rows: usize) -> usize {
        rows - self.rank
    }
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows.iter().flatten().map(|&v| BigInt::from(v)).collect();
        Self::new(rows.len(), cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        IntMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reduction modulo a prime.
    pub fn reduce_mod(&self, p: u64) -> Result<FieldMatrix> {
        let dom = Domain::prime_field(p)?;
        FieldMatrix::new(dom, self.rows, self.cols, self.data.iter().map(|v| dom.from_bigint(v)).collect())
    }

    /// Rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    a.swap(p * cols + j, r * cols + j);
                }
            }
            let pivot = a[r * cols + c].clone();
            for i in r + 1..rows {
                let lead = a[i * cols + c].clone();
                for j in c + 1..cols {
                    let v = &pivot * &a[i * cols + j] - &lead * &a[r * cols + j];
                    a[i * cols + j] = if prev.is_one() { v } else { v / &prev };
                }
                a[i * cols + c] = BigInt::zero();
            }
            prev = pivot;
            r += 1;
        }
        r
    }

    pub fn smith_normal_form(&self) -> SnfResult {
        self.smith(false).snf
    }

    /// Smith form that also records the unimodular left transform `U`.
    pub fn smith_with_left_transform(&self) -> SnfDecomposition {
        self.smith(true)
    }

    fn smith(&self, track: bool) -> SnfDecomposition {
        let mut w = Work {
            a: self.data.clone(),
            rows: self.rows,
            cols: self.cols,
            u: track.then(|| IntMatrix::identity(self.rows).data),
        };
        let mut diag = Vec::new();
        for t in 0..self.rows.min(self.cols) {
            let Some((pi, pj)) = w.smallest_nonzero(t) else {
                break;
            };
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            loop {
                if !w.clear_column(t) {
                    continue;
                }
                if !w.clear_row(t) {
                    continue;
                }
                // Divisibility: fold an offending row into the pivot row.
                match w.non_divisible_row(t) {
                    Some(i) => w.add_row(t, i),
                    None => break,
                }
            }
            if w.at(t, t).is_negative() {
                w.negate_row(t);
            }
            diag.push(w.at(t, t).clone());
        }
        let rank = diag.len();
        SnfDecomposition {
            snf: SnfResult { invariant_factors: diag, rank },
            left: IntMatrix { rows: self.rows, cols: self.rows, data: w.u.unwrap_or_default() },
        }
    }
}

struct Work {
    a: Vec<BigInt>,
    rows: usize,
    cols: usize,
    u: Option<Vec<BigInt>>,
}

impl Work {
    fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.a[i * self.cols + j]
    }

    /// Nonzero entry of least absolute value in the trailing block, lowest
    /// index on ties.
    fn smallest_nonzero(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &BigInt)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let v = self.at(i, j);
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(_, _, b)| v.abs() < b.abs()) {
                    best = Some((i, j, v));
                    if v.abs().is_one() {
                        return Some((i, j));
                    }
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn swap_rows(&mut self, x: usize, y: usize) {
        if x == y {
            return;
        }
        for j in 0..self.cols {
            self.a.swap(x * self.cols + j, y * self.cols + j);
        }
        if let Some(u) = &mut self.u {
            for j in 0..self.rows {
                u.swap(x * self.rows + j, y * self.rows + j);
            }
        }
    }

    fn swap_cols(&mut self, x: usize, y: usize) {
        if x == y {
            return;
        }
        for i in 0..self.rows {
            self.a.swap(i * self.cols + x, i * self.cols + y);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.a[i * self.cols + j];
            *v = -std::mem::take(v);
        }
        if let Some(u) = &mut self.u {
            for j in 0..self.rows {
                let v = &mut u[i * self.rows + j];
                *v = -std::mem::take(v);
            }
        }
    }

    /// row_target += q * row_src
    fn axpy_row(&mut self, target: usize, src: usize, q: &BigInt) {
        let c = self.cols;
        for j in 0..c {
            if self.a[src * c + j].is_zero() {
                continue;
            }
            let d = q * &self.a[src * c + j];
            self.a[target * c + j] += d;
        }
        if let Some(u) = &mut self.u {
            let n = self.rows;
            for j in 0..n {
                if u[src * n + j].is_zero() {
                    continue;
                }
                let d = q * &u[src * n + j];
                u[target * n + j] += d;
            }
        }
    }

    fn axpy_col(&mut self, target: usize, src: usize, q: &BigInt) {
        let c = self.cols;
        for i in 0..self.rows {
            if self.a[i * c + src].is_zero() {
                continue;
            }
            let d = q * &self.a[i * c + src];
            self.a[i * c + target] += d;
        }
    }

    fn add_row(&mut self, target: usize, src: usize) {
        self.axpy_row(target, src, &BigInt::one());
    }

    /// Eliminates column `t` below the pivot. Returns false if a smaller
    /// remainder was swapped into the pivot (the caller must retry).
    fn clear_column(&mut self, t: usize) -> bool {
        for i in t + 1..self.rows {
            if self.at(i, t).is_zero() {
                continue;
            }
            let q = self.at(i, t).div_floor(self.at(t, t));
            self.axpy_row(i, t, &-q);
            if !self.at(i, t).is_zero() {
                self.swap_rows(t, i);
                return false;
            }
        }
        true
    }

    fn clear_row(&mut self, t: usize) -> bool {
        for j in t + 1..self.cols {
            if self.at(t, j).is_zero() {
                continue;
            }
            let q = self.at(t, j).div_floor(self.at(t, t));
            self.axpy_col(j, t, &-q);
            if !self.at(t, j).is_zero() {
                self.swap_cols(t, j);
                return false;
            }
        }
        true
    }

    fn non_divisible_row(&self, t: usize) -> Option<usize> {
        let p = self.at(t, t);
        if p.abs().is_one() {
            return None;
        }
        (t + 1..self.rows).find(|&i| (t + 1..self.cols).any(|j| !self.at(i, j).is_multiple_of(p)))
    }
}
