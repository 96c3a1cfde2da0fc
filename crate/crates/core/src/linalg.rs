//! Dense linear algebra over `F_p`.
//!
//! Pivoting is deterministic: vectors are reduced in insertion order and the
//! pivot of a new row is its first nonzero column.

use serde::{Deserialize, Serialize};

use crate::field::Prime;

/// Row-major dense matrix of residues.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend_from_slice(r);
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Matrix, p: Prime) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let q = p.get() as u64;
        let mut out = Matrix::zeros(self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot += a * b as u64;
                }
                // keep accumulators well below overflow
                if k % 4096 == 4095 {
                    acc.iter_mut().for_each(|x| *x %= q);
                }
            }
            for (o, a) in out.row_mut(i).iter_mut().zip(&acc) {
                *o = (a % q) as u32;
            }
        }
        out
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[u32], p: Prime) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let q = p.get() as u64;
        (0..self.rows)
            .map(|i| {
                let s: u64 = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                (s % q) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix, p: Prime) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| p.add(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u32, p: Prime) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| p.mul(a, c)).collect(),
        }
    }

    pub fn rank(&self, p: Prime) -> usize {
        let mut space = Subspace::new(self.cols, p);
        for i in 0..self.rows {
            space.insert(self.row(i).to_vec());
        }
        space.dim()
    }

    /// Basis of `{ x : x * self = 0 }` (row vectors of length `rows`).
    pub fn left_kernel(&self, p: Prime) -> Vec<Vec<u32>> {
        let width = self.cols + self.rows;
        let mut space = Subspace::with_pivot_limit(width, self.cols, p);
        let mut kernel = Vec::new();
        for i in 0..self.rows {
            let mut v = vec![0u32; width];
            v[..self.cols].copy_from_slice(self.row(i));
            v[self.cols + i] = 1;
            let reduced = space.reduce_owned(v);
            if reduced[..self.cols].iter().all(|&x| x == 0) {
                kernel.push(reduced[self.cols..].to_vec());
            } else {
                space.push_reduced(reduced);
            }
        }
        kernel
    }

    /// Basis of `{ x : self * x = 0 }` (column vectors of length `cols`).
    pub fn right_kernel(&self, p: Prime) -> Vec<Vec<u32>> {
        self.transpose().left_kernel(p)
    }

    pub fn inverse(&self, p: Prime) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        // Gauss-Jordan on [A | I]
        let mut a: Vec<Vec<u32>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| u32::from(i == j)));
                r
            })
            .collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r][col] != 0)?;
            a.swap(col, piv);
            let inv = p.inv(a[col][col]);
            a[col].iter_mut().for_each(|x| *x = p.mul(*x, inv));
            let pivot_row = a[col].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r != col && row[col] != 0 {
                    let c = row[col];
                    axpy(row, &pivot_row, p.neg(c), p);
                }
            }
        }
        Some(Matrix {
            rows: n,
            cols: n,
            data: a.into_iter().flat_map(|r| r[n..].to_vec()).collect(),
        })
    }
}

/// `y += c * x` over `F_p`.
#[inline]
pub fn axpy(y: &mut [u32], x: &[u32], c: u32, p: Prime) {
    if c == 0 {
        return;
    }
    if p.is_two() {
        for (a, &b) in y.iter_mut().zip(x) {
            *a ^= b;
        }
        return;
    }
    // Barrett reduction; operands stay below 2^32 since p < 2^16
    let q = p.get() as u64;
    let m = (1u64 << 32) / q;
    let c = c as u64;
    for (a, &b) in y.iter_mut().zip(x) {
        let t = *a as u64 + c * b as u64;
        let mut r = t - ((t * m) >> 32) * q;
        if r >= q {
            r -= q;
        }
        *a = r as u32;
    }
}

/// An incrementally built subspace of `F_p^width` held in echelon form.
#[derive(Clone, Debug)]
pub struct Subspace {
    p: Prime,
    width: usize,
    pivot_limit: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(width: usize, p: Prime) -> Self {
        Self::with_pivot_limit(width, width, p)
    }

    /// Pivots are only chosen among the first `pivot_limit` columns; a vector
    /// that vanishes there is treated as zero.
    pub fn with_pivot_limit(width: usize, pivot_limit: usize, p: Prime) -> Self {
        Subspace {
            p,
            width,
            pivot_limit,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<I: IntoIterator<Item = Vec<u32>>>(width: usize, p: Prime, vs: I) -> Self {
        let mut s = Subspace::new(width, p);
        for v in vs {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn prime(&self) -> Prime {
        self.p
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn reduce_owned(&self, mut v: Vec<u32>) -> Vec<u32> {
        self.reduce(&mut v);
        v
    }

    pub fn reduce(&self, v: &mut [u32]) {
        debug_assert_eq!(v.len(), self.width);
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                axpy(&mut v[piv..], &row[piv..], self.p.neg(c), self.p);
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w[..self.pivot_limit].iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        self.reduce(&mut v);
        self.push_reduced(v)
    }

    /// Adds an already reduced vector; returns whether it was nonzero.
    pub fn push_reduced(&mut self, mut v: Vec<u32>) -> bool {
        let Some(piv) = v[..self.pivot_limit].iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.p.inv(v[piv]);
        if inv != 1 {
            for x in v[piv..].iter_mut() {
                *x = self.p.mul(*x, inv);
            }
        }
        self.rows.push(v);
        self.pivots.push(piv);
        true
    }
}
