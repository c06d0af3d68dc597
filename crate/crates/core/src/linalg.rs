//! Small dense matrices over a [`Scalar`].
//!
//! Determinants are division-free (Laplace expansion memoised over column
//! subsets), so they work for polynomial entries. Elimination needs exact
//! pivots and reports `NotSpecialized` when only non-invertible polynomial
//! pivots are left.

use crate::error::{Error, Result};
use crate::scalar::{params_of, Scalar};

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Shape { expected: c, got: row.len() });
            }
            data.extend(row);
        }
        Ok(Self { rows: r, cols: c, data })
    }

    /// Columns given as vectors, e.g. the images of basis vectors.
    pub fn from_columns(cols: &[Vec<S>]) -> Self {
        let n = cols.first().map_or(0, Vec::len);
        Self::from_fn(n, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<S> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl FnMut(&S) -> S) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl FnMut(&S) -> Result<S>) -> Result<Self> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Self { rows: self.rows, cols: self.cols, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = S::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = rhs.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc + a.clone() * b.clone();
                }
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (k, x) in v.iter().enumerate() {
                    let a = self.get(i, k);
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc + a.clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() + rhs.get(i, j).clone())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self::from_fn(self.rows, self.cols, |i, j| self.get(i, j).clone() - rhs.get(i, j).clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    pub fn params(&self) -> Vec<String> {
        params_of(&self.data)
    }

    /// Division-free determinant.
    pub fn determinant(&self) -> S {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return S::one();
        }
        // dp[mask] = det of rows 0..|mask| restricted to the columns in mask.
        let mut dp: Vec<Option<S>> = vec![None; 1 << n];
        dp[0] = Some(S::one());
        for mask in 1usize..(1 << n) {
            let k = mask.count_ones() as usize;
            let row = k - 1;
            let mut acc = S::zero();
            let mut pos = 0;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let a = self.get(row, j);
                if !a.is_zero() {
                    if let Some(minor) = &dp[mask ^ (1 << j)] {
                        if !minor.is_zero() {
                            let term = a.clone() * minor.clone();
                            acc = if (row + pos).is_multiple_of(2) { acc + term } else { acc - term };
                        }
                    }
                }
                pos += 1;
            }
            dp[mask] = Some(acc);
        }
        dp[(1 << n) - 1].take().expect("full mask")
    }

    /// Matrix of cofactors, transposed: `A · adj(A) = det(A) · I`.
    pub fn adjugate(&self) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        Self::from_fn(n, n, |i, j| {
            let minor = Self::from_fn(n - 1, n - 1, |r, c| {
                let rr = if r < j { r } else { r + 1 };
                let cc = if c < i { c } else { c + 1 };
                self.get(rr, cc).clone()
            });
            let d = minor.determinant();
            if (i + j) % 2 == 0 {
                d
            } else {
                -d
            }
        })
    }

    /// Exact inverse. Falls back to `adj / det` when elimination gets stuck on
    /// polynomial pivots, which succeeds whenever every quotient is exact.
    pub fn inverse(&self) -> Result<Self> {
        assert!(self.is_square());
        match self.gauss_jordan_inverse() {
            Err(Error::NotSpecialized { .. }) => {
                let det = self.determinant();
                if det.is_zero() {
                    return Err(Error::Singular);
                }
                self.adjugate().try_map(|x| {
                    x.try_div(&det).ok_or_else(|| Error::NotSpecialized { params: det.params().into_iter().collect() })
                })
            }
            other => other,
        }
    }

    fn gauss_jordan_inverse(&self) -> Result<Self> {
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = pick_pivot(&a, col, col)?.ok_or(Error::Singular)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a.get(col, col).try_inv().expect("pivot invertible");
            a.scale_row(col, &p);
            inv.scale_row(col, &p);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.add_row_multiple(r, col, &f);
                    inv.add_row_multiple(r, col, &f);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &S) {
        for j in 0..self.cols {
            let v = self.get(r, j).clone() * c.clone();
            self.set(r, j, v);
        }
    }

    /// row[target] -= f * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, f: &S) {
        for j in 0..self.cols {
            let s = self.get(source, j);
            if s.is_zero() {
                continue;
            }
            let v = self.get(target, j).clone() - f.clone() * s.clone();
            self.set(target, j, v);
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> Result<(Self, Vec<usize>)> {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = pick_pivot(&a, row, col)? else {
                continue;
            };
            a.swap_rows(row, p);
            let inv = a.get(row, col).try_inv().expect("pivot invertible");
            a.scale_row(row, &inv);
            for r in 0..self.rows {
                if r != row && !a.get(r, col).is_zero() {
                    let f = a.get(r, col).clone();
                    a.add_row_multiple(r, row, &f);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Ok((a, pivots))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// Basis of `{x : A x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Result<Vec<Vec<S>>> {
        let (r, pivots) = self.rref()?;
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(k, free).clone();
            }
            basis.push(v);
        }
        Ok(basis)
    }
}

/// First row at or below `from` whose entry in `col` is invertible. Errors if
/// the column has nonzero entries but none of them is.
fn pick_pivot<S: Scalar>(a: &Matrix<S>, from: usize, col: usize) -> Result<Option<usize>> {
    let mut stuck = Vec::new();
    for r in from..a.rows {
        let v = a.get(r, col);
        if v.is_zero() {
            continue;
        }
        if v.try_inv().is_some() {
            return Ok(Some(r));
        }
        stuck.push(v.clone());
    }
    if stuck.is_empty() {
        Ok(None)
    } else {
        Err(Error::NotSpecialized { params: params_of(&stuck) })
    }
}

/// A subspace of `S^n` stored as the nonzero rows of a reduced echelon basis.
#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<S> {
    ambient: usize,
    basis: Vec<Vec<S>>,
}

impl<S: Scalar> Subspace<S> {
    pub fn span(ambient: usize, vectors: &[Vec<S>]) -> Result<Self> {
        if vectors.is_empty() {
            return Ok(Self { ambient, basis: Vec::new() });
        }
        let m = Matrix::from_rows(vectors.to_vec())?;
        if m.cols() != ambient {
            return Err(Error::Shape { expected: ambient, got: m.cols() });
        }
        let (r, pivots) = m.rref()?;
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Ok(Self { ambient, basis })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<S>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[S]) -> Result<bool> {
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Ok(Matrix::from_rows(rows)?.rank()? == self.dim())
    }
}
