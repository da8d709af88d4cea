use std::fmt;

use super::echelon::Echelon;
use super::field::PrimeField;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over GF(p).
///
/// Maps act on column vectors, so the matrix of a linear map `V -> W`
/// has `dim W` rows and `dim V` columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.field.p())?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    /// Builds a matrix from row-major data, reducing every entry.
    pub fn new(field: PrimeField, rows: usize, cols: usize, data: Vec<u64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let data = data.into_iter().map(|x| field.reduce(x)).collect();
        Ok(Self { field, rows, cols, data })
    }

    /// Builds a matrix from nested rows; `cols` is needed for the zero-row case.
    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u64>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "ragged row of length {} (expected {cols})",
                    r.len()
                )));
            }
            data.extend(r.iter().map(|&x| field.reduce(x)));
        }
        Ok(Self { field, rows: rows.len(), cols, data })
    }

    /// Signed-entry variant of [`Matrix::from_rows`], convenient in tests.
    pub fn from_i64_rows(field: PrimeField, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| field.from_i64(x)));
        }
        Self { field, rows: rows.len(), cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u64>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(field, rows, cols);
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in 0..rows {
                m.data[i * cols + j] = field.reduce(c[i]);
            }
        }
        m
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u64,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(field.reduce(f(i, j)));
            }
        }
        Self { field, rows, cols, data }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
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
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = self.field.reduce(v);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u64>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    fn check_same_shape(&self, other: &Self) {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same_shape(other);
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        self.with_data(data)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same_shape(other);
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        self.with_data(data)
    }

    pub fn scale(&self, s: u64) -> Self {
        let f = self.field;
        let s = f.reduce(s);
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        self.with_data(data)
    }

    fn with_data(&self, data: Vec<u64>) -> Self {
        Self { field: self.field, rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field mismatch");
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let f = self.field;
        let p = f.p();
        let budget = f.lazy_budget();
        let n = other.cols;
        let mut out = vec![0u64; self.rows * n];
        let mut acc = vec![0u64; n];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            let mut pending = 0;
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (x, &b) in acc.iter_mut().zip(brow) {
                    *x += a * b;
                }
                pending += 1;
                if pending >= budget {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 0;
                }
            }
            for (o, &x) in out[i * n..(i + 1) * n].iter_mut().zip(&acc) {
                *o = x % p;
            }
        }
        Self { field: f, rows: self.rows, cols: n, data: out }
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        let p = self.field.p();
        (0..self.rows)
            .map(|i| {
                let mut acc: u64 = 0;
                for (k, &x) in self.row(i).iter().enumerate() {
                    acc = (acc + x * v[k]) % p;
                }
                acc
            })
            .collect()
    }

    /// Kronecker product: entry `(i*rows_b + k, j*cols_b + l)` is `a[i,j]*b[k,l]`.
    pub fn kron(&self, other: &Self) -> Self {
        assert_eq!(self.field, other.field, "field mismatch");
        let f = self.field;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut m = Self::zeros(f, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    let base = (i * other.rows + k) * cols + j * other.cols;
                    for l in 0..other.cols {
                        m.data[base + l] = f.mul(a, other.get(k, l));
                    }
                }
            }
        }
        m
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        Self::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self { field: self.field, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::from_fn(self.field, self.rows + other.rows, self.cols + other.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self.get(i, j),
                (false, false) => other.get(i - self.rows, j - self.cols),
                _ => 0,
            }
        })
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }

    /// Reduced row-echelon form (same shape, zero rows last) and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut ech = Echelon::new(self.field, self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i).to_vec());
        }
        let (basis, pivots) = ech.sorted_rows();
        let mut out = Self::zeros(self.field, self.rows, self.cols);
        for (i, r) in basis.iter().enumerate() {
            out.data[i * self.cols..(i + 1) * self.cols].copy_from_slice(r);
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.field, self.cols);
        for i in 0..self.rows {
            ech.insert(self.row(i).to_vec());
        }
        ech.rank()
    }

    /// `{x : self * x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let f = self.field;
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut vecs = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, free));
            }
            vecs.push(v);
        }
        Subspace::from_vectors(f, n, vecs)
    }

    pub fn column_space(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.rows, self.columns())
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.field, self.cols, self.to_rows())
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let f = self.field;
        let bcol = Matrix::from_columns(f, self.rows, &[b.to_vec()]);
        let aug = self.hstack(&bcol);
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u64; self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row, self.cols);
        }
        Some(x)
    }

    /// Solves `self * X = rhs` column by column.
    pub fn solve_matrix(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(rhs.rows, self.rows, "right-hand side row mismatch");
        let f = self.field;
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(f, self.cols, rhs.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.data[pc * rhs.cols + j] = r.get(row, self.cols + j);
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let id = Matrix::identity(self.field, self.rows);
        let x = self.solve_matrix(&id)?;
        if self.rank() == self.rows {
            Some(x)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Vector of all entries in row-major order (the `vec_r` coordinates).
    pub fn vectorize(&self) -> Vec<u64> {
        self.data.clone()
    }

    pub fn unvectorize(field: PrimeField, rows: usize, cols: usize, v: &[u64]) -> Self {
        assert_eq!(v.len(), rows * cols);
        Self { field, rows, cols, data: v.to_vec() }
    }
}

/// Linear combination `sum coeffs[i] * mats[i]`.
pub fn combine(field: PrimeField, rows: usize, cols: usize, coeffs: &[u64], mats: &[Matrix]) -> Matrix {
    assert_eq!(coeffs.len(), mats.len());
    let mut out = Matrix::zeros(field, rows, cols);
    let p = field.p();
    for (&c, m) in coeffs.iter().zip(mats) {
        if c == 0 {
            continue;
        }
        for (o, &x) in out.data.iter_mut().zip(&m.data) {
            *o = (*o + c * x) % p;
        }
    }
    out
}

pub fn vec_add(field: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| field.add(x, y)).collect()
}

pub fn vec_sub(field: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(&x, &y)| field.sub(x, y)).collect()
}

pub fn vec_scale(field: PrimeField, s: u64, a: &[u64]) -> Vec<u64> {
    a.iter().map(|&x| field.mul(s, x)).collect()
}

pub fn kron_vec(field: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(field.mul(x, y));
        }
    }
    out
}

pub fn unit_vector(n: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rref_examples() {
        let id = Matrix::identity(f(3), 2);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1]));

        let m = Matrix::from_i64_rows(f(5), &[&[2, 4], &[1, 2]]);
        let (r, piv) = m.rref();
        assert_eq!(r, Matrix::from_i64_rows(f(5), &[&[1, 2], &[0, 0]]));
        assert_eq!(piv, vec![0]);

        let z = Matrix::zeros(f(7), 2, 3);
        assert_eq!(z.rref(), (z.clone(), vec![]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(f(3), 3).kernel().dim(), 0);
        assert_eq!(Matrix::zeros(f(3), 2, 3).kernel().dim(), 3);
        let k = Matrix::from_i64_rows(f(5), &[&[1, 2]]).kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[3, 1]));
        assert_eq!(k.basis().to_rows(), vec![vec![1, 2]]);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(f(5), 2);
        assert_eq!(id.solve(&[3, 4]), Some(vec![3, 4]));
        assert_eq!(Matrix::zeros(f(5), 2, 2).solve(&[1, 0]), None);
        let two = Matrix::from_i64_rows(f(5), &[&[2]]);
        assert_eq!(two.solve(&[1]), Some(vec![3]));
    }

    #[test]
    fn kron_examples() {
        let i2 = Matrix::identity(f(3), 2);
        let i3 = Matrix::identity(f(3), 3);
        assert_eq!(i2.kron(&i3), Matrix::identity(f(3), 6));
        let z = Matrix::zeros(f(3), 1, 1);
        assert!(z.kron(&Matrix::from_i64_rows(f(3), &[&[1, 2], &[2, 1]])).is_zero());
        let a = Matrix::from_i64_rows(f(3), &[&[1, 1]]);
        let b = Matrix::from_i64_rows(f(3), &[&[2]]);
        assert_eq!(a.kron(&b), Matrix::from_i64_rows(f(3), &[&[2, 2]]));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64_rows(f(7), &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f(7), 2));
        assert!(Matrix::from_i64_rows(f(7), &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
