use super::echelon::Echelon;
use super::field::PrimeField;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A subspace of GF(p)^n stored by its RREF basis, so equality is bit-exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Self { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        Self { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn from_vectors<I>(field: PrimeField, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<u64>>,
    {
        let mut ech = Echelon::new(field, ambient);
        for v in vectors {
            if ech.is_full() {
                break;
            }
            ech.insert(v);
        }
        Self::from_echelon(&ech)
    }

    pub(crate) fn from_echelon(ech: &Echelon) -> Self {
        let (rows, pivots) = ech.sorted_rows();
        let field = ech.field();
        let basis = Matrix::from_rows(field, ech.len(), &rows).expect("echelon rows have equal length");
        Self { ambient: ech.len(), basis, pivots }
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// RREF basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<u64>> {
        self.basis.to_rows()
    }

    /// Basis as the columns of an `ambient x dim` matrix (the inclusion map).
    pub fn inclusion(&self) -> Matrix {
        self.basis.transpose()
    }

    pub fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.field(), self.ambient);
        for r in self.basis_vectors() {
            e.insert(r);
        }
        e
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coordinates of `v` with respect to the RREF basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let f = self.field();
        let p = f.p();
        let coords: Vec<u64> = self.pivots.iter().map(|&c| v[c] % p).collect();
        let mut recon = vec![0u64; self.ambient];
        for (i, &c) in coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (x, &y) in recon.iter_mut().zip(self.basis.row(i)) {
                *x = (*x + c * y) % p;
            }
        }
        if recon.iter().zip(v).all(|(&a, &b)| a == b % p) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of GF(p)^{} and GF(p)^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let vecs = self.basis_vectors().into_iter().chain(other.basis_vectors());
        Ok(Subspace::from_vectors(self.field(), self.ambient, vecs))
    }

    /// Intersection by Zassenhaus: reduce rows `(u|u)` and `(v|0)`; rows whose
    /// left half vanishes carry a basis of the intersection in the right half.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let n = self.ambient;
        let f = self.field();
        let mut ech = Echelon::new(f, 2 * n);
        for u in self.basis_vectors() {
            let mut row = u.clone();
            row.extend_from_slice(&u);
            ech.insert(row);
        }
        for v in other.basis_vectors() {
            let mut row = v;
            row.extend(std::iter::repeat_n(0, n));
            ech.insert(row);
        }
        let (rows, pivots) = ech.sorted_rows();
        let vecs = rows
            .into_iter()
            .zip(pivots)
            .filter(|&(_, p)| p >= n)
            .map(|(r, _)| r[n..].to_vec());
        Ok(Subspace::from_vectors(f, n, vecs))
    }

    /// Image of this subspace under a linear map.
    pub fn image(&self, map: &Matrix) -> Subspace {
        assert_eq!(map.cols(), self.ambient, "map domain mismatch");
        let vecs = self.basis_vectors().into_iter().map(|v| map.mul_vec(&v));
        Subspace::from_vectors(self.field(), map.rows(), vecs)
    }

    /// Whether every basis vector is mapped back into the subspace.
    pub fn is_stable_under(&self, map: &Matrix) -> bool {
        self.basis_vectors().iter().all(|v| self.contains(&map.mul_vec(v)))
    }

    /// Matrix of `map` restricted to this (stable) subspace, in RREF-basis coordinates.
    pub fn restrict(&self, map: &Matrix) -> Option<Matrix> {
        let f = self.field();
        let cols: Option<Vec<Vec<u64>>> = self
            .basis_vectors()
            .iter()
            .map(|v| self.coordinates(&map.mul_vec(v)))
            .collect();
        Some(Matrix::from_columns(f, self.dim(), &cols?))
    }
}
