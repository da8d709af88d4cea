//! Finite-dimensional unital associative algebras given by structure constants.

mod hom;
mod radical;
mod standard;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use hom::AlgebraHom;
pub use radical::{radical, radical_by_composition_series, radical_by_trace_form};
pub use standard::{
    cyclic_group_algebra, diagonal_embedding, dual_numbers, field_algebra, matrix_algebra,
    product, scalar_embedding, triangular_algebra, truncated_polynomials, upper_triangular,
};

use crate::error::{Error, Result};
use crate::linalg::{combine, Matrix, PrimeField, Quotient, Subspace};
use crate::report::AxiomReport;

/// `e_i * e_j = sum_k mul[i][j][k] e_k`, with a distinguished unit vector.
///
/// Left and right regular representations are precomputed:
/// `left_regular(i) * x = e_i x` and `right_regular(j) * x = x e_j`.
#[derive(Clone)]
pub struct Algebra {
    field: PrimeField,
    dim: usize,
    mul: Vec<Vec<Vec<u64>>>,
    unit: Vec<u64>,
    basis_names: Option<Vec<String>>,
    left_reg: Vec<Matrix>,
    right_reg: Vec<Matrix>,
    generators: OnceLock<Vec<Vec<u64>>>,
    rad: OnceLock<Subspace>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.mul == other.mul && self.unit == other.unit
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("p", &self.field.p())
            .field("dim", &self.dim)
            .field("unit", &self.unit)
            .finish_non_exhaustive()
    }
}

impl Algebra {
    /// Validated constructor: rejects tables that fail associativity or the unit law.
    pub fn new(field: PrimeField, mul: Vec<Vec<Vec<u64>>>, unit: Vec<u64>) -> Result<Self> {
        let a = Self::new_unchecked(field, mul, unit)?;
        let report = a.check();
        if !report.is_ok() {
            return Err(Error::InvalidAlgebra(report.to_string()));
        }
        Ok(a)
    }

    /// Builds the table after shape checks only; see [`Algebra::check`].
    pub fn new_unchecked(field: PrimeField, mul: Vec<Vec<Vec<u64>>>, unit: Vec<u64>) -> Result<Self> {
        let dim = unit.len();
        if mul.len() != dim || mul.iter().any(|r| r.len() != dim || r.iter().any(|v| v.len() != dim)) {
            return Err(Error::InvalidAlgebra(format!("structure constants must be {dim}x{dim}x{dim}")));
        }
        let mul: Vec<Vec<Vec<u64>>> = mul
            .into_iter()
            .map(|r| r.into_iter().map(|v| v.into_iter().map(|x| field.reduce(x)).collect()).collect())
            .collect();
        let unit: Vec<u64> = unit.into_iter().map(|x| field.reduce(x)).collect();
        let left_reg = (0..dim)
            .map(|i| Matrix::from_fn(field, dim, dim, |k, j| mul[i][j][k]))
            .collect();
        let right_reg = (0..dim)
            .map(|j| Matrix::from_fn(field, dim, dim, |k, i| mul[i][j][k]))
            .collect();
        Ok(Self {
            field,
            dim,
            mul,
            unit,
            basis_names: None,
            left_reg,
            right_reg,
            generators: OnceLock::new(),
            rad: OnceLock::new(),
        })
    }

    pub fn with_basis_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::InvalidAlgebra(format!("{} basis names for dimension {}", names.len(), self.dim)));
        }
        self.basis_names = Some(names);
        Ok(self)
    }

    /// Lists every violated associativity or unit identity on basis elements.
    pub fn check(&self) -> AxiomReport {
        let mut report = AxiomReport::new();
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                let ij = &self.mul[i][j];
                for k in 0..n {
                    let lhs = self.mul_elems(ij, &self.basis_vector(k));
                    let rhs = self.mul_elems(&self.basis_vector(i), &self.mul[j][k]);
                    if lhs != rhs {
                        report.push("associativity", format!("(e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})"));
                    }
                }
            }
        }
        for i in 0..n {
            let e = self.basis_vector(i);
            if self.mul_elems(&self.unit, &e) != e {
                report.push("left_unit", format!("1*e{i} != e{i}"));
            }
            if self.mul_elems(&e, &self.unit) != e {
                report.push("right_unit", format!("e{i}*1 != e{i}"));
            }
        }
        report
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn structure_constants(&self) -> &[Vec<Vec<u64>>] {
        &self.mul
    }

    pub fn unit(&self) -> &[u64] {
        &self.unit
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn mul_elems(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let f = self.field;
        let p = f.p();
        let mut out = vec![0u64; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (o, &s) in out.iter_mut().zip(&self.mul[i][j]) {
                    *o = (*o + c * s) % p;
                }
            }
        }
        out
    }

    pub fn left_regular(&self, i: usize) -> &Matrix {
        &self.left_reg[i]
    }

    pub fn right_regular(&self, j: usize) -> &Matrix {
        &self.right_reg[j]
    }

    pub fn left_regular_all(&self) -> &[Matrix] {
        &self.left_reg
    }

    pub fn right_regular_all(&self) -> &[Matrix] {
        &self.right_reg
    }

    /// Matrix of `y -> x y`.
    pub fn left_mult(&self, x: &[u64]) -> Matrix {
        combine(self.field, self.dim, self.dim, x, &self.left_reg)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mult(&self, x: &[u64]) -> Matrix {
        combine(self.field, self.dim, self.dim, x, &self.right_reg)
    }

    /// Multiplication `A (x) A -> A` in Kronecker coordinates (`i*dim + j`).
    pub fn multiplication_matrix(&self) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(self.field, n, n * n, |k, col| self.mul[col / n][col % n][k])
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.mul[i][j] == self.mul[j][i]))
    }

    /// Same space with `x * y` replaced by `y * x`.
    pub fn opposite(&self) -> Algebra {
        let n = self.dim;
        let mul = (0..n).map(|i| (0..n).map(|j| self.mul[j][i].clone()).collect()).collect();
        let mut a = Algebra::new_unchecked(self.field, mul, self.unit.clone()).expect("same shape");
        a.basis_names = self.basis_names.clone();
        a
    }

    /// Closure of `gens` under multiplication; the unit is adjoined only on request.
    pub fn subalgebra_generated(&self, gens: &[Vec<u64>], with_unit: bool) -> Subspace {
        let mut vecs: Vec<Vec<u64>> = gens.to_vec();
        if with_unit {
            vecs.push(self.unit.clone());
        }
        let mut space = Subspace::from_vectors(self.field, self.dim, vecs);
        loop {
            let basis = space.basis_vectors();
            let mut ech = space.echelon();
            let mut grew = false;
            for x in &basis {
                for y in &basis {
                    if ech.insert(self.mul_elems(x, y)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return space;
            }
            space = Subspace::from_echelon(&ech);
        }
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim).all(|i| s.is_stable_under(&self.left_reg[i]) && s.is_stable_under(&self.right_reg[i]))
    }

    /// Structure on a unital subalgebra, in the coordinates of its RREF basis,
    /// together with the inclusion homomorphism.
    pub fn subalgebra(self: &Arc<Self>, s: &Subspace) -> Result<(Arc<Algebra>, AlgebraHom)> {
        let basis = s.basis_vectors();
        let d = basis.len();
        let mut mul = vec![vec![vec![0u64; d]; d]; d];
        for i in 0..d {
            for j in 0..d {
                let prod = self.mul_elems(&basis[i], &basis[j]);
                mul[i][j] = s
                    .coordinates(&prod)
                    .ok_or_else(|| Error::InvalidAlgebra("subspace is not closed under multiplication".into()))?;
            }
        }
        let unit = s
            .coordinates(&self.unit)
            .ok_or_else(|| Error::InvalidAlgebra("subspace does not contain the unit".into()))?;
        let sub = Arc::new(Algebra::new(self.field, mul, unit)?);
        let hom = AlgebraHom::new(sub.clone(), self.clone(), s.inclusion())?;
        Ok((sub, hom))
    }

    /// `A / I` on the free coordinates of the ideal's RREF basis.
    pub fn quotient_by(&self, ideal: &Ideal) -> Result<Algebra> {
        if !self.is_two_sided_ideal(&ideal.space) {
            return Err(Error::NotStable("not a two-sided ideal".into()));
        }
        let q = Quotient::new(ideal.space.clone());
        let d = q.dim();
        let lifts: Vec<Vec<u64>> = (0..d).map(|t| q.section().col(t)).collect();
        let mut mul = vec![vec![vec![0u64; d]; d]; d];
        for i in 0..d {
            for j in 0..d {
                mul[i][j] = q.project(&self.mul_elems(&lifts[i], &lifts[j]));
            }
        }
        Algebra::new(self.field, mul, q.project(&self.unit))
    }

    /// `x^n`, with `x^0 = 1`.
    pub fn pow(&self, x: &[u64], n: usize) -> Vec<u64> {
        let mut acc = self.unit.clone();
        for _ in 0..n {
            acc = self.mul_elems(&acc, x);
        }
        acc
    }

    /// Basis elements that, with the unit, generate the algebra (chosen greedily).
    pub fn generators(&self) -> &[Vec<u64>] {
        self.generators.get_or_init(|| {
            let mut gens = Vec::new();
            let mut span = self.subalgebra_generated(&[], true);
            for i in 0..self.dim {
                if span.is_full() {
                    break;
                }
                let e = self.basis_vector(i);
                if !span.contains(&e) {
                    gens.push(e);
                    span = self.subalgebra_generated(&gens, true);
                }
            }
            gens
        })
    }

    /// The Jacobson radical as a subspace (cached).
    pub fn radical_space(&self) -> &Subspace {
        self.rad.get_or_init(|| radical::radical_space(self))
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical_space().is_zero()
    }

    /// Semisimple with no two-sided ideals besides 0 and A.
    ///
    /// Two-sided ideals are exactly the subspaces stable under all left and
    /// right multiplications, so the ideal lattice is trivial iff that
    /// combined action is irreducible.
    pub fn is_simple_artinian(&self) -> bool {
        if self.dim == 0 || !self.is_semisimple() {
            return false;
        }
        // cheap rejection: some basis element generating a proper ideal
        for i in 0..self.dim {
            if self.ideal_generated(&[self.basis_vector(i)]).dim() < self.dim {
                return false;
            }
        }
        let gens: Vec<Matrix> = self.left_reg.iter().chain(&self.right_reg).cloned().collect();
        crate::module_theory::is_irreducible_action(self.field, self.dim, &gens, 0x1dea1)
            .expect("exhaustive fallback always decides at these dimensions")
    }

    /// Smallest two-sided ideal containing `gens`.
    pub fn ideal_generated(&self, gens: &[Vec<u64>]) -> Subspace {
        let mats: Vec<Matrix> = self.left_reg.iter().chain(&self.right_reg).cloned().collect();
        crate::module_theory::spin(self.field, self.dim, gens, &mats)
    }
}

/// A two-sided ideal of an algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub parent: Arc<Algebra>,
    pub space: Subspace,
}

impl Ideal {
    pub fn new(parent: Arc<Algebra>, space: Subspace) -> Result<Self> {
        if !parent.is_two_sided_ideal(&space) {
            return Err(Error::NotStable("subspace is not a two-sided ideal".into()));
        }
        Ok(Self { parent, space })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    /// Whether `I^k = 0`, using iterated products of the ideal with itself.
    pub fn is_nilpotent_within(&self, k: usize) -> bool {
        let a = &self.parent;
        let basis = self.space.basis_vectors();
        let mut power = self.space.clone();
        for _ in 1..k.max(1) {
            if power.is_zero() {
                return true;
            }
            let vecs: Vec<Vec<u64>> = power
                .basis_vectors()
                .iter()
                .flat_map(|x| basis.iter().map(move |y| a.mul_elems(x, y)))
                .collect();
            power = Subspace::from_vectors(a.field(), a.dim(), vecs);
        }
        power.is_zero()
    }
}
