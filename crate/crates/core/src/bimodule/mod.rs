//! Modules and bimodules over structure-constant algebras, and `(x)_A`.
//!
//! A one-sided module is a bimodule whose other algebra is the base field,
//! so every construction below handles both cases uniformly.

mod tensor;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use tensor::{induced_map, tensor_over, triple_tensor, unit_iso_left, unit_iso_right, Tensor, TripleTensor};

use crate::algebra::{field_algebra, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{combine, Matrix, PrimeField, Quotient, Subspace};
use crate::report::AxiomReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A vector space `GF(p)^dim` with commuting actions `L` of the left algebra
/// and `R` of the right algebra, one matrix per basis element.
///
/// `L(xy) = L(x) L(y)` and `R(xy) = R(y) R(x)`.
#[derive(Clone)]
pub struct Bimodule {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    dim: usize,
    left_actions: Vec<Matrix>,
    right_actions: Vec<Matrix>,
    self_tensor: OnceLock<Arc<Tensor>>,
    self_triple: OnceLock<Arc<TripleTensor>>,
}

impl PartialEq for Bimodule {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.left == other.left
            && self.right == other.right
            && self.left_actions == other.left_actions
            && self.right_actions == other.right_actions
    }
}

impl Eq for Bimodule {}

impl fmt::Debug for Bimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Bimodule")
            .field("dim", &self.dim)
            .field("left_dim", &self.left.dim())
            .field("right_dim", &self.right.dim())
            .finish_non_exhaustive()
    }
}

impl Bimodule {
    pub fn new(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        dim: usize,
        left_actions: Vec<Matrix>,
        right_actions: Vec<Matrix>,
    ) -> Result<Self> {
        let m = Self::new_unchecked(left, right, dim, left_actions, right_actions)?;
        let report = m.check();
        if !report.is_ok() {
            return Err(Error::InvalidModule(report.to_string()));
        }
        Ok(m)
    }

    /// Checks only the number and shape of the action matrices.
    pub fn new_unchecked(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        dim: usize,
        left_actions: Vec<Matrix>,
        right_actions: Vec<Matrix>,
    ) -> Result<Self> {
        if left.field() != right.field() {
            return Err(Error::AlgebraMismatch("algebras over different fields".into()));
        }
        for (side, alg, acts) in [("left", &left, &left_actions), ("right", &right, &right_actions)] {
            if acts.len() != alg.dim() {
                return Err(Error::InvalidModule(format!(
                    "{} {side} action matrices for an algebra of dimension {}",
                    acts.len(),
                    alg.dim()
                )));
            }
            if acts.iter().any(|m| m.rows() != dim || m.cols() != dim || m.field() != alg.field()) {
                return Err(Error::InvalidModule(format!("{side} action matrices must be {dim}x{dim}")));
            }
        }
        Ok(Self {
            left,
            right,
            dim,
            left_actions,
            right_actions,
            self_tensor: OnceLock::new(),
            self_triple: OnceLock::new(),
        })
    }

    /// Left module; the right algebra is the base field acting by scalars.
    pub fn left_module(a: Arc<Algebra>, dim: usize, actions: Vec<Matrix>) -> Result<Self> {
        let k = Arc::new(field_algebra(a.field()));
        let f = a.field();
        Self::new(a, k, dim, actions, vec![Matrix::identity(f, dim)])
    }

    /// Right module; the left algebra is the base field acting by scalars.
    pub fn right_module(a: Arc<Algebra>, dim: usize, actions: Vec<Matrix>) -> Result<Self> {
        let k = Arc::new(field_algebra(a.field()));
        let f = a.field();
        Self::new(k, a, dim, vec![Matrix::identity(f, dim)], actions)
    }

    /// `A` acting on itself from both sides.
    pub fn regular(a: &Arc<Algebra>) -> Self {
        Self::new_unchecked(a.clone(), a.clone(), a.dim(), a.left_regular_all().to_vec(), a.right_regular_all().to_vec())
            .expect("regular representations have the right shape")
    }

    /// Lists violated module identities: multiplicativity, unit, commutation.
    pub fn check(&self) -> AxiomReport {
        let mut report = AxiomReport::new();
        let id = Matrix::identity(self.field(), self.dim);
        let l = &self.left;
        for i in 0..l.dim() {
            for j in 0..l.dim() {
                let lhs = self.left_actions[i].mul(&self.left_actions[j]);
                let rhs = self.left_act(&l.structure_constants()[i][j]);
                report.require(lhs == rhs, "left_action_multiplicative", || format!("L(e{i})L(e{j}) != L(e{i}e{j})"));
            }
        }
        report.require(self.left_act(l.unit()) == id, "left_action_unit", || "unit does not act as identity".into());
        let r = &self.right;
        for i in 0..r.dim() {
            for j in 0..r.dim() {
                let lhs = self.right_actions[j].mul(&self.right_actions[i]);
                let rhs = self.right_act(&r.structure_constants()[i][j]);
                report.require(lhs == rhs, "right_action_multiplicative", || format!("R(e{j})R(e{i}) != R(e{i}e{j})"));
            }
        }
        report.require(self.right_act(r.unit()) == id, "right_action_unit", || "unit does not act as identity".into());
        for (i, li) in self.left_actions.iter().enumerate() {
            for (j, rj) in self.right_actions.iter().enumerate() {
                report.require(li.mul(rj) == rj.mul(li), "actions_commute", || format!("L(e{i}) and R(e{j}) do not commute"));
            }
        }
        report
    }

    pub fn field(&self) -> PrimeField {
        self.left.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_algebra(&self) -> &Arc<Algebra> {
        &self.left
    }

    pub fn right_algebra(&self) -> &Arc<Algebra> {
        &self.right
    }

    pub fn algebra(&self, side: Side) -> &Arc<Algebra> {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub fn left_action(&self, i: usize) -> &Matrix {
        &self.left_actions[i]
    }

    pub fn right_action(&self, j: usize) -> &Matrix {
        &self.right_actions[j]
    }

    pub fn left_actions(&self) -> &[Matrix] {
        &self.left_actions
    }

    pub fn right_actions(&self) -> &[Matrix] {
        &self.right_actions
    }

    pub fn actions(&self, side: Side) -> &[Matrix] {
        match side {
            Side::Left => &self.left_actions,
            Side::Right => &self.right_actions,
        }
    }

    /// Matrix of `m -> x m`.
    pub fn left_act(&self, x: &[u64]) -> Matrix {
        combine(self.field(), self.dim, self.dim, x, &self.left_actions)
    }

    /// Matrix of `m -> m x`.
    pub fn right_act(&self, x: &[u64]) -> Matrix {
        combine(self.field(), self.dim, self.dim, x, &self.right_actions)
    }

    pub fn act(&self, side: Side, x: &[u64]) -> Matrix {
        match side {
            Side::Left => self.left_act(x),
            Side::Right => self.right_act(x),
        }
    }

    /// Every action matrix, left then right; submodules are the common invariant subspaces.
    pub fn acting_matrices(&self) -> Vec<Matrix> {
        self.left_actions.iter().chain(&self.right_actions).cloned().collect()
    }

    pub fn is_left_trivial(&self) -> bool {
        self.left.dim() == 1
    }

    pub fn is_right_trivial(&self) -> bool {
        self.right.dim() == 1
    }

    /// Keeps only the action on `side`; the other side becomes scalars.
    pub fn forget(&self, side: Side) -> Bimodule {
        let f = self.field();
        let k = Arc::new(field_algebra(f));
        let id = vec![Matrix::identity(f, self.dim)];
        match side {
            Side::Left => Self::new_unchecked(self.left.clone(), k, self.dim, self.left_actions.clone(), id),
            Side::Right => Self::new_unchecked(k, self.right.clone(), self.dim, id, self.right_actions.clone()),
        }
        .expect("same shapes")
    }

    /// The same space with left and right exchanged, over the opposite algebras.
    pub fn swap_sides(&self) -> Bimodule {
        Self::new_unchecked(
            Arc::new(self.right.opposite()),
            Arc::new(self.left.opposite()),
            self.dim,
            self.right_actions.clone(),
            self.left_actions.clone(),
        )
        .expect("same shapes")
    }

    pub fn direct_sum(&self, other: &Bimodule) -> Result<Bimodule> {
        if self.left != other.left || self.right != other.right {
            return Err(Error::AlgebraMismatch("direct sum of bimodules over different algebras".into()));
        }
        let la = self.left_actions.iter().zip(&other.left_actions).map(|(a, b)| a.direct_sum(b)).collect();
        let ra = self.right_actions.iter().zip(&other.right_actions).map(|(a, b)| a.direct_sum(b)).collect();
        Self::new_unchecked(self.left.clone(), self.right.clone(), self.dim + other.dim, la, ra)
    }

    /// Transport along an invertible `phi`: actions become `phi X phi^-1`.
    pub fn conjugate(&self, phi: &Matrix) -> Result<Bimodule> {
        let inv = phi
            .inverse()
            .ok_or_else(|| Error::NotInjective("conjugating matrix is singular".into()))?;
        let conj = |m: &Matrix| phi.mul(m).mul(&inv);
        Self::new_unchecked(
            self.left.clone(),
            self.right.clone(),
            self.dim,
            self.left_actions.iter().map(conj).collect(),
            self.right_actions.iter().map(conj).collect(),
        )
    }

    /// Smallest sub-bimodule containing `vectors`.
    pub fn submodule_generated(&self, vectors: &[Vec<u64>]) -> Subspace {
        crate::module_theory::spin(self.field(), self.dim, vectors, &self.acting_matrices())
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        self.left_actions.iter().chain(&self.right_actions).all(|m| s.is_stable_under(m))
    }

    /// Restriction to a stable subspace, in the coordinates of its RREF basis.
    pub fn submodule(&self, s: &Subspace) -> Result<Bimodule> {
        let restrict = |acts: &[Matrix]| -> Result<Vec<Matrix>> {
            acts.iter()
                .map(|m| s.restrict(m).ok_or_else(|| Error::NotStable("subspace is not a submodule".into())))
                .collect()
        };
        Self::new_unchecked(
            self.left.clone(),
            self.right.clone(),
            s.dim(),
            restrict(&self.left_actions)?,
            restrict(&self.right_actions)?,
        )
    }

    /// Quotient by a stable subspace, with its projection and section.
    pub fn quotient_module(&self, s: &Subspace) -> Result<(Bimodule, Quotient)> {
        let q = Quotient::new(s.clone());
        let induce = |acts: &[Matrix]| -> Result<Vec<Matrix>> {
            acts.iter()
                .map(|m| {
                    q.induced_endomorphism(m)
                        .ok_or_else(|| Error::NotStable("subspace is not a submodule".into()))
                })
                .collect()
        };
        let m = Self::new_unchecked(
            self.left.clone(),
            self.right.clone(),
            q.dim(),
            induce(&self.left_actions)?,
            induce(&self.right_actions)?,
        )?;
        Ok((m, q))
    }

    /// `self (x)_A self`, computed once and shared by clones made afterwards.
    pub fn self_tensor(&self) -> Result<Arc<Tensor>> {
        if let Some(t) = self.self_tensor.get() {
            return Ok(t.clone());
        }
        let t = Arc::new(tensor_over(self, self)?);
        Ok(self.self_tensor.get_or_init(|| t).clone())
    }

    /// `self (x)_A self (x)_A self`, cached like [`Bimodule::self_tensor`].
    pub fn self_triple(&self) -> Result<Arc<TripleTensor>> {
        if let Some(t) = self.self_triple.get() {
            return Ok(t.clone());
        }
        let t = Arc::new(triple_tensor(self, self, self)?);
        Ok(self.self_triple.get_or_init(|| t).clone())
    }

    /// Whether `matrix: self -> target` intertwines both actions.
    pub fn is_morphism_to(&self, target: &Bimodule, matrix: &Matrix) -> bool {
        matrix.rows() == target.dim
            && matrix.cols() == self.dim
            && self.left == target.left
            && self.right == target.right
            && self.left_actions.iter().zip(&target.left_actions).all(|(a, b)| matrix.mul(a) == b.mul(matrix))
            && self.right_actions.iter().zip(&target.right_actions).all(|(a, b)| matrix.mul(a) == b.mul(matrix))
    }
}

/// A bimodule map given by its matrix, validated to intertwine the actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    source: Arc<Bimodule>,
    target: Arc<Bimodule>,
    matrix: Matrix,
}

impl ModuleMap {
    pub fn new(source: Arc<Bimodule>, target: Arc<Bimodule>, matrix: Matrix) -> Result<Self> {
        if !source.is_morphism_to(&target, &matrix) {
            return Err(Error::InvalidModule("matrix does not intertwine the actions".into()));
        }
        Ok(Self { source, target, matrix })
    }

    pub fn identity(m: Arc<Bimodule>) -> Self {
        let matrix = Matrix::identity(m.field(), m.dim());
        Self { source: m.clone(), target: m, matrix }
    }

    pub fn source(&self) -> &Arc<Bimodule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Bimodule> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `after . self`.
    pub fn then(&self, after: &ModuleMap) -> Result<ModuleMap> {
        if after.source.as_ref() != self.target.as_ref() {
            return Err(Error::DimensionMismatch("maps are not composable".into()));
        }
        Ok(ModuleMap { source: self.source.clone(), target: after.target.clone(), matrix: after.matrix.mul(&self.matrix) })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.matrix.is_square() && self.matrix.is_invertible()
    }
}
