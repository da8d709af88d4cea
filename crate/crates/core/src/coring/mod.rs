//! Corings `(C, Delta, epsilon)` over structure-constant algebras.

mod constructors;
mod dual;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use constructors::{
    coalgebra, direct_sum, entwining_coring, grouplike_coalgebra, sweedler_coring, sweedler_tensor, triangular_coring, trivial_coring,
    EntwiningData,
};
pub use dual::{dual_algebra, DualAlgebra};

use crate::algebra::Algebra;
use crate::bimodule::{induced_map, unit_iso_left, unit_iso_right, Bimodule, Side, Tensor, TripleTensor};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::report::AxiomReport;

/// An `A`-coring: a bimodule `C` with `Delta: C -> C (x)_A C` given by a
/// lift into `C (x)_K C` (Kronecker coordinates) and `epsilon: C -> A`.
#[derive(Clone)]
pub struct Coring {
    algebra: Arc<Algebra>,
    carrier: Arc<Bimodule>,
    delta_lift: Matrix,
    counit: Matrix,
    duals: [OnceLock<Arc<DualAlgebra>>; 2],
    projective: [OnceLock<bool>; 2],
}

fn side_index(side: Side) -> usize {
    match side {
        Side::Left => 0,
        Side::Right => 1,
    }
}

impl PartialEq for Coring {
    /// Equal data up to the choice of lift.
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.carrier == other.carrier
            && self.counit == other.counit
            && match (self.delta(), other.delta()) {
                (Ok(a), Ok(b)) => a == b,
                _ => self.delta_lift == other.delta_lift,
            }
    }
}

impl fmt::Debug for Coring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Coring")
            .field("algebra_dim", &self.algebra.dim())
            .field("dim", &self.carrier.dim())
            .finish_non_exhaustive()
    }
}

impl Coring {
    /// Validated constructor: fails with the axiom report if any axiom is violated.
    pub fn new(algebra: Arc<Algebra>, carrier: Arc<Bimodule>, delta_lift: Matrix, counit: Matrix) -> Result<Self> {
        let c = Self::new_unchecked(algebra, carrier, delta_lift, counit)?;
        let report = c.check();
        if !report.is_ok() {
            return Err(Error::InvalidCoring(report.to_string()));
        }
        Ok(c)
    }

    /// Shape checks only; see [`Coring::check`].
    pub fn new_unchecked(algebra: Arc<Algebra>, carrier: Arc<Bimodule>, delta_lift: Matrix, counit: Matrix) -> Result<Self> {
        if carrier.left_algebra() != &algebra || carrier.right_algebra() != &algebra {
            return Err(Error::AlgebraMismatch("carrier must be a bimodule over the coring's algebra".into()));
        }
        let d = carrier.dim();
        if delta_lift.rows() != d * d || delta_lift.cols() != d {
            return Err(Error::DimensionMismatch(format!(
                "comultiplication lift is {}x{}, expected {}x{d}",
                delta_lift.rows(),
                delta_lift.cols(),
                d * d
            )));
        }
        if counit.rows() != algebra.dim() || counit.cols() != d {
            return Err(Error::DimensionMismatch(format!(
                "counit is {}x{}, expected {}x{d}",
                counit.rows(),
                counit.cols(),
                algebra.dim()
            )));
        }
        Ok(Self { algebra, carrier, delta_lift, counit, duals: Default::default(), projective: Default::default() })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn carrier(&self) -> &Arc<Bimodule> {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn delta_lift(&self) -> &Matrix {
        &self.delta_lift
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    /// The dual ring on `side` (cached): `Side::Right` is `C*`, `Side::Left` is `*C`.
    pub fn dual(&self, side: Side) -> Result<Arc<DualAlgebra>> {
        let slot = &self.duals[side_index(side)];
        if let Some(d) = slot.get() {
            return Ok(d.clone());
        }
        let d = Arc::new(dual_algebra(self, side)?);
        Ok(slot.get_or_init(|| d).clone())
    }

    /// Whether the carrier is projective over `A` on `side` (cached).
    pub fn is_projective(&self, side: Side) -> bool {
        *self.projective[side_index(side)].get_or_init(|| crate::module_theory::is_projective(&self.carrier, side))
    }

    pub fn tensor(&self) -> Result<Arc<Tensor>> {
        self.carrier.self_tensor()
    }

    pub fn triple(&self) -> Result<Arc<TripleTensor>> {
        self.carrier.self_triple()
    }

    /// `Delta` as a matrix into the coordinates of `C (x)_A C`.
    pub fn delta(&self) -> Result<Matrix> {
        Ok(self.tensor()?.project_columns(&self.delta_lift))
    }

    /// Same coring data with another lift or counit (sharing the carrier and its tensor cache).
    pub fn with_data(&self, delta_lift: Matrix, counit: Matrix) -> Result<Coring> {
        Self::new_unchecked(self.algebra.clone(), self.carrier.clone(), delta_lift, counit)
    }

    /// `(Delta (x) C)(x)` for a vector `x in C (x)_K C`, as Kronecker coordinates in `C^(x)3`.
    pub(crate) fn delta_first(&self, v: &[u64]) -> Vec<u64> {
        let d = self.dim();
        let x = Matrix::unvectorize(self.carrier.field(), d, d, v);
        self.delta_lift.mul(&x).vectorize()
    }

    /// `(C (x) Delta)(x)` for a vector `x in C (x)_K C`.
    pub(crate) fn delta_second(&self, v: &[u64]) -> Vec<u64> {
        let d = self.dim();
        let x = Matrix::unvectorize(self.carrier.field(), d, d, v);
        x.mul(&self.delta_lift.transpose()).vectorize()
    }

    /// Each violated coring axiom, as a separate report item.
    pub fn check(&self) -> AxiomReport {
        let mut report = AxiomReport::new();
        let carrier_report = self.carrier.check();
        if !carrier_report.is_ok() {
            report.extend_prefixed("carrier", carrier_report);
            return report;
        }
        let a = &self.algebra;
        let c = &self.carrier;
        for i in 0..a.dim() {
            report.require(
                self.counit.mul(c.left_action(i)) == a.left_regular(i).mul(&self.counit),
                "counit_left_linear",
                || format!("epsilon(e{i} c) != e{i} epsilon(c)"),
            );
            report.require(
                self.counit.mul(c.right_action(i)) == a.right_regular(i).mul(&self.counit),
                "counit_right_linear",
                || format!("epsilon(c e{i}) != epsilon(c) e{i}"),
            );
        }
        let tensor = match self.tensor() {
            Ok(t) => t,
            Err(e) => {
                report.push("tensor", e.to_string());
                return report;
            }
        };
        let delta = tensor.project_columns(&self.delta_lift);
        let cc = tensor.carrier();
        for i in 0..a.dim() {
            report.require(
                delta.mul(c.left_action(i)) == cc.left_action(i).mul(&delta),
                "delta_left_linear",
                || format!("Delta(e{i} c) != e{i} Delta(c)"),
            );
            report.require(
                delta.mul(c.right_action(i)) == cc.right_action(i).mul(&delta),
                "delta_right_linear",
                || format!("Delta(c e{i}) != Delta(c) e{i}"),
            );
        }
        match self.triple() {
            Ok(triple) => {
                for k in 0..self.dim() {
                    let lifted = self.delta_lift.col(k);
                    let lhs = triple.project(&self.delta_first(&lifted));
                    let rhs = triple.project(&self.delta_second(&lifted));
                    report.require(lhs == rhs, "coassociativity", || format!("(Delta (x) C)Delta != (C (x) Delta)Delta on c{k}"));
                }
            }
            Err(e) => report.push("coassociativity", e.to_string()),
        }
        let id = Matrix::identity(c.field(), self.dim());
        let triangle = |side: Side| -> Result<Matrix> {
            match side {
                Side::Left => {
                    let (t_ac, forward, _) = unit_iso_left(c)?;
                    let eps_c = induced_map(&tensor, &t_ac, &self.counit, &id)?;
                    Ok(forward.mul(&eps_c).mul(&delta))
                }
                Side::Right => {
                    let (t_ca, forward, _) = unit_iso_right(c)?;
                    let c_eps = induced_map(&tensor, &t_ca, &id, &self.counit)?;
                    Ok(forward.mul(&c_eps).mul(&delta))
                }
            }
        };
        for (side, axiom) in [(Side::Left, "counit_left_triangle"), (Side::Right, "counit_right_triangle")] {
            match triangle(side) {
                Ok(m) => report.require(m == id, axiom, || "counit triangle does not return the identity".into()),
                Err(e) => report.push(axiom, e.to_string()),
            }
        }
        report
    }

    /// Lifts of `Delta` restricted to `s` inside `s (x)_K s`, if `Delta(s)`
    /// lies in the image of `s (x)_A s`.
    fn restricted_lift(&self, s: &Subspace) -> Result<Option<Matrix>> {
        let tensor = self.tensor()?;
        let f = self.carrier.field();
        let incl = s.inclusion();
        let ds = s.dim();
        let image_cols: Vec<Vec<u64>> = (0..ds * ds)
            .map(|idx| {
                let v = crate::linalg::kron_vec(f, &incl.col(idx / ds), &incl.col(idx % ds));
                tensor.project(&v)
            })
            .collect();
        let image = Matrix::from_columns(f, tensor.dim(), &image_cols);
        let delta = tensor.project_columns(&self.delta_lift);
        let mut cols = Vec::with_capacity(ds);
        for x in s.basis_vectors() {
            match image.solve(&delta.mul_vec(&x)) {
                Some(y) => cols.push(y),
                None => return Ok(None),
            }
        }
        Ok(Some(Matrix::from_columns(f, ds * ds, &cols)))
    }

    /// Whether the sub-bimodule `s` satisfies `Delta(s) in im(s (x)_A s)`.
    pub fn is_subcoring(&self, s: &Subspace) -> Result<bool> {
        if !self.carrier.is_submodule(s) {
            return Err(Error::NotStable("subspace is not an A-sub-bimodule of the carrier".into()));
        }
        Ok(self.restricted_lift(s)?.is_some())
    }

    /// The subcoring on `s`, in the coordinates of its RREF basis.
    pub fn subcoring(&self, s: &Subspace) -> Result<Coring> {
        if !self.carrier.is_submodule(s) {
            return Err(Error::NotStable("subspace is not an A-sub-bimodule of the carrier".into()));
        }
        let lift = self
            .restricted_lift(s)?
            .ok_or_else(|| Error::NotStable("comultiplication does not restrict to the subspace".into()))?;
        let carrier = Arc::new(self.carrier.submodule(s)?);
        let counit = self.counit.mul(&s.inclusion());
        Coring::new_unchecked(self.algebra.clone(), carrier, lift, counit)
    }

    /// Sub-bimodule stable under both dual-ring actions on the carrier.
    pub fn is_dual_sub_bimodule(&self, s: &Subspace) -> Result<bool> {
        dual::dual_stable(self, s)
    }
}
