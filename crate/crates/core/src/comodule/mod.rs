//! Comodules and bicomodules over a coring, and their dual-ring modules.

mod bicomodule;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use bicomodule::{Bicomodule, BicomoduleReport};

use crate::bimodule::{induced_map, tensor_over, triple_tensor, unit_iso_left, unit_iso_right, Bimodule, Side, Tensor, TripleTensor};
use crate::coring::{Coring, DualAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{combine, joint_kernel, kron_vec, unit_vector, Matrix, Subspace};
use crate::module_theory::{self, hom_space, DecompositionReport, HomSpace};
use crate::report::AxiomReport;

/// A left comodule `lambda: M -> C (x)_A M` or a right comodule
/// `rho: M -> M (x)_A C`, with the coaction lifted to `C (x)_K M`
/// (index `u*dim M + k`) or `M (x)_K C` (index `k*dim C + u`).
#[derive(Clone)]
pub struct Comodule {
    coring: Arc<Coring>,
    side: Side,
    module: Arc<Bimodule>,
    coaction_lift: Matrix,
    tensor: OnceLock<Arc<Tensor>>,
    triple: OnceLock<Arc<TripleTensor>>,
}

impl fmt::Debug for Comodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Comodule")
            .field("side", &self.side)
            .field("dim", &self.module.dim())
            .finish_non_exhaustive()
    }
}

/// A comodule seen as a module over the dual ring on the other side.
#[derive(Clone, Debug)]
pub struct DualModule {
    pub dual: Arc<DualAlgebra>,
    pub module: Bimodule,
}

impl Comodule {
    pub fn new(coring: Arc<Coring>, side: Side, module: Arc<Bimodule>, coaction_lift: Matrix) -> Result<Self> {
        let m = Self::new_unchecked(coring, side, module, coaction_lift)?;
        let report = m.check();
        if !report.is_ok() {
            return Err(Error::InvalidModule(format!("comodule axioms fail: {report}")));
        }
        Ok(m)
    }

    pub fn new_unchecked(coring: Arc<Coring>, side: Side, module: Arc<Bimodule>, coaction_lift: Matrix) -> Result<Self> {
        if module.algebra(side) != coring.algebra() {
            return Err(Error::AlgebraMismatch("comodule must be a module over the coring's algebra".into()));
        }
        let (d, n) = (coring.dim(), module.dim());
        if coaction_lift.rows() != d * n || coaction_lift.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "coaction lift is {}x{}, expected {}x{n}",
                coaction_lift.rows(),
                coaction_lift.cols(),
                d * n
            )));
        }
        Ok(Self { coring, side, module, coaction_lift, tensor: OnceLock::new(), triple: OnceLock::new() })
    }

    /// `C` over itself, with `Delta` as coaction.
    pub fn regular(coring: &Arc<Coring>, side: Side) -> Self {
        Self::new_unchecked(coring.clone(), side, coring.carrier().clone(), coring.delta_lift().clone())
            .expect("coring data has comodule shape")
    }

    pub fn coring(&self) -> &Arc<Coring> {
        &self.coring
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn module(&self) -> &Arc<Bimodule> {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn coaction_lift(&self) -> &Matrix {
        &self.coaction_lift
    }

    /// `C (x)_A M` for a left comodule, `M (x)_A C` for a right one.
    pub fn tensor(&self) -> Result<Arc<Tensor>> {
        if let Some(t) = self.tensor.get() {
            return Ok(t.clone());
        }
        let c = self.coring.carrier();
        let t = Arc::new(match self.side {
            Side::Left => tensor_over(c, &self.module)?,
            Side::Right => tensor_over(&self.module, c)?,
        });
        Ok(self.tensor.get_or_init(|| t).clone())
    }

    fn triple(&self) -> Result<Arc<TripleTensor>> {
        if let Some(t) = self.triple.get() {
            return Ok(t.clone());
        }
        let c = self.coring.carrier();
        let t = Arc::new(match self.side {
            Side::Left => triple_tensor(c, c, &self.module)?,
            Side::Right => triple_tensor(&self.module, c, c)?,
        });
        Ok(self.triple.get_or_init(|| t).clone())
    }

    /// The coaction in the coordinates of the balanced tensor product.
    pub fn coaction(&self) -> Result<Matrix> {
        Ok(self.tensor()?.project_columns(&self.coaction_lift))
    }

    /// `A`-linearity on the comodule's side, coassociativity and the counit triangle.
    pub fn check(&self) -> AxiomReport {
        let mut report = AxiomReport::new();
        let module_report = self.module.check();
        if !module_report.is_ok() {
            report.extend_prefixed("module", module_report);
            return report;
        }
        let (t, triple) = match (self.tensor(), self.triple()) {
            (Ok(t), Ok(tr)) => (t, tr),
            (Err(e), _) | (_, Err(e)) => {
                report.push("tensor", e.to_string());
                return report;
            }
        };
        let side = self.side;
        let coaction = t.project_columns(&self.coaction_lift);
        for (i, act) in self.module.actions(side).iter().enumerate() {
            report.require(
                coaction.mul(act) == t.carrier().actions(side)[i].mul(&coaction),
                "coaction_linear",
                || format!("coaction does not commute with the action of e{i}"),
            );
        }
        let f = self.module.field();
        let (d, n) = (self.coring.dim(), self.dim());
        let delta = self.coring.delta_lift();
        for k in 0..n {
            let v = self.coaction_lift.col(k);
            let (lhs, rhs) = match side {
                Side::Left => {
                    let x = Matrix::unvectorize(f, d, n, &v);
                    (delta.mul(&x).vectorize(), x.mul(&self.coaction_lift.transpose()).vectorize())
                }
                Side::Right => {
                    let x = Matrix::unvectorize(f, n, d, &v);
                    (self.coaction_lift.mul(&x).vectorize(), x.mul(&delta.transpose()).vectorize())
                }
            };
            report.require(triple.project(&lhs) == triple.project(&rhs), "coaction_coassociative", || {
                format!("coassociativity square fails on m{k}")
            });
        }
        let id = Matrix::identity(f, n);
        let counit = self.coring.counit();
        let triangle = || -> Result<Matrix> {
            match side {
                Side::Left => {
                    let (t_am, forward, _) = unit_iso_left(&self.module)?;
                    Ok(forward.mul(&induced_map(&t, &t_am, counit, &id)?).mul(&coaction))
                }
                Side::Right => {
                    let (t_ma, forward, _) = unit_iso_right(&self.module)?;
                    Ok(forward.mul(&induced_map(&t, &t_ma, &id, counit)?).mul(&coaction))
                }
            }
        };
        match triangle() {
            Ok(m) => report.require(m == id, "coaction_counit", || "counit triangle does not return the identity".into()),
            Err(e) => report.push("coaction_counit", e.to_string()),
        }
        report
    }

    /// Action of each dual-ring basis element: `m f = f(m_(-1)) m_(0)` on a
    /// left comodule, `f m = m_(0) f(m_(1))` on a right one.
    pub fn dual_action_matrices(&self, dual: &DualAlgebra) -> Vec<Matrix> {
        let f = self.module.field();
        let (d, n) = (self.coring.dim(), self.dim());
        dual.basis()
            .iter()
            .map(|b| {
                let cols: Vec<Vec<u64>> = (0..n)
                    .map(|k| {
                        let lift = self.coaction_lift.col(k);
                        let mut out = vec![0u64; n];
                        for (idx, &coef) in lift.iter().enumerate() {
                            if coef == 0 {
                                continue;
                            }
                            let w = match self.side {
                                Side::Left => self.module.left_act(&b.col(idx / n)).col(idx % n),
                                Side::Right => self.module.right_act(&b.col(idx % d)).col(idx / d),
                            };
                            for (o, x) in out.iter_mut().zip(w) {
                                *o = f.add(*o, f.mul(coef, x));
                            }
                        }
                        out
                    })
                    .collect();
                Matrix::from_columns(f, n, &cols)
            })
            .collect()
    }

    fn require_projective(&self) -> Result<()> {
        let needed = self.side.other();
        if !self.coring.is_projective(needed) {
            let which = match needed {
                Side::Right => "C_A",
                Side::Left => "_AC",
            };
            return Err(Error::NotProjective(format!(
                "{which} is not projective, so comodules are not modules over the dual ring"
            )));
        }
        Ok(())
    }

    /// A left comodule as a right `C*`-module, a right comodule as a left `*C`-module.
    pub fn to_dual_module(&self) -> Result<DualModule> {
        self.require_projective()?;
        let dual = self.coring.dual(self.side.other())?;
        let actions = self.dual_action_matrices(&dual);
        let n = self.dim();
        let module = match self.side {
            Side::Left => Bimodule::right_module(dual.algebra().clone(), n, actions),
            Side::Right => Bimodule::left_module(dual.algebra().clone(), n, actions),
        }
        .map_err(|e| Error::InternalDisagreement(format!("induced dual action is not a module: {e}")))?;
        Ok(DualModule { dual, module })
    }

    /// Inverse of [`Comodule::to_dual_module`]: `lambda(m) = sum_k c_k (x) m f^k`
    /// or `rho(m) = sum_k f^k m (x) c_k` for a dual basis `(c_k, f^k)`.
    pub fn from_dual_module(coring: &Arc<Coring>, side: Side, module: &Bimodule) -> Result<Comodule> {
        let dual_side = side.other();
        let dual = coring.dual(dual_side)?;
        if module.algebra(dual_side) != dual.algebra() {
            return Err(Error::AlgebraMismatch("module is not over the dual ring".into()));
        }
        let fk = dual_basis(coring, dual_side)?;
        let field = module.field();
        let (d, n) = (coring.dim(), module.dim());
        let acts = module.actions(dual_side);
        let act_of = |coords: &[u64]| combine(field, n, n, coords, acts);
        let fk_acts: Vec<Matrix> = fk.iter().map(|x| act_of(x)).collect();
        let lift_cols: Vec<Vec<u64>> = (0..n)
            .map(|m| {
                let mut out = vec![0u64; d * n];
                for (k, act) in fk_acts.iter().enumerate() {
                    let v = act.col(m);
                    let term = match side {
                        Side::Left => kron_vec(field, &unit_vector(d, k), &v),
                        Side::Right => kron_vec(field, &v, &unit_vector(d, k)),
                    };
                    for (o, x) in out.iter_mut().zip(term) {
                        *o = field.add(*o, x);
                    }
                }
                out
            })
            .collect();
        let emb = dual.embedding();
        let a = coring.algebra();
        let a_actions: Vec<Matrix> = (0..a.dim()).map(|i| act_of(&emb.apply(&a.basis_vector(i)))).collect();
        let underlying = match side {
            Side::Left => Bimodule::left_module(a.clone(), n, a_actions)?,
            Side::Right => Bimodule::right_module(a.clone(), n, a_actions)?,
        };
        Comodule::new(coring.clone(), side, Arc::new(underlying), Matrix::from_columns(field, d * n, &lift_cols))
    }

    /// Lift of the coaction restricted to `s`, when `s` is a subcomodule.
    fn restricted_lift(&self, s: &Subspace) -> Result<Option<Matrix>> {
        let t = self.tensor()?;
        let f = self.module.field();
        let d = self.coring.dim();
        let ds = s.dim();
        let incl = s.inclusion();
        let image_cols: Vec<Vec<u64>> = (0..d * ds)
            .map(|idx| match self.side {
                Side::Left => t.project(&kron_vec(f, &unit_vector(d, idx / ds), &incl.col(idx % ds))),
                Side::Right => t.project(&kron_vec(f, &incl.col(idx / d), &unit_vector(d, idx % d))),
            })
            .collect();
        let image = Matrix::from_columns(f, t.dim(), &image_cols);
        let coaction = t.project_columns(&self.coaction_lift);
        let mut cols = Vec::with_capacity(ds);
        for x in s.basis_vectors() {
            match image.solve(&coaction.mul_vec(&x)) {
                Some(y) => cols.push(y),
                None => return Ok(None),
            }
        }
        Ok(Some(Matrix::from_columns(f, d * ds, &cols)))
    }

    pub fn is_subcomodule(&self, s: &Subspace) -> Result<bool> {
        let one_sided = self.module.forget(self.side);
        Ok(one_sided.is_submodule(s) && self.restricted_lift(s)?.is_some())
    }

    /// The subcomodule on `s`, in the coordinates of its RREF basis.
    pub fn subcomodule(&self, s: &Subspace) -> Result<Comodule> {
        let one_sided = self.module.forget(self.side);
        let module = one_sided.submodule(s)?;
        let lift = self
            .restricted_lift(s)?
            .ok_or_else(|| Error::NotStable("coaction does not restrict to the subspace".into()))?;
        Comodule::new_unchecked(self.coring.clone(), self.side, Arc::new(module), lift)
    }
}

/// An `A`-linear colinear map between comodules on the same side.
#[derive(Clone, Debug)]
pub struct ComoduleMap {
    source: Arc<Comodule>,
    target: Arc<Comodule>,
    matrix: Matrix,
}

impl ComoduleMap {
    pub fn new(source: Arc<Comodule>, target: Arc<Comodule>, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch("map shape does not match the comodules".into()));
        }
        let homs = comodule_hom_space(&source, &target)?;
        let f = matrix.field();
        let span = Subspace::from_vectors(f, matrix.rows() * matrix.cols(), homs.basis.iter().map(Matrix::vectorize));
        if !span.contains(&matrix.vectorize()) {
            return Err(Error::InvalidModule("map is not a comodule morphism".into()));
        }
        Ok(Self { source, target, matrix })
    }

    pub fn source(&self) -> &Arc<Comodule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Comodule> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }
}

/// Coordinates `f^k` (in the dual basis) with `sum_k c_k f^k(c) = c` for
/// `C*`, or `sum_k f^k(c) c_k = c` for `*C`, where `c_k` runs over the
/// carrier basis; exists exactly when the carrier is projective on that side.
pub fn dual_basis(coring: &Coring, dual_side: Side) -> Result<Vec<Vec<u64>>> {
    let dual = coring.dual(dual_side)?;
    let f = coring.carrier().field();
    let d = coring.dim();
    let nb = dual.dim();
    let carrier = coring.carrier();
    let cols: Vec<Vec<u64>> = (0..d * nb)
        .map(|idx| {
            let (k, i) = (idx / nb, idx % nb);
            let b = &dual.basis()[i];
            let mut col = Vec::with_capacity(d * d);
            for j in 0..d {
                let a = b.col(j);
                let v = match dual_side {
                    Side::Right => carrier.right_act(&a).col(k),
                    Side::Left => carrier.left_act(&a).col(k),
                };
                col.extend(v);
            }
            col
        })
        .collect();
    let system = Matrix::from_columns(f, d * d, &cols);
    let rhs = Matrix::identity(f, d).transpose().vectorize();
    let x = system
        .solve(&rhs)
        .ok_or_else(|| Error::NotProjective("no dual basis exists for the carrier".into()))?;
    Ok(x.chunks(nb).map(<[u64]>::to_vec).collect())
}

/// Maps that are `A`-linear and colinear: `(C (x) X) lambda_M = lambda_N X`.
pub fn comodule_hom_space(m: &Comodule, n: &Comodule) -> Result<HomSpace> {
    if m.side != n.side || !(Arc::ptr_eq(&m.coring, &n.coring) || m.coring == n.coring) {
        return Err(Error::AlgebraMismatch("comodules over different corings or sides".into()));
    }
    let side = m.side;
    let linear = hom_space(&m.module.forget(side), &n.module.forget(side))?;
    let f = m.module.field();
    let (d, dm, dn) = (m.coring.dim(), m.dim(), n.dim());
    let tn = n.tensor()?;
    let n_coaction = tn.project_columns(&n.coaction_lift);
    let constraint_cols: Vec<Vec<u64>> = linear
        .basis
        .iter()
        .map(|x| {
            let mut col = Vec::new();
            for j in 0..dm {
                let y = m.coaction_lift.col(j);
                let pushed = match side {
                    Side::Left => Matrix::unvectorize(f, d, dm, &y).mul(&x.transpose()).vectorize(),
                    Side::Right => x.mul(&Matrix::unvectorize(f, dm, d, &y)).vectorize(),
                };
                let lhs = tn.project(&pushed);
                let rhs = n_coaction.mul_vec(&x.col(j));
                col.extend(crate::linalg::vec_sub(f, &lhs, &rhs));
            }
            col
        })
        .collect();
    let rows = tn.dim() * dm;
    let constraint = Matrix::from_columns(f, rows, &constraint_cols);
    let kernel = joint_kernel(f, linear.dim(), [constraint]);
    let basis = kernel.columns().iter().map(|c| linear.combination(f, c)).collect();
    Ok(HomSpace { source_dim: dm, target_dim: dn, basis })
}

/// `C(M)`: the sum of the images of all comodule maps `M -> C`.
pub fn coefficient_bicomodule(m: &Comodule) -> Result<Subspace> {
    let c = Comodule::regular(&m.coring, m.side);
    let homs = comodule_hom_space(m, &c)?;
    let f = m.module.field();
    let s = Subspace::from_vectors(f, c.dim(), homs.basis.iter().flat_map(Matrix::columns));
    if !m.coring.is_dual_sub_bimodule(&s)? {
        return Err(Error::InternalDisagreement("coefficient space is not a sub-bicomodule".into()));
    }
    Ok(s)
}

/// A simple subcomodule, found on the dual-module side and pulled back.
pub fn simple_subcomodule(m: &Comodule, seed: u64) -> Result<(Subspace, Comodule)> {
    let dm = m.to_dual_module()?;
    let s = module_theory::simple_submodule(&dm.module, seed)?;
    let sub = m.subcomodule(&s)?;
    Ok((s, sub))
}

/// The largest semisimple subcomodule, as a subspace.
pub fn socle_comodule(m: &Comodule) -> Result<Subspace> {
    Ok(module_theory::socle(&m.to_dual_module()?.module))
}

pub fn is_semisimple_comodule(m: &Comodule) -> Result<bool> {
    Ok(socle_comodule(m)?.is_full())
}

pub fn comodule_isotypic(m: &Comodule, seed: u64) -> Result<DecompositionReport> {
    module_theory::isotypic_decomposition(&m.to_dual_module()?.module, seed)
}
