use std::sync::Arc;

use super::Comodule;
use crate::bimodule::{triple_tensor, Bimodule, Side};
use crate::coring::Coring;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::AxiomReport;

/// An `A`-bimodule with a left coaction (lift into `C (x)_K M`) and a right
/// coaction (lift into `M (x)_K C`).
#[derive(Clone, Debug)]
pub struct Bicomodule {
    pub coring: Arc<Coring>,
    pub carrier: Arc<Bimodule>,
    pub left_coaction: Matrix,
    pub right_coaction: Matrix,
}

/// The two verdicts of [`Bicomodule::check`].
#[derive(Clone, Debug)]
pub struct BicomoduleReport {
    /// Comodule axioms, opposite-side linearity and the compatibility square.
    pub direct: AxiomReport,
    /// Comodule axioms and commuting dual actions; `None` when a side of `C` is not projective.
    pub dual: Option<AxiomReport>,
}

impl BicomoduleReport {
    /// The common verdict, or an error if the two criteria disagree.
    pub fn verdict(&self) -> Result<bool> {
        let direct = self.direct.is_ok();
        match &self.dual {
            Some(d) if d.is_ok() != direct => Err(Error::InternalDisagreement(format!(
                "direct verdict {direct}, dual-action verdict {}",
                d.is_ok()
            ))),
            _ => Ok(direct),
        }
    }
}

impl Bicomodule {
    /// `C` over itself with `Delta` on both sides.
    pub fn regular(coring: &Arc<Coring>) -> Self {
        Self {
            coring: coring.clone(),
            carrier: coring.carrier().clone(),
            left_coaction: coring.delta_lift().clone(),
            right_coaction: coring.delta_lift().clone(),
        }
    }

    fn sides(&self) -> Result<(Comodule, Comodule)> {
        let left = Comodule::new_unchecked(self.coring.clone(), Side::Left, self.carrier.clone(), self.left_coaction.clone())?;
        let right =
            Comodule::new_unchecked(self.coring.clone(), Side::Right, self.carrier.clone(), self.right_coaction.clone())?;
        Ok((left, right))
    }

    fn comodule_items(left: &Comodule, right: &Comodule) -> AxiomReport {
        let mut report = AxiomReport::new();
        report.extend_prefixed("left_", left.check());
        report.extend_prefixed("right_", right.check());
        report
    }

    pub fn check(&self) -> Result<BicomoduleReport> {
        let (left, right) = self.sides()?;
        let base = Self::comodule_items(&left, &right);
        let direct = self.direct_items(&left, &right, base.clone())?;
        let projective = self.coring.is_projective(Side::Left) && self.coring.is_projective(Side::Right);
        let dual = if projective { Some(self.dual_items(&left, &right, base)?) } else { None };
        Ok(BicomoduleReport { direct, dual })
    }

    fn direct_items(&self, left: &Comodule, right: &Comodule, mut report: AxiomReport) -> Result<AxiomReport> {
        let m = &self.carrier;
        let tl = left.tensor()?;
        let lam = tl.project_columns(&self.left_coaction);
        for (j, r) in m.right_actions().iter().enumerate() {
            report.require(lam.mul(r) == tl.carrier().right_actions()[j].mul(&lam), "left_coaction_right_linear", || {
                format!("left coaction does not commute with the right action of e{j}")
            });
        }
        let tr = right.tensor()?;
        let rho = tr.project_columns(&self.right_coaction);
        for (i, l) in m.left_actions().iter().enumerate() {
            report.require(rho.mul(l) == tr.carrier().left_actions()[i].mul(&rho), "right_coaction_left_linear", || {
                format!("right coaction does not commute with the left action of e{i}")
            });
        }
        let c = self.coring.carrier();
        let triple = triple_tensor(c, m, c)?;
        let f = m.field();
        let (d, n) = (self.coring.dim(), m.dim());
        for k in 0..n {
            let y = Matrix::unvectorize(f, n, d, &self.right_coaction.col(k));
            let z = Matrix::unvectorize(f, d, n, &self.left_coaction.col(k));
            let first = self.left_coaction.mul(&y).vectorize();
            let second = z.mul(&self.right_coaction.transpose()).vectorize();
            report.require(triple.project(&first) == triple.project(&second), "coactions_compatible", || {
                format!("the two coactions do not commute on m{k}")
            });
        }
        Ok(report)
    }

    fn dual_items(&self, left: &Comodule, right: &Comodule, mut report: AxiomReport) -> Result<AxiomReport> {
        let m = &self.carrier;
        let xs = left.dual_action_matrices(&*self.coring.dual(Side::Right)?);
        let ys = right.dual_action_matrices(&*self.coring.dual(Side::Left)?);
        let commute = |a: &Matrix, b: &Matrix| a.mul(b) == b.mul(a);
        report.require(
            xs.iter().all(|x| m.right_actions().iter().all(|r| commute(x, r))),
            "right_dual_commutes_with_right_action",
            || "C* action does not commute with the right A-action".into(),
        );
        report.require(
            ys.iter().all(|y| m.left_actions().iter().all(|l| commute(y, l))),
            "left_dual_commutes_with_left_action",
            || "*C action does not commute with the left A-action".into(),
        );
        report.require(xs.iter().all(|x| ys.iter().all(|y| commute(x, y))), "dual_actions_commute", || {
            "the actions of *C and C* do not commute".into()
        });
        Ok(report)
    }

    /// The carrier as a `(*C, C*)`-bimodule.
    pub fn dual_bimodule(&self) -> Result<Bimodule> {
        let (left, right) = self.sides()?;
        let dl = self.coring.dual(Side::Left)?;
        let dr = self.coring.dual(Side::Right)?;
        let ys = right.dual_action_matrices(&dl);
        let xs = left.dual_action_matrices(&dr);
        Bimodule::new(dl.algebra().clone(), dr.algebra().clone(), self.carrier.dim(), ys, xs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{diagonal_embedding, field_algebra, matrix_algebra};
    use crate::coring::{direct_sum, sweedler_coring, trivial_coring};
    use crate::linalg::PrimeField;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn coring_is_a_bicomodule() {
        let c = Arc::new(sweedler_coring(&diagonal_embedding(2, gf(3))).unwrap());
        let r = Bicomodule::regular(&c).check().unwrap();
        assert!(r.direct.is_ok(), "{}", r.direct);
        assert!(r.verdict().unwrap());
        assert!(Bicomodule::regular(&c).dual_bimodule().unwrap().check().is_ok());
    }

    #[test]
    fn perturbed_right_coaction_fails_both_ways() {
        let c = Arc::new(sweedler_coring(&diagonal_embedding(2, gf(3))).unwrap());
        let mut b = Bicomodule::regular(&c);
        let t = c.tensor().unwrap();
        let d = c.dim();
        let i = (0..d * d).find(|&i| t.project(&crate::linalg::unit_vector(d * d, i)).iter().any(|&x| x != 0)).unwrap();
        let v = b.right_coaction.get(i, 2);
        b.right_coaction.set(i, 2, (v + 1) % 3);
        let r = b.check().unwrap();
        assert!(!r.direct.is_ok());
        assert_eq!(r.dual.as_ref().map(AxiomReport::is_ok), Some(false));
        assert!(!r.verdict().unwrap());
    }

    #[test]
    fn direct_sum_summands() {
        let f = gf(2);
        for a in [field_algebra(f), matrix_algebra(2, f)] {
            let t = trivial_coring(&Arc::new(a));
            let s = Arc::new(direct_sum(&t, &t).unwrap());
            assert!(Bicomodule::regular(&s).check().unwrap().verdict().unwrap());
        }
    }
}
