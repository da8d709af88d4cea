use std::sync::Arc;

use super::Coring;
use crate::algebra::{Algebra, AlgebraHom};
use crate::bimodule::{Bimodule, Side};
use crate::error::{Error, Result};
use crate::linalg::{combine, Matrix, Subspace};
use crate::module_theory::hom_space;

/// A dual ring of a coring.
///
/// `Side::Right` is `C* = Hom_A(C_A, A)` with `g f = f . (g (x) C) . Delta`;
/// `Side::Left` is `*C = Hom_A(_A C, A)` with `g f = g . (C (x) f) . Delta`.
/// The unit is `epsilon` in both cases.
#[derive(Clone, Debug)]
pub struct DualAlgebra {
    side: Side,
    basis: Vec<Matrix>,
    algebra: Arc<Algebra>,
    embedding: AlgebraHom,
    carrier_actions: Vec<Matrix>,
}

impl DualAlgebra {
    pub fn side(&self) -> Side {
        self.side
    }

    /// One `dim A x dim C` matrix per basis element.
    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// `A^op -> C*`, `a -> a epsilon(-)`, or `A^op -> *C`, `a -> epsilon(-) a`.
    pub fn embedding(&self) -> &AlgebraHom {
        &self.embedding
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The map `C -> A` with the given coordinates.
    pub fn element(&self, coords: &[u64]) -> Matrix {
        let b = &self.basis[0];
        combine(b.field(), b.rows(), b.cols(), coords, &self.basis)
    }

    /// Coordinates of a one-sided linear map `C -> A`, if it lies in the dual.
    pub fn coordinates(&self, map: &Matrix) -> Option<Vec<u64>> {
        let f = map.field();
        let cols: Vec<Vec<u64>> = self.basis.iter().map(Matrix::vectorize).collect();
        Matrix::from_columns(f, map.rows() * map.cols(), &cols).solve(&map.vectorize())
    }

    /// `<f, c> = f(c)`.
    pub fn pairing_eval(&self, f: &[u64], c: &[u64]) -> Vec<u64> {
        self.element(f).mul_vec(c)
    }

    /// Natural action of the basis on the carrier: `c -> c_(1) f(c_(2))` for
    /// `*C` (a left action) and `c -> f(c_(1)) c_(2)` for `C*` (a right action).
    pub fn carrier_actions(&self) -> &[Matrix] {
        &self.carrier_actions
    }

    /// The carrier as a module over this ring, on its natural side.
    pub fn carrier_module(&self) -> Result<Bimodule> {
        let d = self.carrier_actions[0].rows();
        match self.side {
            Side::Left => Bimodule::left_module(self.algebra.clone(), d, self.carrier_actions.clone()),
            Side::Right => Bimodule::right_module(self.algebra.clone(), d, self.carrier_actions.clone()),
        }
    }
}

/// `(f (x) C) Delta c -> f(c_(1)) c_(2)` for a right dual element, or
/// `(C (x) f) Delta c -> c_(1) f(c_(2))` for a left one, as a `C -> C` matrix.
pub(crate) fn act_on_carrier(c: &Coring, side: Side, f: &Matrix) -> Matrix {
    let field = f.field();
    let d = c.dim();
    let carrier = c.carrier();
    let cols: Vec<Vec<u64>> = (0..d)
        .map(|k| {
            let lift = c.delta_lift().col(k);
            let mut out = vec![0u64; d];
            for (idx, &coef) in lift.iter().enumerate() {
                if coef == 0 {
                    continue;
                }
                let (u, v) = (idx / d, idx % d);
                let w = match side {
                    Side::Right => carrier.left_act(&f.col(u)).col(v),
                    Side::Left => carrier.right_act(&f.col(v)).col(u),
                };
                for (o, x) in out.iter_mut().zip(w) {
                    *o = field.add(*o, field.mul(coef, x));
                }
            }
            out
        })
        .collect();
    Matrix::from_columns(field, d, &cols)
}

/// Builds the dual ring on `side` and validates it as an algebra.
pub fn dual_algebra(c: &Coring, side: Side) -> Result<DualAlgebra> {
    let a = c.algebra();
    let f = a.field();
    let d = c.dim();
    let carrier = c.carrier().forget(side);
    let target = Bimodule::regular(a).forget(side);
    let basis = hom_space(&carrier, &target)?.basis;
    let n = basis.len();
    if n == 0 {
        return Err(Error::ZeroModule);
    }
    let vec_basis = Matrix::from_columns(f, a.dim() * d, &basis.iter().map(Matrix::vectorize).collect::<Vec<_>>());
    let coords = |m: &Matrix| -> Result<Vec<u64>> {
        vec_basis
            .solve(&m.vectorize())
            .ok_or_else(|| Error::InternalDisagreement("dual product left the hom space".into()))
    };
    let carrier_actions: Vec<Matrix> = basis.iter().map(|b| act_on_carrier(c, side, b)).collect();
    let mut mul = vec![vec![vec![0u64; n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            // right: b_i b_j = b_j . (b_i (x) C) . Delta; left: b_i b_j = b_i . (C (x) b_j) . Delta
            let prod = match side {
                Side::Right => basis[j].mul(&carrier_actions[i]),
                Side::Left => basis[i].mul(&carrier_actions[j]),
            };
            mul[i][j] = coords(&prod)?;
        }
    }
    let unit = coords(c.counit())?;
    let algebra = Arc::new(
        Algebra::new(f, mul, unit)
            .map_err(|e| Error::InternalDisagreement(format!("dual ring fails the algebra axioms: {e}")))?,
    );
    let op = Arc::new(a.opposite());
    let emb_cols: Vec<Vec<u64>> = (0..a.dim())
        .map(|i| {
            let m = match side {
                Side::Right => a.left_regular(i).mul(c.counit()),
                Side::Left => a.right_regular(i).mul(c.counit()),
            };
            coords(&m)
        })
        .collect::<Result<_>>()?;
    let embedding = AlgebraHom::new(op, algebra.clone(), Matrix::from_columns(f, n, &emb_cols))
        .map_err(|e| Error::InternalDisagreement(format!("opposite algebra embedding: {e}")))?;
    Ok(DualAlgebra { side, basis, algebra, embedding, carrier_actions })
}

/// Common invariant subspaces of both dual-ring actions and both `A`-actions.
pub(crate) fn dual_stable(c: &Coring, s: &Subspace) -> Result<bool> {
    for side in [Side::Left, Side::Right] {
        let d = c.dual(side)?;
        if !d.carrier_actions().iter().all(|m| s.is_stable_under(m)) {
            return Ok(false);
        }
    }
    Ok(c.carrier().is_submodule(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{diagonal_embedding, matrix_algebra, scalar_embedding, upper_triangular};
    use crate::coring::{sweedler_coring, trivial_coring};
    use crate::linalg::PrimeField;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn trivial_coring_dual_is_the_opposite_algebra() {
        let a = Arc::new(upper_triangular(gf(3)));
        let c = trivial_coring(&a);
        for side in [Side::Left, Side::Right] {
            let d = dual_algebra(&c, side).unwrap();
            assert_eq!(d.dim(), 3);
            // the embedding is bijective, so it is an isomorphism A^op -> dual
            assert!(d.embedding().matrix().is_invertible());
        }
    }

    #[test]
    fn sweedler_duals() {
        let a = Arc::new(matrix_algebra(2, gf(3)));
        let c = sweedler_coring(&scalar_embedding(&a)).unwrap();
        let d = dual_algebra(&c, Side::Right).unwrap();
        assert_eq!(d.dim(), 16);
        let diag = sweedler_coring(&diagonal_embedding(2, gf(3))).unwrap();
        for side in [Side::Left, Side::Right] {
            let d = dual_algebra(&diag, side).unwrap();
            assert!(d.algebra().check().is_ok());
            let eps = d.coordinates(diag.counit()).unwrap();
            assert_eq!(eps, d.algebra().unit());
        }
    }

    #[test]
    fn pairing_respects_the_product() {
        let c = sweedler_coring(&diagonal_embedding(2, gf(3))).unwrap();
        let d = dual_algebra(&c, Side::Right).unwrap();
        let n = d.dim();
        let f = gf(3);
        // <g f, c> = f(g(c_1) c_2)
        let g: Vec<u64> = (0..n).map(|i| (i as u64 * 2 + 1) % 3).collect();
        let h: Vec<u64> = (0..n).map(|i| (i as u64 + 2) % 3).collect();
        let gh = d.algebra().mul_elems(&g, &h);
        let action_g = combine(f, c.dim(), c.dim(), &g, d.carrier_actions());
        for k in 0..c.dim() {
            let e = crate::linalg::unit_vector(c.dim(), k);
            assert_eq!(d.pairing_eval(&gh, &e), d.pairing_eval(&h, &action_g.mul_vec(&e)));
        }
    }
}
