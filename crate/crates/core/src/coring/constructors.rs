use std::sync::Arc;

use super::Coring;
use crate::algebra::{field_algebra, triangular_algebra, Algebra, AlgebraHom};
use crate::bimodule::{tensor_over, Bimodule, Tensor};
use crate::error::{Error, Result};
use crate::linalg::{kron_vec, unit_vector, Matrix, PrimeField};
use crate::report::AxiomReport;

/// `C = A`, `Delta(c) = c (x) 1`, `epsilon = id`.
pub fn trivial_coring(a: &Arc<Algebra>) -> Coring {
    let f = a.field();
    let n = a.dim();
    let lift_cols: Vec<Vec<u64>> = (0..n).map(|i| kron_vec(f, &a.basis_vector(i), a.unit())).collect();
    let lift = Matrix::from_columns(f, n * n, &lift_cols);
    Coring::new_unchecked(a.clone(), Arc::new(Bimodule::regular(a)), lift, Matrix::identity(f, n))
        .expect("regular carrier has matching shapes")
}

/// `A (x)_B A` as a quotient of `A (x)_K A`, in the coordinates used by [`sweedler_coring`].
pub fn sweedler_tensor(iota: &AlgebraHom) -> Result<Tensor> {
    if !iota.is_injective() {
        return Err(Error::NotInjective("the subalgebra map must be injective".into()));
    }
    let a = iota.target();
    let b = iota.source();
    let n = a.dim();
    let images = iota.matrix().columns();
    let as_right_b = Bimodule::new_unchecked(
        a.clone(),
        b.clone(),
        n,
        a.left_regular_all().to_vec(),
        images.iter().map(|x| a.right_mult(x)).collect(),
    )?;
    let as_left_b = Bimodule::new_unchecked(
        b.clone(),
        a.clone(),
        n,
        images.iter().map(|x| a.left_mult(x)).collect(),
        a.right_regular_all().to_vec(),
    )?;
    tensor_over(&as_right_b, &as_left_b)
}

/// `A (x)_B A` for a subalgebra `B -> A`, with
/// `Delta(a (x) a') = (a (x) 1) (x)_A (1 (x) a')` and `epsilon` the multiplication.
pub fn sweedler_coring(iota: &AlgebraHom) -> Result<Coring> {
    let t = sweedler_tensor(iota)?;
    let a = iota.target();
    let f = a.field();
    let n = a.dim();
    let d = t.dim();
    let one = a.unit();
    let left_pure: Vec<Vec<u64>> = (0..n).map(|i| t.pure(&a.basis_vector(i), one)).collect::<Result<_>>()?;
    let right_pure: Vec<Vec<u64>> = (0..n).map(|j| t.pure(one, &a.basis_vector(j))).collect::<Result<_>>()?;
    let mult = a.multiplication_matrix();
    let mut lift_cols = Vec::with_capacity(d);
    let mut counit_cols = Vec::with_capacity(d);
    for s in t.section().columns() {
        let mut col = vec![0u64; d * d];
        for (idx, &c) in s.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let v = kron_vec(f, &left_pure[idx / n], &right_pure[idx % n]);
            for (x, y) in col.iter_mut().zip(v) {
                *x = f.add(*x, f.mul(c, y));
            }
        }
        lift_cols.push(col);
        counit_cols.push(mult.mul_vec(&s));
    }
    Coring::new_unchecked(
        a.clone(),
        Arc::new(t.carrier().clone()),
        Matrix::from_columns(f, d * d, &lift_cols),
        Matrix::from_columns(f, n, &counit_cols),
    )
}

/// The ideal `I = [[R, B], [0, 0]]` of the triangular algebra as a coring,
/// `Delta(x) = e (x) x` with `e = (1_R, 0; 0, 0)` and `epsilon` the inclusion.
pub fn triangular_coring(r: &Arc<Algebra>, s: &Arc<Algebra>, b: &Bimodule) -> Result<Coring> {
    let (a, ideal) = triangular_algebra(r, s, b)?;
    let f = a.field();
    let carrier = Arc::new(Bimodule::regular(&a).submodule(&ideal.space)?);
    let d = carrier.dim();
    let mut e = vec![0u64; d];
    e[..r.dim()].copy_from_slice(r.unit());
    let lift_cols: Vec<Vec<u64>> = (0..d).map(|k| kron_vec(f, &e, &unit_vector(d, k))).collect();
    Coring::new_unchecked(a, carrier, Matrix::from_columns(f, d * d, &lift_cols), ideal.space.inclusion())
}

/// A coalgebra over the base field: a coring whose algebra is `GF(p)`.
pub fn coalgebra(field: PrimeField, delta_lift: Matrix, counit: Matrix) -> Result<Coring> {
    let k = Arc::new(field_algebra(field));
    let d = counit.cols();
    let carrier = Bimodule::new_unchecked(k.clone(), k.clone(), d, vec![Matrix::identity(field, d)], vec![Matrix::identity(field, d)])?;
    Coring::new(k, Arc::new(carrier), delta_lift, counit)
}

/// `n` grouplike basis elements: `Delta(x_i) = x_i (x) x_i`, `epsilon(x_i) = 1`.
pub fn grouplike_coalgebra(field: PrimeField, n: usize) -> Coring {
    let cols: Vec<Vec<u64>> = (0..n).map(|i| kron_vec(field, &unit_vector(n, i), &unit_vector(n, i))).collect();
    let counit = Matrix::from_fn(field, 1, n, |_, _| 1);
    coalgebra(field, Matrix::from_columns(field, n * n, &cols), counit).expect("grouplike coalgebra")
}

/// A coalgebra `C` over `GF(p)`, an algebra `A`, and `psi: C (x) A -> A (x) C`
/// with columns indexed by `c*dim A + a` and rows by `a*dim C + c`.
#[derive(Clone, Debug)]
pub struct EntwiningData {
    pub coalgebra: Coring,
    pub algebra: Arc<Algebra>,
    pub psi: Matrix,
}

/// `A (x) C` with `(a' (x) c) a = (mu (x) C)(a' (x) psi(c (x) a))`, `Delta = A (x) Delta_C`
/// and `epsilon = A (x) epsilon_C`.
///
/// The inner result is the coring when every axiom holds and otherwise the
/// axiom report, which certifies that `psi` is not an entwining.
pub fn entwining_coring(e: &EntwiningData) -> Result<std::result::Result<Coring, AxiomReport>> {
    let coalg = &e.coalgebra;
    if coalg.algebra().dim() != 1 {
        return Err(Error::InvalidCoring("entwining input must be a coalgebra over the base field".into()));
    }
    let report = coalg.check();
    if !report.is_ok() {
        return Err(Error::InvalidCoring(format!("coalgebra axioms fail: {report}")));
    }
    let a = &e.algebra;
    let f = a.field();
    let (da, dc) = (a.dim(), coalg.dim());
    let n = da * dc;
    if e.psi.rows() != n || e.psi.cols() != n {
        return Err(Error::DimensionMismatch(format!("psi must be {n}x{n}")));
    }
    let left_actions = (0..da).map(|i| a.left_regular(i).kron(&Matrix::identity(f, dc))).collect();
    let right_actions = (0..da)
        .map(|k| {
            let cols: Vec<Vec<u64>> = (0..n)
                .map(|col| {
                    let (a_prime, c) = (col / dc, col % dc);
                    let image = e.psi.col(c * da + k);
                    let mut out = vec![0u64; n];
                    for (idx, &coef) in image.iter().enumerate() {
                        if coef == 0 {
                            continue;
                        }
                        let (t, u) = (idx / dc, idx % dc);
                        let prod = &a.structure_constants()[a_prime][t];
                        for (s, &p) in prod.iter().enumerate() {
                            if p != 0 {
                                let slot = &mut out[s * dc + u];
                                *slot = f.add(*slot, f.mul(coef, p));
                            }
                        }
                    }
                    out
                })
                .collect();
            Matrix::from_columns(f, n, &cols)
        })
        .collect();
    let carrier = Bimodule::new_unchecked(a.clone(), a.clone(), n, left_actions, right_actions)?;
    let one = a.unit();
    let lift_cols: Vec<Vec<u64>> = (0..n)
        .map(|col| {
            let (ai, c) = (col / dc, col % dc);
            let delta_c = coalg.delta_lift().col(c);
            let mut out = vec![0u64; n * n];
            for (idx, &coef) in delta_c.iter().enumerate() {
                if coef == 0 {
                    continue;
                }
                let (u, v) = (idx / dc, idx % dc);
                let left = kron_vec(f, &a.basis_vector(ai), &unit_vector(dc, u));
                let right = kron_vec(f, one, &unit_vector(dc, v));
                for (x, y) in out.iter_mut().zip(kron_vec(f, &left, &right)) {
                    *x = f.add(*x, f.mul(coef, y));
                }
            }
            out
        })
        .collect();
    let eps_c = coalg.counit();
    let counit = Matrix::from_fn(f, da, n, |row, col| {
        let (ai, c) = (col / dc, col % dc);
        if row == ai {
            eps_c.get(0, c)
        } else {
            0
        }
    });
    let coring = Coring::new_unchecked(a.clone(), Arc::new(carrier), Matrix::from_columns(f, n * n, &lift_cols), counit)?;
    let report = coring.check();
    Ok(if report.is_ok() { Ok(coring) } else { Err(report) })
}

/// `C1 (+) C2` with blockwise comultiplication and counit `(epsilon1, epsilon2)`.
pub fn direct_sum(c1: &Coring, c2: &Coring) -> Result<Coring> {
    if c1.algebra() != c2.algebra() {
        return Err(Error::AlgebraMismatch("direct sum of corings over different algebras".into()));
    }
    let f = c1.carrier().field();
    let (d1, d2) = (c1.dim(), c2.dim());
    let d = d1 + d2;
    let carrier = c1.carrier().direct_sum(c2.carrier())?;
    let mut lift = Matrix::zeros(f, d * d, d);
    for (offset, c) in [(0, c1), (d1, c2)] {
        let dc = c.dim();
        for k in 0..dc {
            for u in 0..dc {
                for v in 0..dc {
                    let x = c.delta_lift().get(u * dc + v, k);
                    if x != 0 {
                        lift.set((offset + u) * d + offset + v, offset + k, x);
                    }
                }
            }
        }
    }
    let counit = c1.counit().hstack(c2.counit());
    Coring::new_unchecked(c1.algebra().clone(), Arc::new(carrier), lift, counit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{cyclic_group_algebra, dual_numbers, matrix_algebra, scalar_embedding};
    use crate::bimodule::Side;
    use crate::linalg::Subspace;
    use crate::module_theory::is_projective;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn sweedler_over_the_whole_algebra_is_trivial() {
        let a = Arc::new(matrix_algebra(2, gf(3)));
        let id = AlgebraHom::new(a.clone(), a.clone(), Matrix::identity(gf(3), 4)).unwrap();
        let c = sweedler_coring(&id).unwrap();
        assert_eq!(c.dim(), 4);
        assert!(c.check().is_ok());
        let scalar = sweedler_coring(&scalar_embedding(&Arc::new(matrix_algebra(2, gf(3))))).unwrap();
        assert!(scalar.check().is_ok());
    }

    #[test]
    fn non_injective_inclusion_is_rejected() {
        let f = gf(2);
        let a = Arc::new(dual_numbers(f));
        // x -> 0, 1 -> 1: not injective (and not multiplicative problems aside)
        let hom = AlgebraHom::new(a.clone(), a.clone(), Matrix::from_i64_rows(f, &[&[1, 0], &[0, 0]])).unwrap();
        assert!(sweedler_coring(&hom).is_err());
    }

    #[test]
    fn triangular_corings() {
        let f = gf(2);
        let k = Arc::new(field_algebra(f));
        let c = triangular_coring(&k, &k, &Bimodule::regular(&k)).unwrap();
        assert_eq!(c.dim(), 2);
        assert_eq!(c.tensor().unwrap().dim(), 2);
        assert!(c.check().is_ok(), "{}", c.check());

        let r = Arc::new(dual_numbers(f));
        let one = Matrix::identity(f, 1);
        let b = Bimodule::new(r.clone(), k.clone(), 1, vec![one.clone(), Matrix::zeros(f, 1, 1)], vec![one]).unwrap();
        let c = triangular_coring(&r, &k, &b).unwrap();
        assert!(c.check().is_ok(), "{}", c.check());
        assert!(!is_projective(c.carrier(), Side::Left));

        let m2 = Arc::new(matrix_algebra(2, f));
        let column = Bimodule::new(m2.clone(), k.clone(), 2, (0..4).map(|i| {
            let (r, c) = (i / 2, i % 2);
            Matrix::from_fn(f, 2, 2, |x, y| u64::from(x == r && y == c))
        }).collect(), vec![Matrix::identity(f, 2)]).unwrap();
        let c = triangular_coring(&m2, &k, &column).unwrap();
        assert!(c.check().is_ok(), "{}", c.check());
    }

    #[test]
    fn entwinings() {
        let f = gf(3);
        let a = Arc::new(cyclic_group_algebra(2, f));
        // psi(x_h (x) 1) = 1 (x) x_h, psi(x_e (x) g) = g (x) x_t, psi(x_t (x) g) = g (x) x_e
        let coalg = grouplike_coalgebra(f, 2);
        let mut psi = Matrix::zeros(f, 4, 4);
        psi.set(0, 0, 1); // x_e (x) 1 -> 1 (x) x_e
        psi.set(1, 2, 1); // x_t (x) 1 -> 1 (x) x_t
        psi.set(3, 1, 1); // x_e (x) g -> g (x) x_t
        psi.set(2, 3, 1); // x_t (x) g -> g (x) x_e
        let e = EntwiningData { coalgebra: coalg.clone(), algebra: a.clone(), psi };
        let c = entwining_coring(&e).unwrap().unwrap();
        assert_eq!(c.dim(), 4);

        let k = Arc::new(field_algebra(f));
        let trivial = EntwiningData {
            coalgebra: trivial_coring(&k),
            algebra: a.clone(),
            psi: Matrix::identity(f, 2),
        };
        assert_eq!(entwining_coring(&trivial).unwrap().unwrap().dim(), 2);

        let random = Matrix::from_i64_rows(f, &[&[1, 2, 0, 1], &[0, 1, 1, 0], &[2, 0, 1, 1], &[1, 1, 0, 2]]);
        let bad = EntwiningData { coalgebra: coalg, algebra: a, psi: random };
        assert!(entwining_coring(&bad).unwrap().is_err());
    }

    #[test]
    fn direct_sum_summands_are_subcorings() {
        let f = gf(3);
        let t = trivial_coring(&Arc::new(matrix_algebra(2, f)));
        let s = direct_sum(&t, &t).unwrap();
        assert!(s.check().is_ok());
        let first = Subspace::from_vectors(f, 8, (0..4).map(|i| unit_vector(8, i)));
        let second = Subspace::from_vectors(f, 8, (4..8).map(|i| unit_vector(8, i)));
        assert!(s.is_subcoring(&first).unwrap());
        assert!(s.is_subcoring(&second).unwrap());
    }
}
