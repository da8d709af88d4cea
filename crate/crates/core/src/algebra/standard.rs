use std::sync::Arc;

use super::{Algebra, AlgebraHom, Ideal};
use crate::bimodule::Bimodule;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, PrimeField, Subspace};

fn table(dim: usize) -> Vec<Vec<Vec<u64>>> {
    vec![vec![vec![0; dim]; dim]; dim]
}

/// GF(p) as a one-dimensional algebra.
pub fn field_algebra(field: PrimeField) -> Algebra {
    Algebra::new_unchecked(field, vec![vec![vec![1]]], vec![1]).expect("1x1x1 table")
}

/// `M_n(GF(p))` on the matrix units, `E_ij` at index `i*n + j`.
pub fn matrix_algebra(n: usize, field: PrimeField) -> Algebra {
    assert!(n >= 1, "matrix algebra of size 0");
    let d = n * n;
    let mut mul = table(d);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                mul[i * n + j][j * n + l][i * n + l] = 1;
            }
        }
    }
    let mut unit = vec![0; d];
    for i in 0..n {
        unit[i * n + i] = 1;
    }
    let names = (0..d).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
    Algebra::new_unchecked(field, mul, unit)
        .and_then(|a| a.with_basis_names(names))
        .expect("matrix unit table")
}

/// `GF(p)[x]/(x^n)` on the monomials `1, x, ..., x^(n-1)`.
pub fn truncated_polynomials(n: usize, field: PrimeField) -> Algebra {
    assert!(n >= 1, "truncation degree 0");
    let mut mul = table(n);
    for i in 0..n {
        for j in 0..n - i {
            mul[i][j][i + j] = 1;
        }
    }
    let mut unit = vec![0; n];
    unit[0] = 1;
    let names = (0..n).map(|k| format!("x^{k}")).collect();
    Algebra::new_unchecked(field, mul, unit)
        .and_then(|a| a.with_basis_names(names))
        .expect("monomial table")
}

/// `GF(p)[x]/(x^2)`.
pub fn dual_numbers(field: PrimeField) -> Algebra {
    truncated_polynomials(2, field)
}

/// The group algebra of the cyclic group of order `n`, on `1, g, ..., g^(n-1)`.
pub fn cyclic_group_algebra(n: usize, field: PrimeField) -> Algebra {
    assert!(n >= 1, "cyclic group of order 0");
    let mut mul = table(n);
    for i in 0..n {
        for j in 0..n {
            mul[i][j][(i + j) % n] = 1;
        }
    }
    let mut unit = vec![0; n];
    unit[0] = 1;
    let names = (0..n).map(|k| format!("g^{k}")).collect();
    Algebra::new_unchecked(field, mul, unit)
        .and_then(|a| a.with_basis_names(names))
        .expect("group table")
}

/// Componentwise product `A1 x A2`, basis of `A1` first.
pub fn product(a1: &Algebra, a2: &Algebra) -> Algebra {
    assert_eq!(a1.field(), a2.field(), "product of algebras over different fields");
    let (n1, n2) = (a1.dim(), a2.dim());
    let d = n1 + n2;
    let mut mul = table(d);
    for i in 0..n1 {
        for j in 0..n1 {
            mul[i][j][..n1].copy_from_slice(&a1.structure_constants()[i][j]);
        }
    }
    for i in 0..n2 {
        for j in 0..n2 {
            mul[n1 + i][n1 + j][n1..].copy_from_slice(&a2.structure_constants()[i][j]);
        }
    }
    let mut unit = a1.unit().to_vec();
    unit.extend_from_slice(a2.unit());
    Algebra::new_unchecked(a1.field(), mul, unit).expect("block table")
}

/// Upper-triangular 2x2 matrices on `E11, E12, E22`.
pub fn upper_triangular(field: PrimeField) -> Algebra {
    let k = Arc::new(field_algebra(field));
    let b = Bimodule::regular(&k);
    let (a, _) = triangular_algebra(&k, &k, &b).expect("regular bimodule");
    Arc::try_unwrap(a).unwrap_or_else(|a| (*a).clone())
}

/// `[[R, B], [0, S]]` on the basis of `R`, then `B`, then `S`, together with
/// the ideal `[[R, B], [0, 0]]`.
pub fn triangular_algebra(r: &Arc<Algebra>, s: &Arc<Algebra>, b: &Bimodule) -> Result<(Arc<Algebra>, Ideal)> {
    if b.left_algebra().as_ref() != r.as_ref() || b.right_algebra().as_ref() != s.as_ref() {
        return Err(Error::AlgebraMismatch("bimodule must be over (R, S)".into()));
    }
    let report = b.check();
    if !report.is_ok() {
        return Err(Error::InvalidModule(report.to_string()));
    }
    let (nr, nb, ns) = (r.dim(), b.dim(), s.dim());
    let d = nr + nb + ns;
    let mut mul = table(d);
    for i in 0..nr {
        for j in 0..nr {
            mul[i][j][..nr].copy_from_slice(&r.structure_constants()[i][j]);
        }
        for k in 0..nb {
            let v = b.left_action(i).col(k);
            mul[i][nr + k][nr..nr + nb].copy_from_slice(&v);
        }
    }
    for j in 0..ns {
        for k in 0..nb {
            let v = b.right_action(j).col(k);
            mul[nr + k][nr + nb + j][nr..nr + nb].copy_from_slice(&v);
        }
        for i in 0..ns {
            mul[nr + nb + i][nr + nb + j][nr + nb..].copy_from_slice(&s.structure_constants()[i][j]);
        }
    }
    let mut unit = r.unit().to_vec();
    unit.extend(std::iter::repeat_n(0, nb));
    unit.extend_from_slice(s.unit());
    let a = Arc::new(Algebra::new(r.field(), mul, unit)?);
    let space = Subspace::from_vectors(r.field(), d, (0..nr + nb).map(|i| a.basis_vector(i)));
    let ideal = Ideal::new(a.clone(), space)?;
    Ok((a, ideal))
}

/// The structure map `GF(p) -> A`.
pub fn scalar_embedding(a: &Arc<Algebra>) -> AlgebraHom {
    let k = Arc::new(field_algebra(a.field()));
    let m = Matrix::from_columns(a.field(), a.dim(), &[a.unit().to_vec()]);
    AlgebraHom::new(k, a.clone(), m).expect("unit spans a subalgebra")
}

/// Diagonal matrices inside `M_n(GF(p))`, as the inclusion homomorphism.
pub fn diagonal_embedding(n: usize, field: PrimeField) -> AlgebraHom {
    let m = Arc::new(matrix_algebra(n, field));
    let s = Subspace::from_vectors(field, n * n, (0..n).map(|i| m.basis_vector(i * n + i)));
    let (_, hom) = m.subalgebra(&s).expect("diagonal matrices form a subalgebra");
    hom
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn standard_tables_are_valid() {
        let f = gf(3);
        for a in [
            field_algebra(f),
            matrix_algebra(3, f),
            truncated_polynomials(3, f),
            cyclic_group_algebra(4, f),
            product(&dual_numbers(f), &matrix_algebra(2, f)),
            upper_triangular(f),
        ] {
            assert!(a.check().is_ok());
        }
    }

    #[test]
    fn triangular_over_the_field() {
        let f = gf(2);
        let k = Arc::new(field_algebra(f));
        let (a, ideal) = triangular_algebra(&k, &k, &Bimodule::regular(&k)).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(ideal.dim(), 2);
        // E11 E12 = E12, E12 E22 = E12, E12 E11 = 0
        assert_eq!(a.mul_elems(&a.basis_vector(0), &a.basis_vector(1)), a.basis_vector(1));
        assert_eq!(a.mul_elems(&a.basis_vector(1), &a.basis_vector(2)), a.basis_vector(1));
        assert_eq!(a.mul_elems(&a.basis_vector(1), &a.basis_vector(0)), a.zero());
    }

    #[test]
    fn triangular_with_dual_numbers() {
        let f = gf(2);
        let r = Arc::new(dual_numbers(f));
        let k = Arc::new(field_algebra(f));
        // x acts as 0 on B = GF(2)
        let one = Matrix::identity(f, 1);
        let b = Bimodule::new(r.clone(), k.clone(), 1, vec![one.clone(), Matrix::zeros(f, 1, 1)], vec![one]).unwrap();
        let (a, ideal) = triangular_algebra(&r, &k, &b).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(ideal.dim(), 3);
    }

    #[test]
    fn zero_bimodule_gives_the_product() {
        let f = gf(3);
        let r = Arc::new(matrix_algebra(2, f));
        let s = Arc::new(dual_numbers(f));
        let b = Bimodule::new(r.clone(), s.clone(), 0, vec![Matrix::zeros(f, 0, 0); 4], vec![Matrix::zeros(f, 0, 0); 2])
            .unwrap();
        let (a, _) = triangular_algebra(&r, &s, &b).unwrap();
        assert_eq!(*a, product(&r, &s));
    }

    #[test]
    fn diagonal_is_a_subalgebra() {
        let hom = diagonal_embedding(2, gf(3));
        assert_eq!(hom.source().dim(), 2);
        assert!(hom.is_injective());
        assert!(hom.source().is_commutative());
    }
}
