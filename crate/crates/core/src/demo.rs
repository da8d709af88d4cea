//! Ready-made corings: Sweedler, trivial, triangular, entwined and direct sums.

use std::sync::Arc;

use crate::algebra::{
    cyclic_group_algebra, diagonal_embedding, dual_numbers, field_algebra, matrix_algebra, product, scalar_embedding,
    truncated_polynomials, upper_triangular, Algebra, AlgebraHom,
};
use crate::bimodule::Bimodule;
use crate::coring::{
    direct_sum, entwining_coring, grouplike_coalgebra, sweedler_coring, triangular_coring, trivial_coring, Coring,
    EntwiningData,
};
use crate::error::{Error, Result};
use crate::linalg::{unit_vector, Matrix, PrimeField, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subring {
    Scalar,
    Diagonal,
    Full,
}

impl std::str::FromStr for Subring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "scalar" => Ok(Subring::Scalar),
            "diag" | "diagonal" => Ok(Subring::Diagonal),
            "full" => Ok(Subring::Full),
            _ => Err(Error::Precondition(format!("unknown subring '{s}' (scalar, diag, full)"))),
        }
    }
}

/// `B -> M_n(GF(p))` for the named subring.
pub fn subring_inclusion(n: usize, field: PrimeField, subring: Subring) -> Result<AlgebraHom> {
    let a = Arc::new(matrix_algebra(n, field));
    match subring {
        Subring::Scalar => Ok(scalar_embedding(&a)),
        Subring::Diagonal => Ok(diagonal_embedding(n, field)),
        Subring::Full => AlgebraHom::new(a.clone(), a.clone(), Matrix::identity(field, n * n)),
    }
}

pub fn sweedler(n: usize, field: PrimeField, subring: Subring) -> Result<Coring> {
    sweedler_coring(&subring_inclusion(n, field, subring)?)
}

/// Algebras by name: `field`, `dual-numbers`, `matrix`, `upper-triangular`,
/// `product` (`K x K`), `cyclic` and `truncated` (the last two of order `n`).
pub fn named_algebra(name: &str, n: usize, field: PrimeField) -> Result<Algebra> {
    Ok(match name {
        "field" => field_algebra(field),
        "dual-numbers" => dual_numbers(field),
        "matrix" => matrix_algebra(n, field),
        "upper-triangular" => upper_triangular(field),
        "product" => product(&field_algebra(field), &field_algebra(field)),
        "cyclic" => cyclic_group_algebra(n, field),
        "truncated" => truncated_polynomials(n, field),
        _ => return Err(Error::Precondition(format!("unknown algebra '{name}'"))),
    })
}

pub fn trivial(name: &str, n: usize, field: PrimeField) -> Result<Coring> {
    Ok(trivial_coring(&Arc::new(named_algebra(name, n, field)?)))
}

/// The ideal `[[R, B], [0, 0]]` of `[[R, B], [0, K]]` with `B = K`, for
/// `R = K` or the dual numbers; `x` acts on `B` as zero.
pub fn triangular(r_name: &str, field: PrimeField) -> Result<Coring> {
    if !matches!(r_name, "field" | "dual-numbers") {
        return Err(Error::Precondition(format!("R must be 'field' or 'dual-numbers', not '{r_name}'")));
    }
    let r = Arc::new(named_algebra(r_name, 2, field)?);
    let k = Arc::new(field_algebra(field));
    let one = Matrix::identity(field, 1);
    let left: Vec<Matrix> =
        (0..r.dim()).map(|i| one.scale(u64::from(r.basis_vector(i) == r.unit()))).collect();
    let b = Bimodule::new(r.clone(), k.clone(), 1, left, vec![one])?;
    triangular_coring(&r, &k, &b)
}

/// Two entwined corings over `GF(p)[C_2]`: the grouplike coalgebra on two
/// points with `psi` swapping idempotent-like basis elements, and the base field.
pub fn entwined(instance: usize, field: PrimeField) -> Result<Coring> {
    let a = Arc::new(cyclic_group_algebra(2, field));
    let data = match instance {
        0 => {
            let mut psi = Matrix::zeros(field, 4, 4);
            psi.set(0, 0, 1);
            psi.set(1, 2, 1);
            psi.set(3, 1, 1);
            psi.set(2, 3, 1);
            EntwiningData { coalgebra: grouplike_coalgebra(field, 2), algebra: a, psi }
        }
        1 => EntwiningData {
            coalgebra: trivial_coring(&Arc::new(field_algebra(field))),
            algebra: a,
            psi: Matrix::identity(field, 2),
        },
        _ => return Err(Error::Precondition("entwining instances are 0 and 1".into())),
    };
    entwining_coring(&data)?.map_err(|r| Error::InvalidCoring(r.to_string()))
}

/// Over `A = K x K`: the Sweedler coring `A (x)_K A` plus the one-dimensional
/// subcoring `K e_1` of the trivial coring. The two summands are simple with
/// simple comodules of dimensions 2 and 1.
pub fn two_simple_sum(field: PrimeField) -> Result<Coring> {
    let a = Arc::new(product(&field_algebra(field), &field_algebra(field)));
    let sweedler = sweedler_coring(&scalar_embedding(&a))?;
    let t = trivial_coring(&a);
    let e1 = t.subcoring(&Subspace::from_vectors(field, 2, [unit_vector(2, 0)]))?;
    direct_sum(&sweedler, &e1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn demos_are_valid_corings() {
        let f3 = PrimeField::new(3).unwrap();
        let f2 = PrimeField::new(2).unwrap();
        let cs = [
            sweedler(2, f3, Subring::Diagonal).unwrap(),
            trivial("dual-numbers", 2, f2).unwrap(),
            triangular("field", f2).unwrap(),
            triangular("dual-numbers", f2).unwrap(),
            entwined(0, f3).unwrap(),
            entwined(1, f3).unwrap(),
            two_simple_sum(f3).unwrap(),
        ];
        for c in &cs {
            assert!(c.check().is_ok(), "{}", c.check());
        }
        assert_eq!(cs[0].dim(), 8);
        assert_eq!(cs[6].dim(), 5);
    }
}
