//! Exact dense linear algebra over prime fields.

mod echelon;
mod field;
mod matrix;
mod quotient;
mod subspace;

pub use echelon::Echelon;
pub use field::{is_prime, PrimeField, MAX_MODULUS};
pub use matrix::{combine, kron_vec, unit_vector, vec_add, vec_scale, vec_sub, Matrix};
pub use quotient::Quotient;
pub use subspace::Subspace;

/// Common kernel of several linear maps on `GF(p)^n`, computed by
/// restricting each successive constraint to the kernel found so far.
///
/// Returns the kernel as the columns of an `n x k` matrix.
pub fn joint_kernel<I>(field: PrimeField, n: usize, constraints: I) -> Matrix
where
    I: IntoIterator<Item = Matrix>,
{
    let mut basis = Matrix::identity(field, n);
    for c in constraints {
        assert_eq!(c.cols(), n, "constraint width mismatch");
        if basis.cols() == 0 {
            break;
        }
        let restricted = c.mul(&basis);
        let k = restricted.kernel();
        basis = basis.mul(&k.inclusion());
    }
    basis
}
