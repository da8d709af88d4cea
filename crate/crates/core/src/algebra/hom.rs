use std::sync::Arc;

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A unital algebra homomorphism, stored as a `dim target x dim source` matrix.
///
/// Antimorphisms `B -> C` are represented as homomorphisms `B -> C^op`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraHom {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    matrix: Matrix,
}

impl AlgebraHom {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "homomorphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        if matrix.mul_vec(source.unit()) != target.unit() {
            return Err(Error::InvalidAlgebra("homomorphism does not preserve the unit".into()));
        }
        let images = matrix.columns();
        for i in 0..source.dim() {
            for j in 0..source.dim() {
                let lhs = matrix.mul_vec(&source.structure_constants()[i][j]);
                let rhs = target.mul_elems(&images[i], &images[j]);
                if lhs != rhs {
                    return Err(Error::InvalidAlgebra(format!(
                        "homomorphism is not multiplicative on (e{i}, e{j})"
                    )));
                }
            }
        }
        Ok(Self { source, target, matrix })
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        self.matrix.mul_vec(x)
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn compose(&self, after: &AlgebraHom) -> Result<AlgebraHom> {
        if after.source.as_ref() != self.target.as_ref() {
            return Err(Error::AlgebraMismatch("composable homomorphisms".into()));
        }
        Ok(AlgebraHom {
            source: self.source.clone(),
            target: after.target.clone(),
            matrix: after.matrix.mul(&self.matrix),
        })
    }
}
