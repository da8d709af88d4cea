use super::field::PrimeField;
use super::matrix::Matrix;
use super::subspace::Subspace;

/// The quotient `GF(p)^n / W` with coordinates on the non-pivot columns of `W`.
///
/// `projection` has kernel exactly `W`; `section` embeds the quotient back
/// as the span of the non-pivot unit vectors, so `projection * section = I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    kernel: Subspace,
    projection: Matrix,
    section: Matrix,
    free: Vec<usize>,
}

impl Quotient {
    pub fn new(kernel: Subspace) -> Self {
        let f = kernel.field();
        let n = kernel.ambient_dim();
        let mut is_pivot = vec![false; n];
        for &c in kernel.pivots() {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let q = free.len();
        let mut projection = Matrix::zeros(f, q, n);
        for (t, &c) in free.iter().enumerate() {
            projection.set(t, c, 1);
        }
        // e_pivot is congruent to e_pivot - row, which lives on free columns
        for (r, &pc) in kernel.pivots().iter().enumerate() {
            let row = kernel.basis().row(r);
            for (t, &c) in free.iter().enumerate() {
                let x = row[c];
                if x != 0 {
                    projection.set(t, pc, f.neg(x));
                }
            }
        }
        let mut section = Matrix::zeros(f, n, q);
        for (t, &c) in free.iter().enumerate() {
            section.set(c, t, 1);
        }
        Self { kernel, projection, section, free }
    }

    pub fn field(&self) -> PrimeField {
        self.kernel.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.kernel.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    pub fn project(&self, v: &[u64]) -> Vec<u64> {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, x: &[u64]) -> Vec<u64> {
        self.section.mul_vec(x)
    }

    /// Induced endomorphism of the quotient; `None` if `map` does not preserve the kernel.
    pub fn induced_endomorphism(&self, map: &Matrix) -> Option<Matrix> {
        if !self.kernel.contains_subspace(&self.kernel.image(map)) {
            return None;
        }
        Some(self.projection.mul(map).mul(&self.section))
    }
}
