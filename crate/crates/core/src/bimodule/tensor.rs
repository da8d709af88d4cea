use super::Bimodule;
use crate::error::{Error, Result};
use crate::linalg::{kron_vec, Echelon, Matrix, Quotient, Subspace};

/// `M (x)_A N` as a quotient of Kronecker coordinates (`m_i (x) n_k` at `i*dim N + k`).
#[derive(Clone, Debug)]
pub struct Tensor {
    left_dim: usize,
    right_dim: usize,
    quotient: Quotient,
    carrier: Bimodule,
}

/// Apply `kron(a, b)` to a row-major `rows x cols` coordinate vector.
fn kron_apply(a: &Matrix, b: &Matrix, v: &[u64], rows: usize, cols: usize) -> Vec<u64> {
    let x = Matrix::unvectorize(a.field(), rows, cols, v);
    a.mul(&x).mul(&b.transpose()).vectorize()
}

fn kron_apply_left(a: &Matrix, v: &[u64], rows: usize, cols: usize) -> Vec<u64> {
    a.mul(&Matrix::unvectorize(a.field(), rows, cols, v)).vectorize()
}

fn kron_apply_right(b: &Matrix, v: &[u64], rows: usize, cols: usize) -> Vec<u64> {
    let x = Matrix::unvectorize(b.field(), rows, cols, v);
    x.mul(&b.transpose()).vectorize()
}

/// `M (x)_A N` for `M` with right `A`-action and `N` with left `A`-action.
///
/// The carrier keeps the left action of `M` and the right action of `N`.
pub fn tensor_over(m: &Bimodule, n: &Bimodule) -> Result<Tensor> {
    if m.right_algebra() != n.left_algebra() {
        return Err(Error::AlgebraMismatch("right algebra of M must be the left algebra of N".into()));
    }
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let a = m.right_algebra();
    let mut ech = Echelon::new(f, dm * dn);
    for g in a.generators() {
        let rm = m.right_act(g);
        let ln = n.left_act(g);
        for i in 0..dm {
            let mi = rm.col(i);
            for k in 0..dn {
                if ech.is_full() {
                    break;
                }
                let nk = ln.col(k);
                let mut v = vec![0u64; dm * dn];
                for (t, &c) in mi.iter().enumerate() {
                    if c != 0 {
                        v[t * dn + k] = c;
                    }
                }
                for (t, &c) in nk.iter().enumerate() {
                    let slot = &mut v[i * dn + t];
                    *slot = f.sub(*slot, c);
                }
                ech.insert(v);
            }
        }
    }
    let balancing = Subspace::from_echelon(&ech);
    let quotient = Quotient::new(balancing);
    let section_cols = quotient.section().columns();
    let induce = |apply: &dyn Fn(&[u64]) -> Vec<u64>| -> Matrix {
        let cols: Vec<Vec<u64>> = section_cols.iter().map(|c| quotient.project(&apply(c))).collect();
        Matrix::from_columns(f, quotient.dim(), &cols)
    };
    let left_actions = m
        .left_actions()
        .iter()
        .map(|l| induce(&|v| kron_apply_left(l, v, dm, dn)))
        .collect();
    let right_actions = n
        .right_actions()
        .iter()
        .map(|r| induce(&|v| kron_apply_right(r, v, dm, dn)))
        .collect();
    let carrier = Bimodule::new_unchecked(
        m.left_algebra().clone(),
        n.right_algebra().clone(),
        quotient.dim(),
        left_actions,
        right_actions,
    )?;
    Ok(Tensor { left_dim: dm, right_dim: dn, quotient, carrier })
}

impl Tensor {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    pub fn left_dim(&self) -> usize {
        self.left_dim
    }

    pub fn right_dim(&self) -> usize {
        self.right_dim
    }

    pub fn balancing(&self) -> &Subspace {
        self.quotient.kernel()
    }

    pub fn quotient(&self) -> &Quotient {
        &self.quotient
    }

    /// Projection from Kronecker coordinates onto the carrier.
    pub fn projection(&self) -> &Matrix {
        self.quotient.projection()
    }

    /// Chosen representatives: carrier coordinates to Kronecker coordinates.
    pub fn section(&self) -> &Matrix {
        self.quotient.section()
    }

    pub fn carrier(&self) -> &Bimodule {
        &self.carrier
    }

    pub fn project(&self, v: &[u64]) -> Vec<u64> {
        self.quotient.project(v)
    }

    pub fn lift(&self, x: &[u64]) -> Vec<u64> {
        self.quotient.lift(x)
    }

    /// Class of `m (x) n`.
    pub fn pure(&self, m: &[u64], n: &[u64]) -> Result<Vec<u64>> {
        if m.len() != self.left_dim || n.len() != self.right_dim {
            return Err(Error::DimensionMismatch(format!(
                "pure tensor of lengths {} and {} in a {}x{} product",
                m.len(),
                n.len(),
                self.left_dim,
                self.right_dim
            )));
        }
        Ok(self.project(&kron_vec(self.carrier.field(), m, n)))
    }

    /// `P . M` for a matrix `M` with Kronecker-coordinate columns.
    pub fn project_columns(&self, m: &Matrix) -> Matrix {
        let cols: Vec<Vec<u64>> = m.columns().iter().map(|c| self.project(c)).collect();
        Matrix::from_columns(m.field(), self.dim(), &cols)
    }
}

/// `f (x) g : M (x)_A N -> M' (x)_A N'`, failing if `kron(f, g)` does not
/// carry the balancing relations of `t1` into those of `t2`.
pub fn induced_map(t1: &Tensor, t2: &Tensor, f: &Matrix, g: &Matrix) -> Result<Matrix> {
    if f.cols() != t1.left_dim || g.cols() != t1.right_dim || f.rows() != t2.left_dim || g.rows() != t2.right_dim {
        return Err(Error::DimensionMismatch("factor maps do not match the tensor factors".into()));
    }
    let (r, c) = (t1.left_dim, t1.right_dim);
    for b in t1.balancing().basis_vectors() {
        if t2.project(&kron_apply(f, g, &b, r, c)).iter().any(|&x| x != 0) {
            return Err(Error::IllDefined("f (x) g does not preserve balanced tensors".into()));
        }
    }
    let cols: Vec<Vec<u64>> = t1
        .section()
        .columns()
        .iter()
        .map(|s| t2.project(&kron_apply(f, g, s, r, c)))
        .collect();
    Ok(Matrix::from_columns(f.field(), t2.dim(), &cols))
}

/// `M (x)_A N (x)_B P`, realized as `M (x)_A (N (x)_B P)`.
#[derive(Clone, Debug)]
pub struct TripleTensor {
    dims: (usize, usize, usize),
    inner: Tensor,
    outer: Tensor,
}

pub fn triple_tensor(m: &Bimodule, n: &Bimodule, p: &Bimodule) -> Result<TripleTensor> {
    let inner = tensor_over(n, p)?;
    let outer = tensor_over(m, inner.carrier())?;
    Ok(TripleTensor { dims: (m.dim(), n.dim(), p.dim()), inner, outer })
}

impl TripleTensor {
    pub fn dim(&self) -> usize {
        self.outer.dim()
    }

    pub fn factor_dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn carrier(&self) -> &Bimodule {
        self.outer.carrier()
    }

    /// Class of a vector in Kronecker coordinates `(i*dim N + k)*dim P + l`.
    pub fn project(&self, v: &[u64]) -> Vec<u64> {
        let (dm, dn, dp) = self.dims;
        assert_eq!(v.len(), dm * dn * dp, "triple tensor coordinate length");
        let block = dn * dp;
        let inner_dim = self.inner.dim();
        let mut mid = Vec::with_capacity(dm * inner_dim);
        for i in 0..dm {
            let chunk = &v[i * block..(i + 1) * block];
            if chunk.iter().all(|&x| x == 0) {
                mid.extend(std::iter::repeat_n(0, inner_dim));
            } else {
                mid.extend(self.inner.project(chunk));
            }
        }
        self.outer.project(&mid)
    }

    pub fn pure(&self, m: &[u64], n: &[u64], p: &[u64]) -> Vec<u64> {
        let f = self.carrier().field();
        self.project(&kron_vec(f, &kron_vec(f, m, n), p))
    }

    /// Canonical map `(M (x) N) (x) P -> triple`, with the source tensor built from scratch.
    pub fn coherence_from_left(&self, m: &Bimodule, n: &Bimodule, p: &Bimodule) -> Result<(Tensor, Matrix)> {
        let mn = tensor_over(m, n)?;
        let left = tensor_over(mn.carrier(), p)?;
        let (dmn, dp) = (mn.dim(), p.dim());
        let id = Matrix::identity(m.field(), dp);
        let cols: Vec<Vec<u64>> = left
            .section()
            .columns()
            .iter()
            .map(|s| self.project(&kron_apply(mn.section(), &id, s, dmn, dp)))
            .collect();
        let map = Matrix::from_columns(m.field(), self.dim(), &cols);
        Ok((left, map))
    }

    /// Canonical map `M (x) (N (x) P) -> triple`, with the source tensor built from scratch.
    pub fn coherence_from_right(&self, m: &Bimodule, n: &Bimodule, p: &Bimodule) -> Result<(Tensor, Matrix)> {
        let np = tensor_over(n, p)?;
        let right = tensor_over(m, np.carrier())?;
        let (dm, dnp) = (m.dim(), np.dim());
        let id = Matrix::identity(m.field(), dm);
        let cols: Vec<Vec<u64>> = right
            .section()
            .columns()
            .iter()
            .map(|s| self.project(&kron_apply(&id, np.section(), s, dm, dnp)))
            .collect();
        let map = Matrix::from_columns(m.field(), self.dim(), &cols);
        Ok((right, map))
    }
}

/// `A (x)_A M -> M`, `a (x) m -> a m`, with its inverse `m -> 1 (x) m`.
pub fn unit_iso_left(m: &Bimodule) -> Result<(Tensor, Matrix, Matrix)> {
    let a = m.left_algebra();
    let t = tensor_over(&Bimodule::regular(a), m)?;
    let f = m.field();
    let dm = m.dim();
    let forward_cols: Vec<Vec<u64>> = t
        .section()
        .columns()
        .iter()
        .map(|s| {
            let mut out = vec![0u64; dm];
            for (idx, &c) in s.iter().enumerate() {
                if c != 0 {
                    let v = m.left_action(idx / dm).col(idx % dm);
                    for (o, x) in out.iter_mut().zip(v) {
                        *o = f.add(*o, f.mul(c, x));
                    }
                }
            }
            out
        })
        .collect();
    let forward = Matrix::from_columns(f, dm, &forward_cols);
    let inverse_cols: Vec<Vec<u64>> = (0..dm)
        .map(|k| t.pure(a.unit(), &crate::linalg::unit_vector(dm, k)))
        .collect::<Result<_>>()?;
    let inverse = Matrix::from_columns(f, t.dim(), &inverse_cols);
    Ok((t, forward, inverse))
}

/// `M (x)_A A -> M`, `m (x) a -> m a`, with its inverse `m -> m (x) 1`.
pub fn unit_iso_right(m: &Bimodule) -> Result<(Tensor, Matrix, Matrix)> {
    let a = m.right_algebra();
    let t = tensor_over(m, &Bimodule::regular(a))?;
    let f = m.field();
    let (dm, da) = (m.dim(), a.dim());
    let forward_cols: Vec<Vec<u64>> = t
        .section()
        .columns()
        .iter()
        .map(|s| {
            let mut out = vec![0u64; dm];
            for (idx, &c) in s.iter().enumerate() {
                if c != 0 {
                    let v = m.right_action(idx % da).col(idx / da);
                    for (o, x) in out.iter_mut().zip(v) {
                        *o = f.add(*o, f.mul(c, x));
                    }
                }
            }
            out
        })
        .collect();
    let forward = Matrix::from_columns(f, dm, &forward_cols);
    let inverse_cols: Vec<Vec<u64>> = (0..dm)
        .map(|k| t.pure(&crate::linalg::unit_vector(dm, k), a.unit()))
        .collect::<Result<_>>()?;
    let inverse = Matrix::from_columns(f, t.dim(), &inverse_cols);
    Ok((t, forward, inverse))
}
