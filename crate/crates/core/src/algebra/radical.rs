use std::sync::Arc;

use super::{Algebra, Ideal};
use crate::linalg::{Matrix, Subspace};
use crate::module_theory::{composition_factors, composition_series};

const SERIES_SEED: u64 = 0x5eed_0001;

/// The Jacobson radical.
///
/// Uses the trace form when `p > dim`; otherwise annihilates every
/// composition factor of the left regular module.
pub fn radical(a: &Arc<Algebra>) -> Ideal {
    Ideal { parent: a.clone(), space: a.radical_space().clone() }
}

pub(crate) fn radical_space(a: &Algebra) -> Subspace {
    if a.p() > a.dim() as u64 {
        radical_by_trace_form(a)
    } else {
        radical_by_composition_series(a)
    }
}

/// `{x : tr(L_{xy}) = 0 for all y}`; equals the radical only when `p > dim`.
pub fn radical_by_trace_form(a: &Algebra) -> Subspace {
    let f = a.field();
    let n = a.dim();
    let traces: Vec<u64> = (0..n).map(|k| trace(a.left_regular(k))).collect();
    let gram = Matrix::from_fn(f, n, n, |i, j| {
        let prod = &a.structure_constants()[i][j];
        prod.iter().zip(&traces).fold(0, |acc, (&c, &t)| f.add(acc, f.mul(c, t)))
    });
    // Gram is symmetric in the sense tr(L_{xy}) = tr(L_x L_y) = tr(L_{yx})
    gram.transpose().kernel()
}

/// Intersection of the annihilators of the factors of a composition series
/// of the left regular module, valid in every characteristic.
pub fn radical_by_composition_series(a: &Algebra) -> Subspace {
    let f = a.field();
    let n = a.dim();
    if n == 0 {
        return Subspace::zero(f, 0);
    }
    let series = composition_series(f, n, a.left_regular_all(), SERIES_SEED)
        .expect("regular module composition series within budget");
    let factors = composition_factors(f, &series, a.left_regular_all());
    // x is in the radical iff sum_i x_i F_i = 0 on every factor
    let rows: usize = factors.iter().map(|fs| fs[0].rows() * fs[0].cols()).sum();
    let constraint = Matrix::from_fn(f, rows, n, |r, i| {
        let mut r = r;
        for fs in &factors {
            let size = fs[i].rows() * fs[i].cols();
            if r < size {
                return fs[i].data()[r];
            }
            r -= size;
        }
        unreachable!()
    });
    constraint.kernel()
}

fn trace(m: &Matrix) -> u64 {
    let f = m.field();
    (0..m.rows()).fold(0, |acc, i| f.add(acc, m.get(i, i)))
}
