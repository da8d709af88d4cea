//! Hom spaces, projectivity, simple submodules, socles and isotypic parts.
//!
//! Every operation treats a [`Bimodule`] as a module over all of its declared
//! actions; use [`Bimodule::forget`] to study one side only.

mod meataxe;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use meataxe::{composition_factors, composition_series, find_simple_subspace, is_irreducible_action, spin};

use crate::bimodule::{Bimodule, Side};
use crate::error::{Error, Result};
use crate::linalg::{combine, joint_kernel, Matrix, PrimeField, Subspace};

const ISO_RANDOM_TRIALS: usize = 64;
const ISO_EXHAUSTIVE_BUDGET: u64 = 1 << 17;

/// All module maps `M -> N`, as matrices forming a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub source_dim: usize,
    pub target_dim: usize,
    pub basis: Vec<Matrix>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn combination(&self, field: PrimeField, coeffs: &[u64]) -> Matrix {
        combine(field, self.target_dim, self.source_dim, coeffs, &self.basis)
    }
}

fn same_algebras(m: &Bimodule, n: &Bimodule) -> Result<()> {
    if m.left_algebra() != n.left_algebra() || m.right_algebra() != n.right_algebra() {
        return Err(Error::AlgebraMismatch("modules over different algebras".into()));
    }
    Ok(())
}

/// Matrices of a generating set of each acting algebra, paired for `m` and `n`.
fn generator_actions(m: &Bimodule, n: &Bimodule) -> Vec<(Matrix, Matrix)> {
    let mut out = Vec::new();
    for side in [Side::Left, Side::Right] {
        for g in m.algebra(side).generators() {
            out.push((m.act(side, g), n.act(side, g)));
        }
    }
    out
}

/// Intertwiners `X` with `X A = B X`, as the kernel of
/// `(I (x) A^T - B (x) I) vec(X)` over generators of the acting algebras.
pub fn hom_space(m: &Bimodule, n: &Bimodule) -> Result<HomSpace> {
    same_algebras(m, n)?;
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let constraints = generator_actions(m, n)
        .into_iter()
        .map(|(a, b)| Matrix::identity(f, dn).kron(&a.transpose()).sub(&b.kron(&Matrix::identity(f, dm))));
    let kernel = joint_kernel(f, dn * dm, constraints);
    let basis = kernel
        .columns()
        .iter()
        .map(|v| Matrix::unvectorize(f, dn, dm, v))
        .collect();
    Ok(HomSpace { source_dim: dm, target_dim: dn, basis })
}

/// Greedy list of elements whose submodules together give all of `m`.
pub fn generating_set(m: &Bimodule) -> Vec<Vec<u64>> {
    let mut gens: Vec<Vec<u64>> = Vec::new();
    let mut span = Subspace::zero(m.field(), m.dim());
    for i in 0..m.dim() {
        if span.is_full() {
            break;
        }
        let e = crate::linalg::unit_vector(m.dim(), i);
        if !span.contains(&e) {
            gens.push(e);
            span = m.submodule_generated(&gens);
        }
    }
    gens
}

/// Whether `m` is projective as a module over the algebra acting on `side`.
///
/// For finite-dimensional modules over artinian rings flat and projective
/// coincide, so this also decides flatness. The test looks for an `A`-linear
/// section of the cover `A^k -> M` sending the `j`-th unit to the `j`-th
/// generator: a combination `sum c_t pi phi_t = id` over a basis `phi_t` of
/// `Hom_A(M, A^k)`.
pub fn is_projective(m: &Bimodule, side: Side) -> bool {
    projective_section(m, side).is_some()
}

/// A section `M -> A^k` of the generator cover, when `m` is projective on `side`.
pub fn projective_section(m: &Bimodule, side: Side) -> Option<(Vec<Vec<u64>>, Matrix)> {
    let f = m.field();
    let one_sided = m.forget(side);
    let a = m.algebra(side);
    let gens = generating_set(&one_sided);
    if gens.is_empty() {
        return Some((gens, Matrix::zeros(f, 0, 0)));
    }
    let reg = Bimodule::regular(a).forget(side);
    let mut free = reg.clone();
    for _ in 1..gens.len() {
        free = free.direct_sum(&reg).expect("same algebras");
    }
    let da = a.dim();
    let cover_cols: Vec<Vec<u64>> = (0..gens.len() * da)
        .map(|c| {
            let (j, i) = (c / da, c % da);
            m.actions(side)[i].mul_vec(&gens[j])
        })
        .collect();
    let cover = Matrix::from_columns(f, m.dim(), &cover_cols);
    let homs = hom_space(&one_sided, &free).expect("same algebras");
    if homs.is_zero() {
        return if m.dim() == 0 { Some((gens, Matrix::zeros(f, 0, 0))) } else { None };
    }
    let n2 = m.dim() * m.dim();
    let system_cols: Vec<Vec<u64>> = homs.basis.iter().map(|phi| cover.mul(phi).vectorize()).collect();
    let system = Matrix::from_columns(f, n2, &system_cols);
    let coeffs = system.solve(&Matrix::identity(f, m.dim()).vectorize())?;
    Some((gens, homs.combination(f, &coeffs)))
}

/// A nonzero submodule with no proper nonzero submodule.
pub fn simple_submodule(m: &Bimodule, seed: u64) -> Result<Subspace> {
    find_simple_subspace(m.field(), m.dim(), &m.acting_matrices(), seed)
}

pub fn is_simple_module(m: &Bimodule, seed: u64) -> Result<bool> {
    is_irreducible_action(m.field(), m.dim(), &m.acting_matrices(), seed)
}

/// `{v : rad(L) v = 0 and v rad(R) = 0}`, the largest semisimple submodule.
///
/// Over a perfect field `rad(L (x) R^op) = rad L (x) R^op + L (x) rad R^op`,
/// so annihilating both radicals separately suffices.
pub fn socle(m: &Bimodule) -> Subspace {
    let f = m.field();
    let n = m.dim();
    let mut constraints = Vec::new();
    for side in [Side::Left, Side::Right] {
        for r in m.algebra(side).radical_space().basis_vectors() {
            constraints.push(m.act(side, &r));
        }
    }
    Subspace::from_vectors(f, n, joint_kernel(f, n, constraints).columns())
}

pub fn is_semisimple_module(m: &Bimodule) -> bool {
    socle(m).is_full()
}

/// Outcome of an isomorphism search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isomorphism {
    Found(Matrix),
    None,
    /// The hom space was too large to rule out an invertible element.
    Indeterminate,
}

impl Isomorphism {
    pub fn is_found(&self) -> bool {
        matches!(self, Isomorphism::Found(_))
    }
}

/// Searches `Hom(M, N)` for an invertible element: random combinations
/// first, then every combination while the count stays within budget.
pub fn modules_isomorphic(m: &Bimodule, n: &Bimodule, seed: u64) -> Result<Isomorphism> {
    same_algebras(m, n)?;
    if m.dim() != n.dim() {
        return Ok(Isomorphism::None);
    }
    let f = m.field();
    if m.dim() == 0 {
        return Ok(Isomorphism::Found(Matrix::zeros(f, 0, 0)));
    }
    let homs = hom_space(m, n)?;
    let k = homs.dim();
    if k == 0 {
        return Ok(Isomorphism::None);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ISO_RANDOM_TRIALS {
        let coeffs: Vec<u64> = (0..k).map(|_| rng.gen_range(0..f.p())).collect();
        let x = homs.combination(f, &coeffs);
        if x.is_invertible() {
            return Ok(Isomorphism::Found(x));
        }
    }
    let total = (f.p() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if total > ISO_EXHAUSTIVE_BUDGET as u128 {
        return Ok(Isomorphism::Indeterminate);
    }
    let mut coeffs = vec![0u64; k];
    loop {
        let x = homs.combination(f, &coeffs);
        if x.is_invertible() {
            return Ok(Isomorphism::Found(x));
        }
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(Isomorphism::None);
            }
            coeffs[pos] += 1;
            if coeffs[pos] < f.p() {
                break;
            }
            coeffs[pos] = 0;
            pos += 1;
        }
    }
}

/// One isomorphism class of simple submodules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleType {
    /// A simple submodule of this type.
    pub representative: Subspace,
    pub multiplicity: usize,
}

/// The socle split by isomorphism type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub simples: Vec<SimpleType>,
    pub isotypic: Vec<Subspace>,
    pub socle: Subspace,
    pub is_semisimple: bool,
}

/// Isotypic components of the socle: for each simple type `T`, the sum of
/// the images of all maps `T -> M`.
pub fn isotypic_decomposition(m: &Bimodule, seed: u64) -> Result<DecompositionReport> {
    let f = m.field();
    let n = m.dim();
    let soc = socle(m);
    let soc_module = m.submodule(&soc)?;
    let mut covered = Subspace::zero(f, n);
    let mut simples = Vec::new();
    let mut isotypic = Vec::new();
    let mut round = 0u64;
    while covered.dim() < soc.dim() {
        // a simple type not yet covered, found in socle / covered
        let covered_in_soc = Subspace::from_vectors(
            f,
            soc.dim(),
            covered.basis_vectors().iter().map(|v| soc.coordinates(v).expect("covered lies in the socle")),
        );
        let (rest, _) = soc_module.quotient_module(&covered_in_soc)?;
        let t = simple_submodule(&rest, seed.wrapping_add(round))?;
        let t_module = rest.submodule(&t)?;
        let homs = hom_space(&t_module, m)?;
        let component = Subspace::from_vectors(
            f,
            n,
            homs.basis.iter().flat_map(|h| h.columns()),
        );
        let representative = homs
            .basis
            .first()
            .map(|h| Subspace::from_vectors(f, n, h.columns()))
            .ok_or_else(|| Error::InternalDisagreement("simple subquotient of the socle has no map back".into()))?;
        if !component.dim().is_multiple_of(t.dim()) || covered.intersect(&component)?.dim() != 0 {
            return Err(Error::InternalDisagreement("isotypic components overlap".into()));
        }
        simples.push(SimpleType { representative, multiplicity: component.dim() / t.dim() });
        covered = covered.sum(&component)?;
        isotypic.push(component);
        round += 1;
    }
    let is_semisimple = soc.is_full();
    Ok(DecompositionReport { simples, isotypic, socle: soc, is_semisimple })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{dual_numbers, field_algebra, matrix_algebra, product, upper_triangular};
    use std::sync::Arc;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn left_regular(a: &Arc<crate::algebra::Algebra>) -> Bimodule {
        Bimodule::regular(a).forget(Side::Left)
    }

    #[test]
    fn hom_of_regular_modules() {
        let a = Arc::new(matrix_algebra(2, gf(3)));
        let m = Bimodule::regular(&a).forget(Side::Right);
        let h = hom_space(&m, &m).unwrap();
        assert_eq!(h.dim(), 4);
        assert!(Subspace::from_vectors(gf(3), 16, h.basis.iter().map(Matrix::vectorize))
            .contains(&Matrix::identity(gf(3), 4).vectorize()));
    }

    #[test]
    fn simples_of_the_triangular_algebra() {
        let f = gf(3);
        let a = Arc::new(upper_triangular(f));
        // S1: E11 acts as 1; S2: E22 acts as 1; E12 acts as 0 on both
        let s1 = Bimodule::left_module(a.clone(), 1, vec![Matrix::identity(f, 1), Matrix::zeros(f, 1, 1), Matrix::zeros(f, 1, 1)]).unwrap();
        let s2 = Bimodule::left_module(a.clone(), 1, vec![Matrix::zeros(f, 1, 1), Matrix::zeros(f, 1, 1), Matrix::identity(f, 1)]).unwrap();
        assert!(hom_space(&s1, &s2).unwrap().is_zero());
        assert_eq!(modules_isomorphic(&s1, &s2, 0).unwrap(), Isomorphism::None);
        assert!(modules_isomorphic(&s1, &s1, 0).unwrap().is_found());
    }

    #[test]
    fn conjugated_module_is_isomorphic() {
        let f = gf(3);
        let a = Arc::new(matrix_algebra(2, f));
        let m = left_regular(&a);
        let phi = Matrix::from_i64_rows(f, &[&[1, 1, 0, 0], &[0, 1, 0, 2], &[1, 0, 1, 0], &[0, 0, 0, 1]]);
        let n = m.conjugate(&phi).unwrap();
        assert!(n.check().is_ok());
        assert!(modules_isomorphic(&m, &n, 5).unwrap().is_found());
    }

    #[test]
    fn projectivity() {
        let f = gf(2);
        let a = Arc::new(dual_numbers(f));
        assert!(is_projective(&left_regular(&a), Side::Left));
        let reg = left_regular(&a);
        let free3 = reg.direct_sum(&reg).unwrap().direct_sum(&reg).unwrap();
        assert!(is_projective(&free3, Side::Left));
        let trivial = Bimodule::left_module(a, 1, vec![Matrix::identity(f, 1), Matrix::zeros(f, 1, 1)]).unwrap();
        assert!(!is_projective(&trivial, Side::Left));
    }

    #[test]
    fn simple_submodules_and_socles() {
        let f = gf(3);
        let m2 = Arc::new(matrix_algebra(2, f));
        let s = simple_submodule(&left_regular(&m2), 11).unwrap();
        assert_eq!(s.dim(), 2);
        let d = Arc::new(dual_numbers(gf(2)));
        assert_eq!(simple_submodule(&left_regular(&d), 11).unwrap(), Subspace::from_vectors(gf(2), 2, vec![vec![0, 1]]));
        assert_eq!(socle(&left_regular(&d)).dim(), 1);
        assert!(socle(&left_regular(&m2)).is_full());
        let k = Arc::new(field_algebra(f));
        let zero = Bimodule::left_module(k, 0, vec![Matrix::zeros(f, 0, 0)]).unwrap();
        assert!(socle(&zero).is_zero());
        assert!(simple_submodule(&zero, 0).is_err());
    }

    #[test]
    fn isotypic_parts() {
        let f = gf(3);
        let m2 = Arc::new(matrix_algebra(2, f));
        let r = isotypic_decomposition(&left_regular(&m2), 1).unwrap();
        assert_eq!(r.simples.len(), 1);
        assert_eq!(r.simples[0].multiplicity, 2);
        assert!(r.is_semisimple);
        let split = Arc::new(product(&field_algebra(f), &field_algebra(f)));
        let r = isotypic_decomposition(&left_regular(&split), 1).unwrap();
        assert_eq!(r.simples.iter().map(|s| s.multiplicity).collect::<Vec<_>>(), vec![1, 1]);
        let t = Arc::new(upper_triangular(f));
        let r = isotypic_decomposition(&left_regular(&t), 1).unwrap();
        assert!(!r.is_semisimple);
        let total: usize = r.isotypic.iter().map(Subspace::dim).sum();
        assert_eq!(total, r.socle.dim());
    }
}
