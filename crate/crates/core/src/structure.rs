//! Semisimplicity and simplicity of corings, and the decomposition of a
//! semisimple coring into simple subcorings.

use std::sync::Arc;

use serde::Serialize;

use crate::bimodule::{Bimodule, Side};
use crate::comodule::{comodule_isotypic, simple_subcomodule, Comodule};
use crate::coring::Coring;
use crate::error::{Error, Result};
use crate::linalg::{combine, Matrix, Subspace};
use crate::module_theory::{hom_space, is_irreducible_action, is_semisimple_module, socle};

const STRUCTURE_SEED: u64 = 0x5eed_0002;

/// One labelled condition of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clause {
    pub name: String,
    pub value: bool,
    /// Binding clauses are required to coincide; the others are reported only.
    pub binding: bool,
}

fn clause(name: &str, value: bool, binding: bool) -> Clause {
    Clause { name: name.into(), value, binding }
}

fn agree(clauses: &[Clause]) -> Result<bool> {
    let mut binding = clauses.iter().filter(|c| c.binding);
    let first = binding.next().is_some_and(|c| c.value);
    if let Some(c) = binding.find(|c| c.value != first) {
        return Err(Error::InternalDisagreement(format!(
            "equivalent conditions differ: {} is {}, expected {first}",
            c.name, c.value
        )));
    }
    Ok(first)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemisimplicityCertificate {
    pub semisimple: bool,
    pub clauses: Vec<Clause>,
    /// Dimension of the socle of `C` as a right `C*`-module, when `C_A` is projective.
    pub left_comodule_socle: Option<usize>,
    /// Dimension of the socle of `C` as a left `*C`-module, when `_AC` is projective.
    pub right_comodule_socle: Option<usize>,
    /// Projectivity of `_AC`.
    pub left_projective: bool,
    /// Projectivity of `C_A`.
    pub right_projective: bool,
}

/// Socle dimension of the carrier over the dual ring on `side`.
fn dual_socle(c: &Coring, side: Side) -> Result<usize> {
    let module = c.dual(side)?.carrier_module()?;
    Ok(socle(&module).dim())
}

/// `C` as a module over `Hom_{A-A}(C, A)`, with the action borrowed from the dual on `side`.
fn bilinear_dual_semisimple(c: &Coring, side: Side) -> Result<bool> {
    let a = c.algebra();
    let bilinear = hom_space(c.carrier(), &Bimodule::regular(a))?;
    let dual = c.dual(side)?;
    let f = a.field();
    let coords: Vec<Vec<u64>> = bilinear
        .basis
        .iter()
        .map(|m| dual.coordinates(m).ok_or_else(|| Error::InternalDisagreement("bilinear map outside the dual".into())))
        .collect::<Result<_>>()?;
    let span = Subspace::from_vectors(f, dual.dim(), coords);
    let (sub, inclusion) = dual.algebra().subalgebra(&span)?;
    let d = c.dim();
    let actions: Vec<Matrix> = (0..sub.dim())
        .map(|i| combine(f, d, d, &inclusion.apply(&sub.basis_vector(i)), dual.carrier_actions()))
        .collect();
    let module = match side {
        Side::Left => Bimodule::left_module(sub, d, actions)?,
        Side::Right => Bimodule::right_module(sub, d, actions)?,
    };
    Ok(is_semisimple_module(&module))
}

/// Evaluates each characterisation of a semisimple coring independently.
///
/// Every comodule over `C` is a module over the dual ring on the other side,
/// so "every comodule is semisimple" is decided by the semisimplicity of
/// that ring.
pub fn is_semisimple_coring(c: &Coring) -> Result<SemisimplicityCertificate> {
    let left_projective = c.is_projective(Side::Left);
    let right_projective = c.is_projective(Side::Right);
    let d = c.dim();
    let left_comodule_socle = if right_projective { Some(dual_socle(c, Side::Right)?) } else { None };
    let right_comodule_socle = if left_projective { Some(dual_socle(c, Side::Left)?) } else { None };
    let left_full = left_comodule_socle == Some(d);
    let right_full = right_comodule_socle == Some(d);
    let cstar_semisimple = right_projective && c.dual(Side::Right)?.algebra().is_semisimple();
    let starc_semisimple = left_projective && c.dual(Side::Left)?.algebra().is_semisimple();
    let both = left_projective && right_projective;
    let mut clauses = vec![
        clause("i_left_comodule_C_semisimple", left_full, true),
        clause("ii_all_left_comodules_semisimple", cstar_semisimple, true),
        clause("iii_right_comodule_C_semisimple", right_full, true),
        clause("iv_all_right_comodules_semisimple", starc_semisimple, true),
        clause("v_all_comodules_semisimple", both && cstar_semisimple && starc_semisimple, true),
        clause("vi_dual_modules_semisimple", both && left_full && right_full, true),
    ];
    if both {
        clauses.push(clause("vi_left_bilinear_dual_module", bilinear_dual_semisimple(c, Side::Left)?, false));
        clauses.push(clause("vi_right_bilinear_dual_module", bilinear_dual_semisimple(c, Side::Right)?, false));
    }
    let semisimple = agree(&clauses)?;
    Ok(SemisimplicityCertificate {
        semisimple,
        clauses,
        left_comodule_socle,
        right_comodule_socle,
        left_projective,
        right_projective,
    })
}

/// Operators whose common invariant subspaces are the sub-bicomodules of `C`:
/// both `A`-actions and both dual-ring actions on the carrier.
pub fn bicomodule_operators(c: &Coring) -> Result<Vec<Matrix>> {
    let mut ops = c.carrier().acting_matrices();
    for side in [Side::Left, Side::Right] {
        ops.extend(c.dual(side)?.carrier_actions().iter().cloned());
    }
    Ok(ops)
}

/// No sub-bicomodules besides `0` and `C`.
pub fn is_simple_coring(c: &Coring) -> Result<bool> {
    if c.dim() == 0 {
        return Ok(false);
    }
    let ops = bicomodule_operators(c)?;
    is_irreducible_action(c.carrier().field(), c.dim(), &ops, STRUCTURE_SEED)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleSemisimpleReport {
    pub simple_semisimple: bool,
    pub clauses: Vec<Clause>,
}

/// The characterisations of a simple semisimple coring, evaluated separately.
///
/// A nonzero finite-dimensional comodule always contains a simple
/// subcomodule, so the semiartinian clauses reduce to simplicity.
pub fn simple_semisimple_crosscheck(c: &Arc<Coring>) -> Result<SimpleSemisimpleReport> {
    if !(c.is_projective(Side::Left) && c.is_projective(Side::Right)) {
        return Err(Error::Hypothesis("both _AC and C_A must be projective".into()));
    }
    let simple = is_simple_coring(c)?;
    let semisimple = is_semisimple_coring(c)?.semisimple;
    let mut clauses = Vec::new();
    for (side, tag) in [(Side::Left, ["i", "ii", "iii"]), (Side::Right, ["iv", "v", "vi"])] {
        let name = match side {
            Side::Left => "left",
            Side::Right => "right",
        };
        let regular = Comodule::regular(c, side);
        let has_simple = c.dim() > 0 && simple_subcomodule(&regular, STRUCTURE_SEED)?.0.dim() > 0;
        let unique_type = semisimple && comodule_isotypic(&regular, STRUCTURE_SEED)?.simples.len() == 1;
        clauses.push(clause(&format!("{}_simple_{name}_semiartinian", tag[0]), simple && c.dim() > 0, true));
        clauses.push(clause(&format!("{}_simple_with_simple_{name}_subcomodule", tag[1]), simple && has_simple, true));
        clauses.push(clause(&format!("{}_semisimple_unique_{name}_type", tag[2]), unique_type, true));
    }
    let simple_semisimple = agree(&clauses)?;
    Ok(SimpleSemisimpleReport { simple_semisimple, clauses })
}

#[derive(Clone, Debug)]
pub struct SimpleComponent {
    pub label: String,
    pub subspace: Subspace,
    pub coring: Coring,
}

#[derive(Clone, Debug)]
pub struct SimpleDecomposition {
    pub components: Vec<SimpleComponent>,
}

impl SimpleDecomposition {
    pub fn labels(&self) -> Vec<&str> {
        self.components.iter().map(|c| c.label.as_str()).collect()
    }
}

fn isotypic_components(c: &Arc<Coring>, side: Side) -> Result<Vec<(Subspace, Subspace)>> {
    let report = comodule_isotypic(&Comodule::regular(c, side), STRUCTURE_SEED)?;
    if !report.is_semisimple {
        return Err(Error::InternalDisagreement("semisimple coring has a proper socle".into()));
    }
    Ok(report.isotypic.into_iter().zip(report.simples.into_iter().map(|t| t.representative)).collect())
}

/// Splits a semisimple coring into its simple subcorings, the isotypic
/// components of `C` as a right comodule; the left-side components must match.
pub fn decompose_semisimple(c: &Arc<Coring>) -> Result<SimpleDecomposition> {
    if !is_semisimple_coring(c)?.semisimple {
        return Err(Error::Precondition("the coring is not semisimple".into()));
    }
    let mut right = isotypic_components(c, Side::Right)?;
    let left = isotypic_components(c, Side::Left)?;
    let mut right_spaces: Vec<&Subspace> = right.iter().map(|(s, _)| s).collect();
    let mut left_spaces: Vec<&Subspace> = left.iter().map(|(s, _)| s).collect();
    let key = |s: &&Subspace| s.basis().to_rows();
    right_spaces.sort_by_key(key);
    left_spaces.sort_by_key(key);
    if right_spaces != left_spaces {
        return Err(Error::InternalDisagreement("left and right isotypic decompositions differ".into()));
    }
    right.sort_by_key(|(_, rep)| rep.basis().to_rows());
    let mut total = 0;
    let mut components = Vec::with_capacity(right.len());
    for (i, (subspace, _)) in right.into_iter().enumerate() {
        let sub = c.subcoring(&subspace)?;
        if !is_simple_coring(&sub)? || !is_semisimple_coring(&sub)?.semisimple {
            return Err(Error::InternalDisagreement(format!("component {i} is not simple semisimple")));
        }
        total += subspace.dim();
        components.push(SimpleComponent { label: format!("alpha{i}"), subspace, coring: sub });
    }
    if total != c.dim() {
        return Err(Error::InternalDisagreement("components do not fill the coring".into()));
    }
    Ok(SimpleDecomposition { components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        diagonal_embedding, field_algebra, matrix_algebra, product, scalar_embedding, truncated_polynomials,
    };
    use crate::coring::{direct_sum, sweedler_coring, trivial_coring};
    use crate::linalg::PrimeField;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn semisimplicity_of_trivial_corings() {
        let m2 = trivial_coring(&Arc::new(matrix_algebra(2, gf(3))));
        let cert = is_semisimple_coring(&m2).unwrap();
        assert!(cert.semisimple);
        assert!(cert.clauses.iter().all(|c| c.value));
        let dual = trivial_coring(&Arc::new(truncated_polynomials(2, gf(2))));
        assert!(!is_semisimple_coring(&dual).unwrap().semisimple);
    }

    #[test]
    fn sweedler_scalar_extension_is_simple_semisimple() {
        let a = Arc::new(matrix_algebra(2, gf(3)));
        let c = Arc::new(sweedler_coring(&scalar_embedding(&a)).unwrap());
        assert!(is_semisimple_coring(&c).unwrap().semisimple);
        assert!(is_simple_coring(&c).unwrap());
        assert!(simple_semisimple_crosscheck(&c).unwrap().simple_semisimple);
    }

    #[test]
    fn sweedler_over_the_diagonal_splits() {
        let c = Arc::new(sweedler_coring(&diagonal_embedding(2, gf(3))).unwrap());
        assert!(is_semisimple_coring(&c).unwrap().semisimple);
        assert!(!is_simple_coring(&c).unwrap());
        let r = simple_semisimple_crosscheck(&c).unwrap();
        assert!(r.clauses.iter().all(|c| !c.value));
        let dec = decompose_semisimple(&c).unwrap();
        assert_eq!(dec.labels(), ["alpha0", "alpha1"]);
        assert!(dec.components.iter().all(|k| k.subspace.dim() == 4));
    }

    #[test]
    fn products_and_sums_are_not_simple() {
        let f = gf(3);
        let k2 = Arc::new(product(&field_algebra(f), &field_algebra(f)));
        let t = Arc::new(trivial_coring(&k2));
        assert!(!is_simple_coring(&t).unwrap());
        let dec = decompose_semisimple(&t).unwrap();
        assert_eq!(dec.components.len(), 2);
        assert!(dec.components.iter().all(|k| k.coring.dim() == 1 && k.coring.check().is_ok()));
        let m = trivial_coring(&Arc::new(matrix_algebra(2, f)));
        let s = Arc::new(direct_sum(&m, &m).unwrap());
        assert!(!is_simple_coring(&s).unwrap());
        assert!(is_simple_coring(&m).unwrap());
    }

    #[test]
    fn non_semisimple_crosscheck_is_all_false() {
        let c = Arc::new(trivial_coring(&Arc::new(truncated_polynomials(2, gf(2)))));
        let r = simple_semisimple_crosscheck(&c).unwrap();
        assert!(!r.simple_semisimple);
        assert!(decompose_semisimple(&c).is_err());
    }
}
