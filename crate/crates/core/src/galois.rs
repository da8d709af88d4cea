//! Grouplike elements, coinvariants and the canonical map `A (x)_B A -> C`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, AlgebraHom};
use crate::bimodule::{induced_map, Bimodule, Side};
use crate::comodule::{comodule_hom_space, Comodule};
use crate::coring::{sweedler_coring, sweedler_tensor, Coring};
use crate::error::{Error, Result};
use crate::linalg::{kron_vec, unit_vector, vec_add, vec_scale, vec_sub, Matrix, Subspace};
use crate::module_theory::hom_space;
use crate::report::AxiomReport;
use crate::structure::{is_semisimple_coring, is_simple_coring, Clause};

pub const DEFAULT_GROUPLIKE_BUDGET: u64 = 1_000_000;

/// `g` with `epsilon(g) = 1` and `Delta(g) = g (x)_A g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grouplike {
    pub vector: Vec<u64>,
    /// `epsilon(g) - 1` in `A`.
    pub counit_residual: Vec<u64>,
    /// `Delta(g) - g (x) g` in `C (x)_A C`.
    pub delta_residual: Vec<u64>,
}

impl Grouplike {
    pub fn new(c: &Coring, vector: Vec<u64>) -> Result<Self> {
        if vector.len() != c.dim() {
            return Err(Error::DimensionMismatch("grouplike has the wrong length".into()));
        }
        let f = c.carrier().field();
        let counit_residual = vec_sub(f, &c.counit().mul_vec(&vector), c.algebra().unit());
        let t = c.tensor()?;
        let diff = vec_sub(f, &c.delta_lift().mul_vec(&vector), &kron_vec(f, &vector, &vector));
        let delta_residual = t.project(&diff);
        let g = Self { vector, counit_residual, delta_residual };
        if !g.is_valid() {
            return Err(Error::InvalidGrouplike("nonzero residual".into()));
        }
        Ok(g)
    }

    pub fn is_valid(&self) -> bool {
        self.counit_residual.iter().chain(&self.delta_residual).all(|&x| x == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrouplikeSearch {
    pub grouplikes: Vec<Grouplike>,
    /// Whether every candidate was examined.
    pub complete: bool,
    pub candidates: u64,
}

/// Enumerates the affine space `epsilon(g) = 1` and keeps the points with
/// `Delta(g) = g (x) g`, visiting at most `budget` candidates.
///
/// Writing `g = v_0 + sum t_j v_j`, the residual is the quadratic
/// `r(t) = sum t_j D v_j - sum t_j t_l W_jl` with `W_jl = [v_j (x) v_l]`;
/// each odometer step adds `1` to some digits and updates `r` incrementally.
pub fn find_grouplikes(c: &Coring, budget: u64) -> Result<GrouplikeSearch> {
    let f = c.carrier().field();
    let p = f.p();
    let Some(particular) = c.counit().solve(c.algebra().unit()) else {
        return Ok(GrouplikeSearch { grouplikes: Vec::new(), complete: true, candidates: 0 });
    };
    let t = c.tensor()?;
    let mut v = vec![particular];
    v.extend(c.counit().kernel().basis_vectors());
    let k = v.len() - 1;
    let dv: Vec<Vec<u64>> = v.iter().map(|x| t.project(&c.delta_lift().mul_vec(x))).collect();
    let w: Vec<Vec<Vec<u64>>> =
        v.iter().map(|x| v.iter().map(|y| t.project(&kron_vec(f, x, y))).collect()).collect();
    let sym = |j: usize, l: usize| vec_add(f, &w[j][l], &w[l][j]);
    let mut r = vec_sub(f, &dv[0], &w[0][0]);
    let mut s: Vec<Vec<u64>> = (0..=k).map(|j| sym(j, 0)).collect();
    let step: Vec<Vec<u64>> = (0..=k).map(|j| vec_sub(f, &dv[j], &w[j][j])).collect();
    let total = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    let mut digits = vec![0u64; k];
    let mut found = Vec::new();
    let mut candidates = 0u64;
    loop {
        if candidates >= budget {
            break;
        }
        candidates += 1;
        if r.iter().all(|&x| x == 0) {
            let mut g = v[0].clone();
            for (j, &tj) in digits.iter().enumerate() {
                if tj != 0 {
                    g = vec_add(f, &g, &vec_scale(f, tj, &v[j + 1]));
                }
            }
            found.push(Grouplike::new(c, g)?);
        }
        let mut pos = 0;
        while pos < k {
            let j = pos + 1;
            r = vec_sub(f, &vec_add(f, &r, &step[j]), &s[j]);
            for (l, sl) in s.iter_mut().enumerate() {
                *sl = vec_add(f, sl, &sym(l, j));
            }
            digits[pos] += 1;
            if digits[pos] < p {
                break;
            }
            digits[pos] = 0;
            pos += 1;
        }
        if pos == k {
            break;
        }
    }
    found.sort_by(|a, b| a.vector.cmp(&b.vector));
    let complete = (candidates as u128) >= total;
    Ok(GrouplikeSearch { grouplikes: found, complete, candidates })
}

/// `A` as a comodule through `g`: `a -> a g (x) 1` on the left, `a -> 1 (x) g a` on the right.
pub fn comodule_from_grouplike(c: &Arc<Coring>, g: &Grouplike, side: Side) -> Result<Comodule> {
    if !g.is_valid() || g.vector.len() != c.dim() {
        return Err(Error::InvalidGrouplike("residuals must vanish".into()));
    }
    let a = c.algebra();
    let f = a.field();
    let n = a.dim();
    let carrier = c.carrier();
    let cols: Vec<Vec<u64>> = (0..n)
        .map(|i| match side {
            Side::Left => kron_vec(f, &carrier.left_action(i).mul_vec(&g.vector), a.unit()),
            Side::Right => kron_vec(f, a.unit(), &carrier.right_action(i).mul_vec(&g.vector)),
        })
        .collect();
    let module = Arc::new(Bimodule::regular(a).forget(side));
    Comodule::new(c.clone(), side, module, Matrix::from_columns(f, c.dim() * n, &cols))
}

/// `A^coC = {a : a g = g a}` with its induced algebra structure.
#[derive(Clone, Debug)]
pub struct CoinvariantRing {
    pub subspace: Subspace,
    pub algebra: Arc<Algebra>,
    pub inclusion: AlgebraHom,
    /// Dimension of the endomorphisms of `A` as a left comodule.
    pub endomorphism_dim: usize,
}

pub fn coinvariants_ring(c: &Arc<Coring>, g: &Grouplike) -> Result<CoinvariantRing> {
    let a = c.algebra();
    let f = a.field();
    let carrier = c.carrier();
    let cols: Vec<Vec<u64>> = (0..a.dim())
        .map(|i| vec_sub(f, &carrier.left_action(i).mul_vec(&g.vector), &carrier.right_action(i).mul_vec(&g.vector)))
        .collect();
    let subspace = Matrix::from_columns(f, c.dim(), &cols).kernel();
    let (algebra, inclusion) = a.subalgebra(&subspace)?;
    let comodule = comodule_from_grouplike(c, g, Side::Left)?;
    let endomorphism_dim = comodule_hom_space(&comodule, &comodule)?.dim();
    if endomorphism_dim != subspace.dim() {
        return Err(Error::InternalDisagreement(format!(
            "coinvariants have dimension {}, comodule endomorphisms {endomorphism_dim}",
            subspace.dim()
        )));
    }
    Ok(CoinvariantRing { subspace, algebra, inclusion, endomorphism_dim })
}

/// `M^coC = {m : rho(m) = m (x) g}` for a right comodule.
pub fn coinvariants_module(m: &Comodule, g: &Grouplike) -> Result<Subspace> {
    if m.side() != Side::Right {
        return Err(Error::Precondition("coinvariants are taken in a right comodule".into()));
    }
    let f = m.module().field();
    let n = m.dim();
    let t = m.tensor()?;
    let cols: Vec<Vec<u64>> = (0..n)
        .map(|k| {
            let e = unit_vector(n, k);
            t.project(&vec_sub(f, &m.coaction_lift().col(k), &kron_vec(f, &e, &g.vector)))
        })
        .collect();
    Ok(Matrix::from_columns(f, t.dim(), &cols).kernel())
}

#[derive(Clone, Debug)]
pub struct GaloisAssessment {
    pub coinvariants: CoinvariantRing,
    /// `A (x)_B A -> C`, `a (x) a' -> a g a'`, in the coordinates of the Sweedler coring.
    pub map: Matrix,
    pub morphism: AxiomReport,
    pub bijective: bool,
    pub clauses: Vec<Clause>,
    pub equivalent: bool,
}

fn clause(name: &str, value: bool, binding: bool) -> Clause {
    Clause { name: name.into(), value, binding }
}

/// The canonical map, checked to be a coring morphism.
fn canonical_map(c: &Arc<Coring>, g: &Grouplike, b: &CoinvariantRing) -> Result<(Coring, Matrix, AxiomReport)> {
    let s = sweedler_coring(&b.inclusion)?;
    let t = sweedler_tensor(&b.inclusion)?;
    let a = c.algebra();
    let f = a.field();
    let n = a.dim();
    let carrier = c.carrier();
    let cols: Vec<Vec<u64>> =
        (0..n * n).map(|idx| carrier.left_action(idx / n).mul(carrier.right_action(idx % n)).mul_vec(&g.vector)).collect();
    let on_pairs = Matrix::from_columns(f, c.dim(), &cols);
    let mut report = AxiomReport::new();
    report.require(on_pairs.mul(&t.balancing().basis().transpose()).is_zero(), "map_balanced", || {
        "a b (x) a' and a (x) b a' have different images".into()
    });
    let map = on_pairs.mul(t.section());
    report.require(s.carrier().is_morphism_to(carrier, &map), "map_bilinear", || "map is not A-bilinear".into());
    report.require(map.mul_vec(&t.pure(a.unit(), a.unit())?) == g.vector, "map_sends_unit_to_g", || {
        "1 (x) 1 is not sent to g".into()
    });
    report.require(c.counit().mul(&map) == *s.counit(), "map_counit", || "counit is not preserved".into());
    let pushed = induced_map(&*s.tensor()?, &*c.tensor()?, &map, &map)?;
    report.require(c.delta()?.mul(&map) == pushed.mul(&s.delta()?), "map_comultiplication", || {
        "comultiplication is not preserved".into()
    });
    Ok((s, map, report))
}

/// `A` is a projective generator among comodules on `side`: as a module over
/// the dual ring it is projective and its trace ideal is everything.
fn projective_generator(c: &Arc<Coring>, g: &Grouplike, side: Side) -> Result<bool> {
    if !c.is_projective(side.other()) {
        return Ok(false);
    }
    let m = comodule_from_grouplike(c, g, side)?.to_dual_module()?;
    let dual_side = side.other();
    if !crate::module_theory::is_projective(&m.module, dual_side) {
        return Ok(false);
    }
    let regular = Bimodule::regular(m.dual.algebra()).forget(dual_side);
    let homs = hom_space(&m.module, &regular)?;
    let f = m.module.field();
    let trace = Subspace::from_vectors(f, regular.dim(), homs.basis.iter().flat_map(Matrix::columns));
    Ok(trace.is_full())
}

/// Evaluates the characterisations of a simple semisimple coring with a grouplike.
pub fn galois_assess(c: &Arc<Coring>, g: &Grouplike) -> Result<GaloisAssessment> {
    if !g.is_valid() {
        return Err(Error::InvalidGrouplike("residuals must vanish".into()));
    }
    let b = coinvariants_ring(c, g)?;
    let (_, map, morphism) = canonical_map(c, g, &b)?;
    if !morphism.is_ok() {
        return Err(Error::InternalDisagreement(format!("canonical map: {morphism}")));
    }
    let bijective = map.is_square() && map.is_invertible();
    let b_simple = b.algebra.is_simple_artinian();
    let simple_semisimple = is_semisimple_coring(c)?.semisimple && is_simple_coring(c)?;
    let search = find_grouplikes(c, DEFAULT_GROUPLIKE_BUDGET)?;
    let mut some_galois = false;
    for h in &search.grouplikes {
        let bh = coinvariants_ring(c, h)?;
        if bh.algebra.is_simple_artinian() {
            let (_, mh, _) = canonical_map(c, h, &bh)?;
            if mh.is_square() && mh.is_invertible() {
                some_galois = true;
                break;
            }
        }
    }
    let clauses = vec![
        clause("i_simple_semisimple", simple_semisimple, true),
        clause("ii_sweedler_over_simple_artinian", some_galois, search.complete),
        clause("iii_galois_with_simple_artinian_coinvariants", bijective && b_simple, true),
        clause(
            "iv_left_projective_generator",
            c.is_projective(Side::Right) && projective_generator(c, g, Side::Left)? && b_simple,
            true,
        ),
        clause(
            "v_right_projective_generator",
            c.is_projective(Side::Left) && projective_generator(c, g, Side::Right)? && b_simple,
            true,
        ),
    ];
    let binding: Vec<bool> = clauses.iter().filter(|k| k.binding).map(|k| k.value).collect();
    let equivalent = binding.windows(2).all(|w| w[0] == w[1]);
    if !equivalent {
        let table: Vec<String> = clauses.iter().map(|k| format!("{}={}", k.name, k.value)).collect();
        return Err(Error::InternalDisagreement(format!("equivalent conditions differ: {}", table.join(", "))));
    }
    Ok(GaloisAssessment { coinvariants: b, map, morphism, bijective, clauses, equivalent })
}

/// For a simple artinian `B -> A`: `A (x)_B A` is simple semisimple and its
/// coinvariants for `1 (x) 1` are exactly `B`.
pub fn verify_simple_artin(iota: &AlgebraHom) -> Result<AxiomReport> {
    if !iota.source().is_simple_artinian() {
        return Err(Error::Precondition("B is not simple artinian".into()));
    }
    if !iota.is_injective() {
        return Err(Error::Precondition("B -> A is not injective".into()));
    }
    let c = Arc::new(sweedler_coring(iota)?);
    let a = iota.target();
    let t = sweedler_tensor(iota)?;
    let g = Grouplike::new(&c, t.pure(a.unit(), a.unit())?)?;
    let mut report = AxiomReport::new();
    report.require(is_semisimple_coring(&c)?.semisimple, "semisimple", || "A (x)_B A is not semisimple".into());
    report.require(is_simple_coring(&c)?, "simple", || "A (x)_B A has a proper sub-bicomodule".into());
    let b = coinvariants_ring(&c, &g)?;
    let image = iota.matrix().column_space();
    report.require(b.subspace == image, "coinvariants", || {
        format!("coinvariants have dimension {}, B has {}", b.subspace.dim(), image.dim())
    });
    Ok(report)
}
