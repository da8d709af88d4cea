//! Acceptance criteria, one reported line each.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use coringlab::algebra::{dual_numbers, field_algebra, matrix_algebra, product, upper_triangular};
use coringlab::bimodule::Side;
use coringlab::comodule::{comodule_isotypic, Comodule};
use coringlab::coring::{sweedler_coring, sweedler_tensor, trivial_coring, Coring};
use coringlab::demo::{self, subring_inclusion, Subring};
use coringlab::galois::{coinvariants_ring, galois_assess, verify_simple_artin, Grouplike};
use coringlab::linalg::{unit_vector, Matrix, Subspace};
use coringlab::module_theory::{is_semisimple_module, simple_submodule, socle};
use coringlab::structure::{decompose_semisimple, is_semisimple_coring, simple_semisimple_crosscheck};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{
    agreement_tally, brute_lattice, brute_radical, coring_corpus, gf, mutate, oracle_corpus, random_vector,
    sweedler_product,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn corpus_coring(name: &str) -> Arc<Coring> {
    coring_corpus().into_iter().find(|(n, _)| n == name).map(|(_, c)| c).unwrap()
}

fn unit_grouplike(c: &Arc<Coring>, iota: &coringlab::algebra::AlgebraHom) -> Grouplike {
    let a = iota.target();
    let g = sweedler_tensor(iota).unwrap().pure(a.unit(), a.unit()).unwrap();
    Grouplike::new(c, g).unwrap()
}

fn axiom_suites() -> Outcome {
    let corpus = coring_corpus();
    for (name, c) in &corpus {
        let report = c.check();
        ensure(report.is_ok(), || format!("{name}: {report}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xbad);
    let mut mutants = 0;
    for (name, c) in &corpus {
        let rounds = if c.dim() > 8 { 2 } else { 5 };
        for _ in 0..rounds {
            let (what, m) = mutate(c, &mut rng);
            ensure(!m.check().is_ok(), || format!("{name} survived {what}"))?;
            mutants += 1;
        }
    }
    ensure(mutants >= 50, || format!("only {mutants} mutants"))?;
    Ok(format!("{} corings valid, {mutants}/{mutants} mutants detected", corpus.len()))
}

fn simple_artin() -> Outcome {
    let mut dims = Vec::new();
    for p in [3, 2] {
        let iota = subring_inclusion(2, gf(p), Subring::Scalar).unwrap();
        let c = Arc::new(sweedler_coring(&iota).unwrap());
        ensure(c.dim() == 16, || format!("GF({p}): dim {}", c.dim()))?;
        let report = verify_simple_artin(&iota).unwrap();
        ensure(report.is_ok(), || format!("GF({p}): {report}"))?;
        let cross = simple_semisimple_crosscheck(&c).unwrap();
        ensure(cross.simple_semisimple, || format!("GF({p}): not simple semisimple"))?;
        let b = coinvariants_ring(&c, &unit_grouplike(&c, &iota)).unwrap();
        let scalars = Subspace::from_vectors(gf(p), 4, [c.algebra().unit().to_vec()]);
        ensure(b.subspace == scalars, || format!("GF({p}): coinvariants of dim {}", b.subspace.dim()))?;
        dims.push(c.dim());
    }
    Ok(format!("M2(GF(3)), M2(GF(2)) over scalars: dims {dims:?}, simple semisimple, coinvariants = scalars"))
}

fn galois_maps() -> Outcome {
    for p in [3, 2] {
        let iota = subring_inclusion(2, gf(p), Subring::Scalar).unwrap();
        let c = Arc::new(sweedler_coring(&iota).unwrap());
        let g = unit_grouplike(&c, &iota);
        let assessment = galois_assess(&c, &g).unwrap();
        ensure(assessment.map.rank() == c.dim() && assessment.bijective, || format!("GF({p}): map not bijective"))?;
        ensure(assessment.morphism.is_ok(), || format!("GF({p}): {}", assessment.morphism))?;
        ensure(assessment.clauses.iter().all(|k| k.value), || format!("GF({p}): {:?}", assessment.clauses))?;
    }
    let c = Arc::new(trivial_coring(&Arc::new(dual_numbers(gf(2)))));
    let one = c.algebra().unit().to_vec();
    let assessment = galois_assess(&c, &Grouplike::new(&c, one).unwrap()).unwrap();
    ensure(assessment.bijective, || "trivial dual numbers: map not bijective".into())?;
    ensure(!assessment.coinvariants.algebra.is_simple_artinian(), || "coinvariants reported simple artinian".into())?;
    ensure(!assessment.clauses.iter().any(|k| k.value), || format!("{:?}", assessment.clauses))?;
    Ok("both Sweedler maps bijective coring morphisms; trivial dual numbers Galois, coinvariants not simple artinian".into())
}

fn semisimplicity_clauses() -> Outcome {
    let (mut yes, mut no, mut informational) = (0, 0, 0);
    for (name, c) in coring_corpus() {
        let cert = is_semisimple_coring(&c).map_err(|e| format!("{name}: {e}"))?;
        let mut binding = cert.clauses.iter().filter(|k| k.binding).map(|k| k.value);
        let first = binding.next().unwrap();
        ensure(binding.all(|v| v == first), || format!("{name}: {:?}", cert.clauses))?;
        informational += cert.clauses.iter().filter(|k| !k.binding && k.value != first).count();
        if cert.semisimple {
            yes += 1;
        } else {
            no += 1;
        }
    }
    ensure(yes + no >= 8 && yes > 0 && no > 0, || format!("{yes} semisimple, {no} not"))?;
    Ok(format!(
        "{} corings ({yes} semisimple, {no} not), binding clauses agree on each, {informational} informational differ",
        yes + no
    ))
}

fn isotypic_spaces(c: &Arc<Coring>, side: Side) -> Vec<Subspace> {
    let mut spaces = comodule_isotypic(&Comodule::regular(c, side), 0x5eed).unwrap().isotypic;
    spaces.sort_by_key(|s| s.basis().to_rows());
    spaces
}

fn decomposition() -> Outcome {
    let f = gf(3);
    let c = Arc::new(demo::two_simple_sum(f).unwrap());
    let d = c.dim();
    let mut expected =
        vec![Subspace::from_vectors(f, d, (0..4).map(|i| unit_vector(d, i))), Subspace::from_vectors(f, d, [unit_vector(d, 4)])];
    expected.sort_by_key(|s| s.basis().to_rows());
    let mut found: Vec<Subspace> = decompose_semisimple(&c).unwrap().components.into_iter().map(|k| k.subspace).collect();
    found.sort_by_key(|s| s.basis().to_rows());
    ensure(found == expected, || format!("components {found:?}"))?;
    ensure(isotypic_spaces(&c, Side::Left) == isotypic_spaces(&c, Side::Right), || "left and right differ".into())?;
    ensure(isotypic_spaces(&c, Side::Left) == expected, || "left-derived components differ".into())?;
    let t = Arc::new(demo::trivial("product", 2, f).unwrap());
    let n = decompose_semisimple(&t).unwrap().components.len();
    ensure(n == 2, || format!("trivial GF(3)xGF(3): {n} components"))?;
    Ok("direct sum splits into its two summands on both sides; trivial GF(3)xGF(3) has 2 components".into())
}

fn simple_semisimple_vectors() -> Outcome {
    let truth = simple_semisimple_crosscheck(&corpus_coring("sweedler-scalar-3")).unwrap();
    ensure(truth.clauses.iter().all(|k| k.value), || format!("Sweedler: {:?}", truth.clauses))?;
    for name in ["two-simple-sum-3", "sum-dual-numbers-2", "trivial-dual-numbers-2"] {
        let r = simple_semisimple_crosscheck(&corpus_coring(name)).unwrap();
        ensure(r.clauses.iter().all(|k| !k.value), || format!("{name}: {:?}", r.clauses))?;
    }
    Ok(format!("{} clauses all true on Sweedler, all false on 3 others", truth.clauses.len()))
}

fn flatness() -> Outcome {
    let f = gf(2);
    let nilpotent = demo::triangular("dual-numbers", f).unwrap();
    let reduced = demo::triangular("field", f).unwrap();
    ensure(!nilpotent.is_projective(Side::Left), || "R = GF(2)[x]/(x^2): reported projective".into())?;
    ensure(reduced.is_projective(Side::Left), || "R = GF(2): reported non-projective".into())?;
    Ok("R = GF(2)[x]/(x^2): not projective; R = GF(2): projective".into())
}

fn oracles() -> Outcome {
    let corpus = oracle_corpus(7, 40);
    let mut cases = 0;
    for case in &corpus {
        ensure(case.algebra.radical_space() == &brute_radical(&case.algebra), || format!("{} radical", case.label))?;
        cases += 1;
        for (name, m) in &case.modules {
            let lattice = brute_lattice(m);
            ensure(socle(m) == lattice.socle, || format!("{} {name} socle", case.label))?;
            ensure(is_semisimple_module(m) == lattice.socle.is_full(), || format!("{} {name}", case.label))?;
            let s = simple_submodule(m, 1).unwrap();
            ensure(lattice.simples.contains(&s), || format!("{} {name} simple", case.label))?;
            cases += 1;
        }
    }
    ensure(cases >= 100, || format!("only {cases} cases"))?;
    Ok(format!("{cases} cases over {} algebras agree with enumeration", corpus.len()))
}

fn dual_rings() -> Outcome {
    let (f2, f3) = (gf(2), gf(3));
    for a in [field_algebra(f3), dual_numbers(f2), upper_triangular(f3), matrix_algebra(2, f2), product(&dual_numbers(f3), &field_algebra(f3))] {
        let a = Arc::new(a);
        let dual = trivial_coring(&a).dual(Side::Right).unwrap();
        let cols: Vec<Vec<u64>> = dual.basis().iter().map(|b| b.mul_vec(a.unit())).collect();
        let iso = Matrix::from_columns(a.field(), a.dim(), &cols);
        ensure(iso.is_invertible(), || "f -> f(1) not invertible".into())?;
        let r = dual.algebra();
        for i in 0..r.dim() {
            for j in 0..r.dim() {
                let lhs = iso.mul_vec(&r.mul_elems(&r.basis_vector(i), &r.basis_vector(j)));
                ensure(lhs == a.mul_elems(&iso.col(j), &iso.col(i)), || "f -> f(1) not anti-multiplicative".into())?;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xd0a1);
    let corpus = coring_corpus();
    for (name, c) in &corpus {
        for side in [Side::Left, Side::Right] {
            let dual = c.dual(side).unwrap();
            let f = dual.algebra().field();
            let eps = c.counit();
            let mul = |x: &Matrix, y: &Matrix| sweedler_product(c, side, x, y);
            for _ in 0..1000 {
                let [x, y, z] = [0; 3].map(|_| dual.element(&random_vector(&mut rng, f, dual.dim())));
                ensure(mul(&mul(&x, &y), &z) == mul(&x, &mul(&y, &z)), || format!("{name} {side:?}: not associative"))?;
                ensure(mul(eps, &x) == x && mul(&x, eps) == x, || format!("{name} {side:?}: counit not a unit"))?;
            }
        }
    }
    Ok(format!("C* = A^op for 5 algebras; 1000 triples on both duals of {} corings", corpus.len()))
}

fn bicomodules() -> Outcome {
    let tally = agreement_tally(0xb1c0, 6);
    ensure(tally.disagreements.is_empty(), || format!("{:?}", tally.disagreements))?;
    let total = tally.valid + tally.invalid;
    ensure(total >= 200 && tally.valid > 0 && tally.invalid > 0, || format!("{total} structures"))?;
    Ok(format!("{total} structures ({} valid, {} invalid), verdicts agree", tally.valid, tally.invalid))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("axiom suites and mutation corpus", axiom_suites),
        ("simple artinian Sweedler corings", simple_artin),
        ("Galois maps", galois_maps),
        ("semisimplicity clauses", semisimplicity_clauses),
        ("simple decomposition", decomposition),
        ("simple semisimple clause vectors", simple_semisimple_vectors),
        ("triangular flatness", flatness),
        ("brute-force oracles", oracles),
        ("dual rings", dual_rings),
        ("bicomodule verdicts", bicomodules),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{secs:6.2}s] {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{secs:6.2}s] {name}: {detail}", i + 1);
            }
        }
    }
    let total = start.elapsed().as_secs_f64();
    println!("{} of {} criteria passed in {total:.2}s", criteria.len() - failed, criteria.len());
    if failed > 0 || total > 60.0 {
        std::process::exit(1);
    }
}
