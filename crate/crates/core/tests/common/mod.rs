#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::Arc;

use coringlab::algebra::{field_algebra, Algebra};
use coringlab::bimodule::{Bimodule, Side};
use coringlab::comodule::Bicomodule;
use coringlab::coring::{direct_sum, grouplike_coalgebra, trivial_coring, Coring};
use coringlab::demo::{self, Subring};
use coringlab::linalg::{unit_vector, Matrix, PrimeField, Subspace};
use coringlab::module_theory::hom_space;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn random_vector(rng: &mut ChaCha8Rng, f: PrimeField, n: usize) -> Vec<u64> {
    (0..n).map(|_| rng.gen_range(0..f.p())).collect()
}

pub fn random_matrix(rng: &mut ChaCha8Rng, f: PrimeField, rows: usize, cols: usize) -> Matrix {
    Matrix::new(f, rows, cols, random_vector(rng, f, rows * cols)).unwrap()
}

pub fn random_invertible(rng: &mut ChaCha8Rng, f: PrimeField, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, f, n, n);
        if m.is_invertible() {
            return m;
        }
    }
}

/// The unital subalgebra of `M_n` generated by `gens`, with structure
/// constants in the basis found by closing the span under products.
pub fn matrix_subalgebra(f: PrimeField, n: usize, gens: &[Matrix]) -> (Algebra, Vec<Matrix>) {
    let mut basis: Vec<Matrix> = Vec::new();
    let mut span = Subspace::zero(f, n * n);
    let push = |m: Matrix, basis: &mut Vec<Matrix>, span: &mut Subspace| {
        let v = m.vectorize();
        if !span.contains(&v) {
            *span = span.sum(&Subspace::from_vectors(f, n * n, [v])).unwrap();
            basis.push(m);
        }
    };
    push(Matrix::identity(f, n), &mut basis, &mut span);
    for g in gens {
        push(g.clone(), &mut basis, &mut span);
    }
    let mut i = 0;
    while i < basis.len() {
        for j in 0..basis.len() {
            let (x, y) = (basis[i].clone(), basis[j].clone());
            push(x.mul(&y), &mut basis, &mut span);
            push(y.mul(&x), &mut basis, &mut span);
        }
        i += 1;
    }
    // coordinates against the basis matrices, not the echelon form
    let cols: Vec<Vec<u64>> = basis.iter().map(Matrix::vectorize).collect();
    let b = Matrix::from_columns(f, n * n, &cols);
    let coord = |m: &Matrix| b.solve(&m.vectorize()).unwrap();
    let mul = basis.iter().map(|x| basis.iter().map(|y| coord(&x.mul(y))).collect()).collect();
    let unit = coord(&Matrix::identity(f, n));
    (Algebra::new(f, mul, unit).unwrap(), basis)
}

/// Every element of `GF(p)^n`.
pub fn all_vectors(f: PrimeField, n: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..f.p()).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// `{x : a x nilpotent for every a}`, by enumeration.
pub fn brute_radical(a: &Algebra) -> Subspace {
    let f = a.field();
    let n = a.dim();
    let elems = all_vectors(f, n);
    let nilpotent = |x: &[u64]| a.pow(x, n + 1).iter().all(|&c| c == 0);
    let members = elems.iter().filter(|x| elems.iter().all(|y| nilpotent(&a.mul_elems(y, x)))).cloned();
    Subspace::from_vectors(f, n, members)
}

/// Every subspace of `GF(p)^n`, by repeated extension.
pub fn all_subspaces(f: PrimeField, n: usize) -> Vec<Subspace> {
    let vectors = all_vectors(f, n);
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut frontier = vec![Subspace::zero(f, n)];
    seen.insert(frontier[0].clone());
    while let Some(s) = frontier.pop() {
        for v in &vectors {
            if !s.contains(v) {
                let t = s.sum(&Subspace::from_vectors(f, n, [v.clone()])).unwrap();
                if seen.insert(t.clone()) {
                    frontier.push(t);
                }
            }
        }
    }
    seen.into_iter().collect()
}

pub struct BruteLattice {
    pub submodules: Vec<Subspace>,
    pub simples: Vec<Subspace>,
    pub socle: Subspace,
}

pub fn brute_lattice(m: &Bimodule) -> BruteLattice {
    let f = m.field();
    let n = m.dim();
    let acts = m.acting_matrices();
    let submodules: Vec<Subspace> =
        all_subspaces(f, n).into_iter().filter(|s| acts.iter().all(|x| s.is_stable_under(x))).collect();
    let simples: Vec<Subspace> = submodules
        .iter()
        .filter(|s| !s.is_zero() && !submodules.iter().any(|t| !t.is_zero() && t.dim() < s.dim() && s.contains_subspace(t)))
        .cloned()
        .collect();
    let socle = simples.iter().fold(Subspace::zero(f, n), |acc, s| acc.sum(s).unwrap());
    BruteLattice { submodules, simples, socle }
}

pub struct OracleCase {
    pub label: String,
    pub algebra: Arc<Algebra>,
    pub modules: Vec<(String, Bimodule)>,
}

/// Unital subalgebras of `M_n(GF(2))`, `n <= 3`, of dimension at most 4, each with
/// its natural module and both regular modules.
pub fn oracle_corpus(seed: u64, count: usize) -> Vec<OracleCase> {
    let f = gf(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<(usize, Subspace)> = HashSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < 100_000 {
        attempts += 1;
        let n = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=2);
        let gens: Vec<Matrix> = (0..k).map(|_| random_matrix(&mut rng, f, n, n)).collect();
        let (a, basis) = matrix_subalgebra(f, n, &gens);
        if a.dim() > 4 {
            continue;
        }
        let span = Subspace::from_vectors(f, n * n, basis.iter().map(Matrix::vectorize));
        if !seen.insert((n, span)) {
            continue;
        }
        let a = Arc::new(a);
        let natural = Bimodule::left_module(a.clone(), n, basis.clone()).unwrap();
        let left_regular = Bimodule::left_module(a.clone(), a.dim(), a.left_regular_all().to_vec()).unwrap();
        let right_regular = Bimodule::right_module(a.clone(), a.dim(), a.right_regular_all().to_vec()).unwrap();
        out.push(OracleCase {
            label: format!("n{n}-d{}-#{}", a.dim(), out.len()),
            algebra: a,
            modules: vec![
                ("natural".into(), natural),
                ("left-regular".into(), left_regular),
                ("right-regular".into(), right_regular),
            ],
        });
    }
    out
}

/// Named corings covering every constructor, semisimple and not.
pub fn coring_corpus() -> Vec<(String, Arc<Coring>)> {
    let (f2, f3) = (gf(2), gf(3));
    let dual2 = demo::trivial("dual-numbers", 2, f2).unwrap();
    let list: Vec<(&str, Coring)> = vec![
        ("trivial-field-3", trivial_coring(&Arc::new(field_algebra(f3)))),
        ("trivial-dual-numbers-2", dual2.clone()),
        ("trivial-product-3", demo::trivial("product", 2, f3).unwrap()),
        ("trivial-upper-triangular-2", demo::trivial("upper-triangular", 2, f2).unwrap()),
        ("trivial-cyclic3-2", demo::trivial("cyclic", 3, f2).unwrap()),
        ("sweedler-scalar-3", demo::sweedler(2, f3, Subring::Scalar).unwrap()),
        ("sweedler-diag-3", demo::sweedler(2, f3, Subring::Diagonal).unwrap()),
        ("sweedler-full-3", demo::sweedler(2, f3, Subring::Full).unwrap()),
        ("triangular-field-2", demo::triangular("field", f2).unwrap()),
        ("triangular-dual-numbers-2", demo::triangular("dual-numbers", f2).unwrap()),
        ("entwined-0-3", demo::entwined(0, f3).unwrap()),
        ("entwined-1-3", demo::entwined(1, f3).unwrap()),
        ("grouplike-3-points-3", grouplike_coalgebra(f3, 3)),
        ("two-simple-sum-3", demo::two_simple_sum(f3).unwrap()),
        ("sum-dual-numbers-2", direct_sum(&dual2, &dual2).unwrap()),
    ];
    list.into_iter().map(|(n, c)| (n.to_string(), Arc::new(c))).collect()
}

/// A single-entry perturbation of `Delta` or `epsilon`. Perturbations of the
/// lift that vanish in `C (x)_A C` are not mutants and are never returned.
pub fn mutate(c: &Coring, rng: &mut ChaCha8Rng) -> (String, Coring) {
    let f = c.carrier().field();
    let d = c.dim();
    let t = c.tensor().unwrap();
    loop {
        let s = rng.gen_range(1..f.p());
        if rng.gen_bool(0.5) {
            let (r, col) = (rng.gen_range(0..d * d), rng.gen_range(0..d));
            if t.project(&unit_vector(d * d, r)).iter().all(|&x| x == 0) {
                continue;
            }
            let mut delta = c.delta_lift().clone();
            delta.set(r, col, f.add(delta.get(r, col), s));
            return (format!("delta[{r},{col}]+={s}"), c.with_data(delta, c.counit().clone()).unwrap());
        }
        let (r, col) = (rng.gen_range(0..c.counit().rows()), rng.gen_range(0..d));
        let mut eps = c.counit().clone();
        eps.set(r, col, f.add(eps.get(r, col), s));
        return (format!("counit[{r},{col}]+={s}"), c.with_data(c.delta_lift().clone(), eps).unwrap());
    }
}

/// Transport of a bicomodule along an invertible linear map of its carrier.
pub fn transport(b: &Bicomodule, phi: &Matrix) -> Bicomodule {
    let f = phi.field();
    let inv = phi.inverse().unwrap();
    let id = Matrix::identity(f, b.coring.dim());
    Bicomodule {
        coring: b.coring.clone(),
        carrier: Arc::new(b.carrier.conjugate(phi).unwrap()),
        left_coaction: id.kron(phi).mul(&b.left_coaction).mul(&inv),
        right_coaction: phi.kron(&id).mul(&b.right_coaction).mul(&inv),
    }
}

/// A random invertible `A`-linear endomorphism of the carrier on one side.
pub fn random_linear_automorphism(m: &Bimodule, side: Side, rng: &mut ChaCha8Rng) -> Option<Matrix> {
    let one_sided = m.forget(side);
    let homs = hom_space(&one_sided, &one_sided).unwrap();
    let f = m.field();
    for _ in 0..50 {
        let coeffs = random_vector(rng, f, homs.dim());
        let s = homs.combination(f, &coeffs);
        if s.is_invertible() {
            return Some(s);
        }
    }
    None
}

/// Replaces one coaction by its twist along a one-sided automorphism:
/// still a comodule on that side, but usually no longer compatible.
pub fn twist(b: &Bicomodule, side: Side, sigma: &Matrix) -> Bicomodule {
    let f = sigma.field();
    let inv = sigma.inverse().unwrap();
    let id = Matrix::identity(f, b.coring.dim());
    let mut out = b.clone();
    match side {
        Side::Left => out.left_coaction = id.kron(sigma).mul(&b.left_coaction).mul(&inv),
        Side::Right => out.right_coaction = sigma.kron(&id).mul(&b.right_coaction).mul(&inv),
    }
    out
}

pub struct Tally {
    pub valid: usize,
    pub invalid: usize,
    pub disagreements: Vec<String>,
}

/// A single-entry change of one coaction lift.
fn perturb(b: &Bicomodule, rng: &mut ChaCha8Rng) -> Bicomodule {
    let f = b.carrier.field();
    let mut out = b.clone();
    let target = if rng.gen_bool(0.5) { &mut out.left_coaction } else { &mut out.right_coaction };
    let (r, c) = (rng.gen_range(0..target.rows()), rng.gen_range(0..target.cols()));
    let s = rng.gen_range(1..f.p());
    target.set(r, c, f.add(target.get(r, c), s));
    out
}

/// Bicomodules around each projective corpus coring of dimension at most 8:
/// transports of `C` along random linear isomorphisms, their perturbations
/// and their one-sided twists.
pub fn agreement_tally(seed: u64, rounds: usize) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally { valid: 0, invalid: 0, disagreements: Vec::new() };
    for (name, c) in coring_corpus() {
        if c.dim() > 8 || !c.is_projective(Side::Left) || !c.is_projective(Side::Right) {
            continue;
        }
        let f = c.carrier().field();
        let regular = Bicomodule::regular(&c);
        for round in 0..rounds {
            let phi = random_invertible(&mut rng, f, c.dim());
            let moved = transport(&regular, &phi);
            let mut cases = vec![("transport", moved.clone()), ("perturbed", perturb(&moved, &mut rng))];
            for side in [Side::Left, Side::Right] {
                if let Some(sigma) = random_linear_automorphism(&moved.carrier, side, &mut rng) {
                    cases.push(("twisted", twist(&moved, side, &sigma)));
                }
            }
            for (kind, b) in cases {
                let report = b.check().unwrap();
                let direct = report.direct.is_ok();
                match report.verdict() {
                    Ok(true) => tally.valid += 1,
                    Ok(false) => tally.invalid += 1,
                    Err(_) => tally.disagreements.push(format!("{name} round {round} {kind}: direct={direct}")),
                }
            }
        }
    }
    tally
}

/// `(f g)` computed straight from the lift of `Delta`, independently of the
/// dual ring's structure constants.
pub fn sweedler_product(c: &Coring, side: Side, f: &Matrix, g: &Matrix) -> Matrix {
    let field = f.field();
    let d = c.dim();
    let delta = c.delta_lift();
    let carrier = c.carrier();
    let mut cols = Vec::with_capacity(d);
    for u in 0..d {
        let mut acted = vec![0u64; d];
        for a in 0..d {
            for b in 0..d {
                let coef = delta.get(a * d + b, u);
                if coef == 0 {
                    continue;
                }
                // C*: f(c1) c2, then g; *C: c1 g(c2), then f
                let w = match side {
                    Side::Right => carrier.left_act(&f.col(a)).col(b),
                    Side::Left => carrier.right_act(&g.col(b)).col(a),
                };
                for (o, x) in acted.iter_mut().zip(w) {
                    *o = field.add(*o, field.mul(coef, x));
                }
            }
        }
        cols.push(acted);
    }
    let acted = Matrix::from_columns(field, d, &cols);
    match side {
        Side::Right => g.mul(&acted),
        Side::Left => f.mul(&acted),
    }
}
