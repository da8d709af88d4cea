//! Minimal invariant subspaces of a set of matrices, Norton-style.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, Matrix, PrimeField, Subspace};

/// Upper bound on vectors spun while enumerating kernel points or, as a
/// last resort, every projective point of the ambient space.
const SPIN_BUDGET: u64 = 40_000;
const CANDIDATES: usize = 400;

/// Smallest subspace containing `vecs` and stable under every matrix in `gens`.
pub fn spin(field: PrimeField, n: usize, vecs: &[Vec<u64>], gens: &[Matrix]) -> Subspace {
    let mut ech = Echelon::new(field, n);
    let mut queue: Vec<Vec<u64>> = Vec::new();
    for v in vecs {
        let mut w = v.clone();
        ech.reduce(&mut w);
        if w.iter().any(|&x| x != 0) {
            ech.insert(v.clone());
            queue.push(v.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if ech.is_full() {
            break;
        }
        for g in gens {
            let w = g.mul_vec(&v);
            if ech.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    Subspace::from_echelon(&ech)
}

/// Calls `visit` on one representative of every line in the span of `basis`
/// (the representative has leading coefficient 1); stops once `visit` returns true.
fn for_each_point(field: PrimeField, basis: &[Vec<u64>], mut visit: impl FnMut(&[u64]) -> bool) {
    let k = basis.len();
    if k == 0 {
        return;
    }
    let p = field.p();
    let n = basis[0].len();
    for lead in 0..k {
        // coefficients: 1 at `lead`, free at positions after it, zero before
        let free = k - lead - 1;
        let mut digits = vec![0u64; free];
        let mut v = basis[lead].clone();
        loop {
            if visit(&v) {
                return;
            }
            // odometer step, updating v incrementally
            let mut pos = 0;
            loop {
                if pos == free {
                    break;
                }
                digits[pos] += 1;
                let b = &basis[lead + 1 + pos];
                for t in 0..n {
                    v[t] = (v[t] + b[t]) % p;
                }
                if digits[pos] < p {
                    break;
                }
                digits[pos] = 0;
                pos += 1;
            }
            if pos == free {
                break;
            }
        }
    }
}

fn point_count(p: u64, k: usize) -> u64 {
    let mut total: u64 = 0;
    let mut pw: u64 = 1;
    for _ in 0..k {
        total = total.saturating_add(pw);
        pw = pw.saturating_mul(p);
    }
    total
}

fn perp(space: &Subspace) -> Subspace {
    space.basis().kernel()
}

struct Search<'a> {
    field: PrimeField,
    rng: &'a mut ChaCha8Rng,
}

impl Search<'_> {
    fn random_scalar(&mut self) -> u64 {
        self.rng.gen_range(0..self.field.p())
    }

    /// A proper nonzero invariant subspace, `None` if the action is irreducible.
    fn proper_invariant(&mut self, n: usize, gens: &[Matrix]) -> Result<Option<Subspace>> {
        let f = self.field;
        if n <= 1 {
            return Ok(None);
        }
        if gens.is_empty() || gens.iter().all(is_scalar) {
            return Ok(Some(Subspace::from_vectors(f, n, vec![unit(n, 0)])));
        }
        let transposed: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
        let p = f.p();
        let mut pool: Vec<Matrix> = gens.to_vec();
        let mut best: Option<(Matrix, usize)> = None;
        for attempt in 0..CANDIDATES {
            let a = self.rng.gen_range(0..pool.len());
            let b = self.rng.gen_range(0..pool.len());
            let c = self.rng.gen_range(0..pool.len());
            let s = self.random_scalar();
            let next = pool[a].mul(&pool[b]).add(&pool[c].scale(s));
            if pool.len() < 16 {
                pool.push(next.clone());
            } else {
                let slot = self.rng.gen_range(0..pool.len());
                pool[slot] = next.clone();
            }
            let lambdas: Vec<u64> = if p <= 31 {
                (0..p).collect()
            } else {
                let mut l = vec![0];
                l.extend((0..8).map(|_| self.random_scalar()));
                l
            };
            for lambda in lambdas {
                let theta = next.sub(&Matrix::identity(f, n).scale(lambda));
                let kernel = theta.kernel();
                let k = kernel.dim();
                if k == 0 || k == n {
                    continue;
                }
                if best.as_ref().is_none_or(|(_, bk)| k < *bk) {
                    best = Some((theta, k));
                }
            }
            if let Some((_, 1)) = best {
                break;
            }
            if attempt >= 40 && best.as_ref().is_some_and(|(_, k)| point_count(p, *k) <= SPIN_BUDGET / 4) {
                break;
            }
        }
        if let Some((theta, k)) = best {
            if point_count(p, k) <= SPIN_BUDGET {
                let kernel = theta.kernel().basis_vectors();
                let mut found = None;
                for_each_point(f, &kernel, |v| {
                    let s = spin(f, n, &[v.to_vec()], gens);
                    if s.dim() < n {
                        found = Some(s);
                        true
                    } else {
                        false
                    }
                });
                if found.is_some() {
                    return Ok(found);
                }
                let dual_kernel = theta.transpose().kernel();
                let w = dual_kernel.basis_vectors().into_iter().next().expect("same nullity as theta");
                let s = spin(f, n, &[w], &transposed);
                if s.dim() == n {
                    return Ok(None);
                }
                return Ok(Some(perp(&s)));
            }
        }
        self.exhaustive(n, gens)
    }

    fn exhaustive(&mut self, n: usize, gens: &[Matrix]) -> Result<Option<Subspace>> {
        let f = self.field;
        if point_count(f.p(), n) > SPIN_BUDGET {
            return Err(Error::Budget(format!(
                "irreducibility undecided for a {n}-dimensional action over GF({})",
                f.p()
            )));
        }
        let basis: Vec<Vec<u64>> = (0..n).map(|i| unit(n, i)).collect();
        let mut found = None;
        for_each_point(f, &basis, |v| {
            let s = spin(f, n, &[v.to_vec()], gens);
            if s.dim() < n {
                found = Some(s);
                true
            } else {
                false
            }
        });
        Ok(found)
    }

    fn simple(&mut self, n: usize, gens: &[Matrix]) -> Result<Subspace> {
        let f = self.field;
        match self.proper_invariant(n, gens)? {
            None => Ok(Subspace::full(f, n)),
            Some(sub) => {
                let restricted: Vec<Matrix> = gens
                    .iter()
                    .map(|g| sub.restrict(g).expect("invariant subspace"))
                    .collect();
                let inner = self.simple(sub.dim(), &restricted)?;
                Ok(inner.image(&sub.inclusion()))
            }
        }
    }
}

fn is_scalar(g: &Matrix) -> bool {
    let n = g.rows();
    let d = if n > 0 { g.get(0, 0) } else { 0 };
    (0..n).all(|i| (0..n).all(|j| g.get(i, j) == if i == j { d } else { 0 }))
}

fn unit(n: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// A nonzero invariant subspace of GF(p)^n with no proper nonzero invariant subspace.
pub fn find_simple_subspace(field: PrimeField, n: usize, gens: &[Matrix], seed: u64) -> Result<Subspace> {
    if n == 0 {
        return Err(Error::ZeroModule);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Search { field, rng: &mut rng }.simple(n, gens)
}

/// Whether GF(p)^n has no invariant subspaces besides 0 and itself.
pub fn is_irreducible_action(field: PrimeField, n: usize, gens: &[Matrix], seed: u64) -> Result<bool> {
    if n == 0 {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(Search { field, rng: &mut rng }.proper_invariant(n, gens)?.is_none())
}

/// Chain `0 = V_0 < V_1 < ... < V_r = GF(p)^n` of invariant subspaces with
/// irreducible successive quotients.
pub fn composition_series(field: PrimeField, n: usize, gens: &[Matrix], seed: u64) -> Result<Vec<Subspace>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut search = Search { field, rng: &mut rng };
    let mut chain = vec![Subspace::zero(field, n)];
    loop {
        let current = chain.last().expect("nonempty").clone();
        if current.is_full() {
            return Ok(chain);
        }
        let q = crate::linalg::Quotient::new(current.clone());
        let induced: Vec<Matrix> = gens
            .iter()
            .map(|g| q.induced_endomorphism(g).expect("invariant subspace"))
            .collect();
        let simple = search.simple(q.dim(), &induced)?;
        let lifted = simple.image(q.section());
        chain.push(current.sum(&lifted).expect("same ambient"));
    }
}

/// Matrices of `gens` on each factor `V_{i+1} / V_i` of a composition series.
pub fn composition_factors(field: PrimeField, series: &[Subspace], gens: &[Matrix]) -> Vec<Vec<Matrix>> {
    let _ = field;
    series
        .windows(2)
        .map(|w| {
            let sub = &w[1];
            let restricted: Vec<Matrix> = gens.iter().map(|g| sub.restrict(g).expect("invariant")).collect();
            // V_i inside V_{i+1}, in the coordinates of V_{i+1}
            let inner_vecs = w[0]
                .basis_vectors()
                .into_iter()
                .map(|v| sub.coordinates(&v).expect("nested chain"));
            let inner = Subspace::from_vectors(sub.field(), sub.dim(), inner_vecs);
            let q = crate::linalg::Quotient::new(inner);
            restricted
                .iter()
                .map(|g| q.induced_endomorphism(g).expect("invariant"))
                .collect()
        })
        .collect()
}
