mod common;

use std::sync::Arc;

use coringlab::algebra::{radical, Ideal};
use coringlab::bimodule::{tensor_over, Bimodule};
use coringlab::linalg::{Matrix, PrimeField, Subspace};
use proptest::prelude::*;

use common::{gf, matrix_subalgebra};

fn matrix(p: u64, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(0..p, rows * cols)
        .prop_map(move |data| Matrix::new(PrimeField::new(p).unwrap(), rows, cols, data).unwrap())
}

fn shaped(p: u64) -> impl Strategy<Value = Matrix> {
    (1usize..6, 1usize..6).prop_flat_map(move |(r, c)| matrix(p, r, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_nullity(m in prop_oneof![shaped(2), shaped(3), shaped(7)]) {
        let ker = m.kernel();
        prop_assert_eq!(m.rank() + ker.dim(), m.cols());
        for v in ker.basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn solve_recovers_a_preimage(m in matrix(5, 4, 3), x in prop::collection::vec(0u64..5, 3)) {
        let b = m.mul_vec(&x);
        let y = m.solve(&b).expect("b is in the image");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn inverses_are_two_sided(m in matrix(3, 4, 4)) {
        if let Some(inv) = m.inverse() {
            let id = Matrix::identity(m.field(), 4);
            prop_assert_eq!(m.mul(&inv), id.clone());
            prop_assert_eq!(inv.mul(&m), id);
        } else {
            prop_assert!(m.rank() < 4);
        }
    }

    #[test]
    fn subspace_dimension_formula(u in matrix(2, 5, 3), w in matrix(2, 5, 2)) {
        let f = gf(2);
        let u = Subspace::from_vectors(f, 5, u.columns());
        let w = Subspace::from_vectors(f, 5, w.columns());
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(sum.contains_subspace(&u) && u.contains_subspace(&meet) && w.contains_subspace(&meet));
    }

    #[test]
    fn radical_is_a_nilpotent_ideal_with_semisimple_quotient(
        gens in prop::collection::vec(matrix(3, 2, 2), 1..3),
    ) {
        let (a, _) = matrix_subalgebra(gf(3), 2, &gens);
        let a = Arc::new(a);
        let j: Ideal = radical(&a);
        prop_assert!(a.is_two_sided_ideal(&a.radical_space().clone()));
        prop_assert!(j.is_nilpotent_within(a.dim()));
        let quotient = a.quotient_by(&j).unwrap();
        prop_assert!(quotient.is_semisimple());
    }

    #[test]
    fn tensoring_with_the_algebra_is_the_identity(
        gens in prop::collection::vec(matrix(2, 3, 3), 1..3),
    ) {
        let (a, basis) = matrix_subalgebra(gf(2), 3, &gens);
        let a = Arc::new(a);
        let natural = Bimodule::left_module(a.clone(), 3, basis).unwrap();
        let t = tensor_over(&Bimodule::regular(&a), &natural).unwrap();
        prop_assert_eq!(t.dim(), 3);
    }
}
