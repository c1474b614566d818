use proptest::prelude::*;

use polyfock_core::crystal::Crystal;
use polyfock_core::exactla::{Field, Matrix, PrimeField, Rationals, Subspace};
use polyfock_core::fock::{commutator_defect, FockVector};
use polyfock_core::partitions::{p_core, p_weight, partitions_of};
use polyfock_core::weights::wt;
use polyfock_core::{Modulus, Partition, Residue};

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..7, 0..6).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn same_size_pair() -> impl Strategy<Value = (Partition, Partition)> {
    (0usize..16).prop_flat_map(|n| {
        let all = partitions_of(n);
        (prop::sample::select(all.clone()), prop::sample::select(all))
    })
}

fn modulus() -> impl Strategy<Value = Modulus> {
    prop::sample::select(vec![0u32, 2, 3, 5]).prop_map(|p| Modulus::new(p).unwrap())
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..4, c), r))
}

fn build<F: Field>(field: &F, rows: &[Vec<i64>]) -> Matrix<F::Elem> {
    Matrix::from_fn(rows.len(), rows[0].len(), |r, c| field.from_i64(rows[r][c]))
}

fn rank_nullity<F: Field>(field: &F, rows: &[Vec<i64>]) -> Result<(), TestCaseError> {
    let a = build(field, rows);
    let kernel = a.kernel_basis(field);
    prop_assert_eq!(a.rank(field) + kernel.len(), a.cols());
    for v in &kernel {
        prop_assert!(a.apply(field, v).iter().all(|x| field.is_zero(x)));
    }
    let image = a.image_basis(field);
    prop_assert_eq!(image.len(), a.rank(field));
    prop_assert_eq!(a.transpose().rank(field), a.rank(field));
    let span = Subspace::span(field, a.rows(), image);
    for c in 0..a.cols() {
        prop_assert!(span.contains(field, &a.column(c)));
    }
    Ok(())
}

proptest! {
    #[test]
    fn partition_text_round_trip(lambda in partition()) {
        let text = lambda.to_string();
        prop_assert_eq!(text.parse::<Partition>().unwrap(), lambda);
    }

    #[test]
    fn conjugate_involution(lambda in partition()) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
    }

    #[test]
    fn cores_determine_weights((lambda, mu) in same_size_pair(), p in prop::sample::select(vec![2u32, 3, 5])) {
        let m = Modulus::new(p).unwrap();
        prop_assert_eq!(p_core(&lambda, m) == p_core(&mu, m), wt(&lambda, m) == wt(&mu, m));
        prop_assert_eq!(p_weight(&lambda, m).unwrap() * p as usize + p_core(&lambda, m).size(), lambda.size());
    }

    #[test]
    fn commutators_vanish(lambda in partition(), p in modulus(), i in -3i64..6, j in -3i64..6) {
        let (i, j) = (p.reduce(i), p.reduce(j));
        let v = FockVector::basis(p, lambda);
        prop_assert!(commutator_defect(i, j, &v).is_zero());
    }

    #[test]
    fn crystal_partial_inverse(lambda in partition(), p in modulus(), i in -3i64..6) {
        let i: Residue = p.reduce(i);
        let c = Crystal::new(p);
        if let Some(mu) = c.ftilde(i, &lambda) {
            prop_assert_eq!(c.etilde(i, &mu), Some(lambda.clone()));
        }
    }

    #[test]
    fn linear_algebra_over_q(rows in small_matrix()) {
        rank_nullity(&Rationals, &rows)?;
    }

    #[test]
    fn linear_algebra_over_f7(rows in small_matrix()) {
        rank_nullity(&PrimeField::new(7).unwrap(), &rows)?;
    }

    #[test]
    fn incremental_span(rows in small_matrix()) {
        let f = PrimeField::new(5).unwrap();
        let vectors: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
        let mut s = Subspace::zero(vectors[0].len());
        for v in &vectors {
            s.insert(&f, v);
        }
        prop_assert_eq!(s, Subspace::span(&f, vectors[0].len(), vectors));
    }

    #[test]
    fn eigenspaces_are_bounded(rows in prop::collection::vec(prop::collection::vec(-2i64..3, 4), 4)) {
        let q = Rationals;
        let a = build(&q, &rows);
        let total: usize = (-8..=8).map(|v| a.generalized_eigenspace(&q, &q.from_i64(v)).len()).sum();
        prop_assert!(total <= 4);
    }
}
