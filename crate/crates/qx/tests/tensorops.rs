mod common;

use common::binomial;
use proptest::prelude::*;
use qx::identities::operator::{antisymmetrizer_checks, basic_r, braid, symmetrizer_checks, variant_ybe, ybe};
use qx::scalars::Scalar;
use qx::tensorops::{
    all_indices, antisymmetrizer, idx, inversions, permutation, permutations, r_matrix, r_minus, symmetrizer, TensorOp,
    Vector,
};

#[test]
fn antisymmetrizer_rank_is_binomial() {
    for n in 2..=4 {
        for m in 1..=n.min(3) {
            assert_eq!(antisymmetrizer(n, m, false).trace(), Scalar::from_int(binomial(n, m) as i64), "N={} m={}", n, m);
        }
    }
}

#[test]
fn symmetrizer_rank_is_multiset_count() {
    for n in 2..=3 {
        for m in 1..=3 {
            assert_eq!(symmetrizer(n, m).trace(), Scalar::from_int(binomial(n + m - 1, m) as i64));
        }
    }
}

#[test]
fn r_inverse_and_permutation() {
    for n in 2..=3 {
        assert!(r_matrix(n, false).compose(&r_minus(n)).equals(&TensorOp::identity(n, 2)));
        let p = permutation(n);
        assert!(p.compose(&p).equals(&TensorOp::identity(n, 2)));
    }
}

#[test]
fn operator_identities() {
    for n in 2..=3 {
        assert!(ybe(n).holds);
        assert!(braid(n).holds);
        assert!(variant_ybe(n).holds);
        assert!(basic_r(n).holds);
    }
    for m in 2..=3 {
        assert!(antisymmetrizer_checks(3, m).holds);
        assert!(symmetrizer_checks(3, m).holds);
    }
}

#[test]
fn permutation_signs() {
    let ps = permutations(4);
    assert_eq!(ps.len(), 24);
    assert_eq!(ps.iter().filter(|p| inversions(p) % 2 == 0).count(), 12);
    assert_eq!(inversions(&[3, 2, 1, 0]), 6);
}

#[test]
fn embedding_places_factors() {
    let p = permutation(2).embed(&[1, 2], 3);
    let v = Vector::<Scalar>::basis(2, &idx(&[0, 0, 1]));
    let w = p.apply(&v);
    assert_eq!(w.coeff(&idx(&[0, 1, 0])), Scalar::one());
    assert_eq!(all_indices(2, 3).len(), 8);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn compose_matches_sequential_apply(coeffs in prop::collection::vec(-3i64..=3, 9)) {
        let n = 3;
        let mut v = Vector::<Scalar>::zero(n, 2);
        for (k, c) in coeffs.iter().enumerate() {
            v.add_at(idx(&[k / 3, k % 3]), Scalar::from_int(*c));
        }
        let r = r_matrix(n, false);
        let p = permutation(n);
        let lhs = r.compose(&p).apply(&v);
        let rhs = r.apply(&p.apply(&v));
        for i in all_indices(n, 2) {
            prop_assert_eq!(lhs.coeff(&i), rhs.coeff(&i));
        }
    }

    #[test]
    fn antisymmetrizer_is_idempotent_on_vectors(coeffs in prop::collection::vec(-3i64..=3, 9), a in 0usize..3) {
        let mut v = Vector::<Scalar>::zero(3, 2);
        for (k, c) in coeffs.iter().enumerate() {
            v.add_at(idx(&[k / 3, k % 3]), Scalar::from_int(*c));
        }
        let op = antisymmetrizer(3, 2, false);
        let once = op.apply(&v);
        let twice = op.apply(&once);
        for i in all_indices(3, 2) {
            prop_assert_eq!(once.coeff(&i), twice.coeff(&i));
        }
        let diag = op.apply(&Vector::basis(3, &idx(&[a, a])));
        prop_assert!(diag.data.values().all(|c| c.is_zero()));
    }
}
