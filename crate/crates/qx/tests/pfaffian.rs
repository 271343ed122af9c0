mod common;

use common::{classical, cmul, leibniz, matching_pf, Shape};
use qx::identities::algebra::{center_pf, omega_power_check, pf_orthogonality, pf_shuffle_vs_def, plucker, sdet_pf};
use qx::matrix_algebra::IndexSet;
use qx::ncalg::{is_central, Case};
use qx::pfaffian::{pf, pf_definition_of, pf_minor, plucker_check, shuffles};
use qx::scalars::Scalar;
use qx::sklyanin::{sdet, x_mat, x_pres};

#[test]
fn pf4_text() {
    assert_eq!(pf(4).to_string(), "x[1,2]*x[3,4] - q*x[1,3]*x[2,4] + q^2*x[1,4]*x[2,3]");
    assert_eq!(pf(2).to_string(), "x[1,2]");
}

#[test]
fn classical_limit_is_matching_expansion() {
    for n in [2, 4, 6] {
        let full: Vec<usize> = (1..=n).collect();
        assert_eq!(classical(&pf(n)), matching_pf(&full), "N={}", n);
    }
    for s in IndexSet::all_subsets(6).into_iter().filter(|s| s.len() == 4) {
        assert_eq!(classical(&pf_minor(6, &s)), matching_pf(s.as_slice()));
    }
}

#[test]
fn classical_pf_squared_is_det() {
    // oracle self-check: Pf^2 = det for antisymmetric matrices
    let full: Vec<usize> = (1..=4).collect();
    let p = matching_pf(&full);
    assert_eq!(cmul(&p, &p), leibniz(Shape::Antisymmetric, &full, &full));
}

#[test]
fn shuffle_count() {
    // (2r)! / (2^r r!)
    assert_eq!(shuffles(4).len(), 3);
    assert_eq!(shuffles(6).len(), 15);
}

#[test]
fn definition_equals_shuffle() {
    let x = x_mat(Case::Sp, 4);
    let d = pf_definition_of(&x, &[1, 2, 3, 4]).unwrap();
    assert!(d.sub(&pf(4)).normal_form().is_zero());
    assert!(pf_shuffle_vs_def(4, 4).unwrap().holds);
}

#[test]
fn sdet_is_pf_squared() {
    for n in [2, 4] {
        let p = pf(n);
        let want = p.mul(&p).scale(&Scalar::qpow(3 * (n as i32) / 2));
        assert!(sdet(Case::Sp, n).sub(&want).normal_form().is_zero());
        assert!(sdet_pf(n, n == 2).unwrap().holds);
    }
}

#[test]
fn pfaffian_identities() {
    for n in [2, 4] {
        assert!(pf_orthogonality(n).unwrap().holds);
        assert!(omega_power_check(n).unwrap().holds);
        assert!(center_pf(n).unwrap().holds);
        assert!(is_central(&x_pres(Case::Sp, n), &pf(n)));
    }
    assert!(plucker_check(4));
    assert!(plucker(4).unwrap().holds);
}
