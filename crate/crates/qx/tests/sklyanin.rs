mod common;

use common::{classical, leibniz, Shape};
use qx::identities::algebra::{comatrix_check, sdet_det2, sdet_explicit_check, sdet_gamma};
use qx::matrix_algebra::{det_q, quantum_minor, IndexSet};
use qx::ncalg::{is_central, Case, Element};
use qx::scalars::Scalar;
use qx::sklyanin::{cramer_products, sdet, sdet_explicit, sdet_minor, sklyanin_minor, x_pres};

fn shape(case: Case) -> Shape {
    match case {
        Case::O => Shape::Symmetric,
        Case::Sp => Shape::Antisymmetric,
    }
}

#[test]
fn sdet_o2_text() {
    assert_eq!(sdet(Case::O, 2).to_string(), "x[1,1]*x[2,2] - q*x[1,2]^2");
}

#[test]
fn det_q_classical_limit() {
    for n in 2..=3 {
        let full: Vec<usize> = (1..=n).collect();
        assert_eq!(classical(&det_q(n)), leibniz(Shape::Generic, &full, &full));
    }
    let i = IndexSet::new(vec![1, 3]).unwrap();
    let j = IndexSet::new(vec![2, 3]).unwrap();
    assert_eq!(classical(&quantum_minor(3, &i, &j).unwrap()), leibniz(Shape::Generic, &[1, 3], &[2, 3]));
}

#[test]
fn sdet_classical_limit() {
    for (case, n) in [(Case::O, 2), (Case::O, 3), (Case::Sp, 2), (Case::Sp, 4)] {
        let full: Vec<usize> = (1..=n).collect();
        assert_eq!(classical(&sdet(case, n)), leibniz(shape(case), &full, &full), "{} N={}", case, n);
    }
}

#[test]
fn sklyanin_minor_classical_limit() {
    let m = sklyanin_minor(Case::O, 3, &[1, 2], &[2, 3]).unwrap();
    assert_eq!(classical(&m), leibniz(Shape::Symmetric, &[1, 2], &[2, 3]));
    assert!(sklyanin_minor(Case::O, 3, &[1, 2], &[2]).is_err());
    assert!(sklyanin_minor(Case::O, 3, &[1, 4], &[2, 3]).is_err());
}

#[test]
fn principal_minor_of_full_set() {
    for (case, n) in [(Case::O, 3), (Case::Sp, 4)] {
        assert_eq!(sdet_minor(case, n, &IndexSet::full(n)), sdet(case, n));
    }
}

#[test]
fn explicit_formula_agrees() {
    for (case, n) in [(Case::O, 2), (Case::O, 3), (Case::O, 4), (Case::Sp, 2), (Case::Sp, 4)] {
        assert!(sdet_explicit(case, n).sub(&sdet(case, n)).normal_form().is_zero());
        let o = sdet_explicit_check(case, n).unwrap();
        assert!(o.holds);
        assert!(o.notes.iter().any(|s| s.contains("pi_2")));
    }
}

#[test]
fn gamma_factors() {
    let a: Vec<Scalar> = (1..=3).map(Scalar::a).collect();
    assert_eq!(sdet_gamma(Case::O, 3, &a), Scalar::a(1).mul(&Scalar::a(2)).mul(&Scalar::a(3)));
    let a: Vec<Scalar> = (1..=2).map(Scalar::a).collect();
    let want = Scalar::qpow(6).mul(&Scalar::a(1).mul(&Scalar::a(2)).pow(2));
    assert_eq!(sdet_gamma(Case::Sp, 4, &a), want);
}

#[test]
fn sdet_against_det_squared() {
    assert!(sdet_det2(Case::O, 2, true).unwrap().holds);
    assert!(sdet_det2(Case::Sp, 2, true).unwrap().holds);
}

#[test]
fn cramer() {
    for (case, n) in [(Case::O, 2), (Case::O, 3), (Case::Sp, 2)] {
        let (hx, xh) = cramer_products(case, n);
        let s = sdet(case, n);
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { s.clone() } else { Element::zero() };
                assert!(hx[i][j].sub(&want).normal_form().is_zero());
                assert!(xh[i][j].sub(&want).normal_form().is_zero());
            }
        }
        assert!(comatrix_check(case, n).unwrap().holds);
    }
}

#[test]
fn sdet_is_central() {
    for (case, n) in [(Case::O, 2), (Case::O, 3), (Case::Sp, 2), (Case::Sp, 4)] {
        assert!(is_central(&x_pres(case, n), &sdet(case, n)));
    }
    let m = sdet_minor(Case::O, 3, &IndexSet::new(vec![1, 2]).unwrap());
    assert!(!is_central(&x_pres(Case::O, 3), &m));
}
