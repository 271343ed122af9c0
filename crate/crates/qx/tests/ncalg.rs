mod common;

use common::binomial;
use proptest::prelude::*;
use qx::matrix_algebra::det_q;
use qx::ncalg::{basis_enumerate, is_central, linearly_independent, presentation, rank, Case, Element, PresKind};
use qx::scalars::Scalar;

fn nf(kind: PresKind, n: usize, src: &str) -> Element {
    let p = presentation(kind, n);
    Element::parse(&p, src).unwrap().normal_form()
}

#[test]
fn symmetry_relations_rewrite_lower_entries() {
    let o = presentation(PresKind::X(Case::O), 2);
    let x12 = Element::parse(&o, "x[1,2]").unwrap();
    assert_eq!(nf(PresKind::X(Case::O), 2, "x[2,1]"), x12.scale(&Scalar::qpow(-1)));
    assert_eq!(nf(PresKind::X(Case::O), 2, "x[2,1]").to_string(), "q^-1*x[1,2]");
    let sp = presentation(PresKind::X(Case::Sp), 2);
    let y12 = Element::parse(&sp, "x[1,2]").unwrap();
    assert_eq!(nf(PresKind::X(Case::Sp), 2, "x[2,1]"), y12.scale(&Scalar::q().neg()));
    assert!(nf(PresKind::X(Case::Sp), 2, "x[1,1]").is_zero());
}

#[test]
fn grammar_examples() {
    let p = presentation(PresKind::X(Case::O), 2);
    let e = Element::parse(&p, "x[1,2]^2").unwrap();
    assert_eq!(e.len(), 1);
    assert_eq!(e.to_string(), "x[1,2]^2");
    let m = presentation(PresKind::Mat, 2);
    let e = Element::parse(&m, "(q - q^-1)*t[1,2]*t[2,1]").unwrap();
    assert_eq!(e.len(), 1);
    assert_eq!(e.terms().next().unwrap().1, &Scalar::q().sub(&Scalar::qpow(-1)));
}

#[test]
fn parse_errors() {
    let p = presentation(PresKind::X(Case::O), 2);
    assert!(Element::parse(&p, "x[1,3]").is_err());
    assert!(Element::parse(&p, "t[1,2]").is_err());
    assert!(Element::parse(&p, "x[1,2").is_err());
}

#[test]
fn pbw_dimensions_match_polynomial_counts() {
    // a PBW basis in g generators has C(d + g - 1, d) words of degree d
    for (kind, n, g) in [
        (PresKind::Mat, 2, 4),
        (PresKind::Mat, 3, 9),
        (PresKind::X(Case::O), 2, 3),
        (PresKind::X(Case::O), 3, 6),
        (PresKind::X(Case::Sp), 4, 6),
    ] {
        let p = presentation(kind, n);
        for d in 0..=3 {
            assert_eq!(basis_enumerate(&p, d).len(), binomial(d + g - 1, d), "{} N={} d={}", kind.name(), n, d);
        }
    }
    let e = presentation(PresKind::Ext, 4);
    for d in 0..=5 {
        assert_eq!(basis_enumerate(&e, d).len(), binomial(4, d));
    }
}

#[test]
fn relations_vanish() {
    for (kind, n) in [(PresKind::Mat, 3), (PresKind::X(Case::O), 3), (PresKind::X(Case::Sp), 4), (PresKind::Ext, 4)] {
        assert!(qx::identities::algebra::presentation_relations(kind, n).holds, "{}", kind.name());
    }
}

#[test]
fn quantum_determinant_is_central() {
    for n in 2..=3 {
        assert!(is_central(&presentation(PresKind::Mat, n), &det_q(n)));
    }
    let p = presentation(PresKind::Mat, 2);
    assert!(!is_central(&p, &Element::parse(&p, "t[1,1]").unwrap()));
}

#[test]
fn rank_of_dependent_family() {
    let p = presentation(PresKind::Mat, 2);
    let a = Element::parse(&p, "t[1,1]").unwrap();
    let b = Element::parse(&p, "t[1,2]").unwrap();
    let c = a.add(&b.scale(&Scalar::q()));
    assert_eq!(rank(&[a.clone(), b.clone(), c.clone()]), 2);
    assert!(!linearly_independent(&[a.clone(), b.clone(), c]));
    assert!(linearly_independent(&[a, b]));
}

fn word(kind: PresKind, n: usize) -> impl Strategy<Value = Element> {
    let p = presentation(kind, n);
    let g = p.gens().len() as u8;
    (prop::collection::vec(0..g, 1..4), -2i32..=2).prop_map(move |(w, e)| {
        w.iter().fold(Element::scalar(Scalar::qpow(e)), |acc, &x| acc.mul_raw(&Element::gen(&p, x)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent(a in word(PresKind::X(Case::O), 3)) {
        let f = a.normal_form();
        prop_assert!(f.is_normal());
        prop_assert_eq!(f.normal_form(), f);
    }

    #[test]
    fn multiplication_is_associative(a in word(PresKind::Mat, 2), b in word(PresKind::Mat, 2), c in word(PresKind::Mat, 2)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn print_then_parse(a in word(PresKind::X(Case::Sp), 4), b in word(PresKind::X(Case::Sp), 4)) {
        let p = presentation(PresKind::X(Case::Sp), 4);
        let e = a.add(&b).normal_form();
        prop_assert_eq!(Element::parse(&p, &e.to_string()).unwrap().normal_form(), e);
    }

    #[test]
    fn exterior_squares_vanish(a in word(PresKind::Ext, 3)) {
        let f = a.normal_form();
        prop_assert!(f.mul(&f).is_zero() || f.degree() == Some(0));
    }
}
