use proptest::prelude::*;
use qx::scalars::{gauss_number, parse_scalar, q_factorial, q_number, qdiff, Rat, Scalar};

fn laurent() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i32..=3, -4i64..=4), 0..4).prop_map(|ts| {
        ts.into_iter().fold(Scalar::zero(), |acc, (e, c)| acc.add(&Scalar::qpow(e).mul(&Scalar::from_int(c))))
    })
}

fn with_a() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent(), 0i64..=2).prop_map(|(x, y, k)| x.add(&y.mul(&Scalar::a(1).pow(k as u32))))
}

#[test]
fn q_times_inverse_is_one() {
    let q = Scalar::q();
    assert!(q.mul(&q.inv().unwrap()).is_one());
    assert_eq!(Scalar::qpow(3).mul(&Scalar::qpow(-5)), Scalar::qpow(-2));
}

#[test]
fn gauss_numbers_from_quotient() {
    // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
    for n in 1..6 {
        let want = (0..n).fold(Scalar::zero(), |acc, k| acc.add(&Scalar::qpow(n - 1 - 2 * k)));
        assert_eq!(gauss_number(n), want);
    }
    assert_eq!(gauss_number(2).mul(&qdiff()), Scalar::qpow(2).sub(&Scalar::qpow(-2)));
}

#[test]
fn q_factorial_at_q4() {
    let f = q_factorial(2, &Scalar::qpow(4));
    assert_eq!(f, Scalar::one().add(&Scalar::qpow(4)));
    assert_eq!(q_number(3, &Scalar::one()), Scalar::from_int(3));
}

#[test]
fn parse_examples() {
    let x = parse_scalar("(q - q^-1)^2").unwrap();
    assert_eq!(x, Scalar::qpow(2).sub(&Scalar::from_int(2)).add(&Scalar::qpow(-2)));
    let y = parse_scalar("a1/(1 + a1)").unwrap();
    assert!(!y.is_laurent());
    assert!(parse_scalar("q^").is_err());
    assert!(parse_scalar("1/0").is_err());
}

#[test]
fn substitution_at_one() {
    let x = parse_scalar("q^2 - 3*q^-1 + 5").unwrap();
    assert_eq!(x.substitute(0, &Rat::one()).unwrap(), Scalar::from_int(3));
}

proptest! {
    #[test]
    fn ring_axioms(a in with_a(), b in with_a(), c in with_a()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn division_inverts_multiplication(a in with_a(), b in with_a()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).checked_div(&b).unwrap(), a.clone());
        let r = a.checked_div(&b).unwrap();
        prop_assert_eq!(r.mul(&b), a);
    }

    #[test]
    fn bar_is_an_involutive_ring_map(a in with_a(), b in with_a()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!(a.mul(&b).bar(), a.bar().mul(&b.bar()));
        prop_assert_eq!(a.add(&b).bar(), a.bar().add(&b.bar()));
    }

    #[test]
    fn print_then_parse(a in with_a(), b in with_a()) {
        prop_assume!(!b.is_zero());
        let x = a.checked_div(&b).unwrap();
        prop_assert_eq!(parse_scalar(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn gauss_numbers_are_bar_invariant(n in 0i32..8) {
        prop_assert_eq!(gauss_number(n).bar(), gauss_number(n));
    }
}
