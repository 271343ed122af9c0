//! q-numbers, q-factorials and the bar involution helpers.

use super::scalar::Scalar;

/// `[n]_v = 1 + v + ... + v^(n-1)`.
pub fn q_number(n: u32, base: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    let mut p = Scalar::one();
    for _ in 0..n {
        acc = &acc + &p;
        p = &p * base;
    }
    acc
}

/// `[n]_v! = [1]_v [2]_v ... [n]_v`, with `[0]_v! = 1`.
pub fn q_factorial(n: u32, base: &Scalar) -> Scalar {
    (1..=n).fold(Scalar::one(), |acc, k| &acc * &q_number(k, base))
}

/// `(q^n - q^-n) / (q - q^-1)`.
pub fn gauss_number(n: i32) -> Scalar {
    let num = Scalar::qpow(n) - Scalar::qpow(-n);
    let den = Scalar::qpow(1) - Scalar::qpow(-1);
    num.checked_div(&den).expect("q - q^-1 is nonzero")
}

/// `q - q^-1`, the ubiquitous structure constant.
pub fn qdiff() -> Scalar {
    Scalar::qpow(1) - Scalar::qpow(-1)
}

pub fn bar_involution(a: &Scalar) -> Scalar {
    a.bar()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(src: &str) -> Scalar {
        src.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(q_number(2, &s("q^2")), s("1 + q^2"));
        assert_eq!(q_factorial(0, &s("q")), Scalar::one());
        assert_eq!(q_factorial(2, &s("q^4")), s("1 + q^4"));
        assert_eq!(gauss_number(2), s("q + q^-1"));
        assert_eq!(gauss_number(3), s("q^2 + 1 + q^-2"));
    }

    #[test]
    fn factorial_recursion() {
        let v = s("q^2");
        for n in 0..=8 {
            assert_eq!(q_factorial(n, &v) * q_number(n + 1, &v), q_factorial(n + 1, &v));
        }
    }
}
