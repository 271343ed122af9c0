use super::gcd::{gcd, monic};
use super::poly::{Mono, Poly};
use super::rat::Rat;
use super::text::{parse_scalar, poly_to_string, ParseError};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division")]
    Inexact,
}

/// A rational function in `q`, `l`, `m`, `a1` .. `a9`.
///
/// Canonical form: the denominator is a polynomial with no monomial factor,
/// coprime to the numerator, with lex-leading coefficient 1. Monomials are
/// units, so they always live in the numerator.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn from_int(v: i64) -> Scalar {
        Scalar { num: Poly::constant(Rat::Int(v)), den: Poly::one() }
    }

    pub fn from_rat(r: Rat) -> Scalar {
        Scalar { num: Poly::constant(r), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Scalar {
        Scalar { num: p, den: Poly::one() }
    }

    pub fn var(v: usize) -> Scalar {
        Scalar::from_poly(Poly::monomial(Mono::var(v, 1), Rat::one()))
    }

    pub fn q() -> Scalar {
        Scalar::var(0)
    }

    /// `q^e`.
    pub fn qpow(e: i32) -> Scalar {
        Scalar::from_poly(Poly::monomial(Mono::var(0, e as i16), Rat::one()))
    }

    /// `(-q)^e`.
    pub fn mqpow(e: i32) -> Scalar {
        let c = if e.rem_euclid(2) == 0 { Rat::one() } else { Rat::Int(-1) };
        Scalar::from_poly(Poly::monomial(Mono::var(0, e as i16), c))
    }

    /// `a_k` for `k >= 1`.
    pub fn a(k: usize) -> Scalar {
        Scalar::var(k + 2)
    }

    pub fn lambda() -> Scalar {
        Scalar::var(1)
    }

    pub fn mu() -> Scalar {
        Scalar::var(2)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// Single signed monomial with integer coefficient (prints without parentheses).
    pub fn is_simple(&self) -> bool {
        self.den.is_one() && self.num.len() <= 1
    }

    pub fn from_fraction(num: Poly, den: Poly) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        let md = den.min_mono();
        let unit = Mono::one().div(&md);
        let mut den = den.shift(&unit);
        let mut num = num.shift(&unit);
        if den.is_monomial() {
            let (m, c) = den.leading().cloned().unwrap();
            let inv = Mono::one().div(&m);
            return Ok(Scalar { num: num.shift(&inv).scale(&Rat::one().div(&c)), den: Poly::one() });
        }
        let mn = num.min_mono();
        let num_poly = num.shift(&Mono::one().div(&mn));
        let g = gcd(&num_poly, &den);
        if !g.is_one() {
            num = num.exact_div(&g).expect("gcd divides numerator");
            den = den.exact_div(&g).expect("gcd divides denominator");
        }
        let lc = den.leading().unwrap().1.clone();
        if !lc.is_one() {
            let inv = Rat::one().div(&lc);
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        if den.is_one() {
            return Ok(Scalar { num, den: Poly::one() });
        }
        debug_assert_eq!(den, monic(&den));
        Ok(Scalar { num, den })
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.add(&o.num), den: Poly::one() };
        }
        if self.den == o.den {
            return Scalar::from_fraction(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Scalar::from_fraction(n, self.den.mul(&o.den)).unwrap()
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.mul(&o.num), den: Poly::one() };
        }
        Scalar::from_fraction(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }

    pub fn scale_rat(&self, c: &Rat) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Scalar::from_fraction(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        if o.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.den.is_one() && o.den.is_one() {
            if let Some(qt) = self.num.exact_div(&o.num) {
                return Ok(Scalar { num: qt, den: Poly::one() });
            }
        }
        Scalar::from_fraction(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    /// Division that must stay inside the Laurent polynomials.
    pub fn exact_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        let r = self.checked_div(o)?;
        if r.is_laurent() {
            Ok(r)
        } else {
            Err(ScalarError::Inexact)
        }
    }

    pub fn checked_pow(&self, e: i32) -> Result<Scalar, ScalarError> {
        if e >= 0 {
            Ok(Scalar { num: self.num.pow(e as u32), den: self.den.pow(e as u32) })
        } else {
            let i = self.inv()?;
            Ok(Scalar { num: i.num.pow((-e) as u32), den: i.den.pow((-e) as u32) })
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        Scalar { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// The substitution `q -> q^-1`.
    pub fn bar(&self) -> Scalar {
        Scalar::from_fraction(self.num.invert_var(0), self.den.invert_var(0)).unwrap()
    }

    /// Specializes variable `v` to a nonzero rational.
    pub fn substitute(&self, v: usize, x: &Rat) -> Result<Scalar, ScalarError> {
        Scalar::from_fraction(self.num.substitute(v, x), self.den.substitute(v, x))
    }

    /// Leading term of a Laurent numerator, used to detect signed monomials.
    pub fn as_signed_monomial(&self) -> Option<(Mono, Rat)> {
        if self.den.is_one() && self.num.len() == 1 {
            self.num.leading().cloned()
        } else {
            None
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", poly_to_string(&self.num))
        } else {
            if self.num.len() == 1 {
                write!(f, "{}/({})", poly_to_string(&self.num), poly_to_string(&self.den))
            } else {
                write!(f, "({})/({})", poly_to_string(&self.num), poly_to_string(&self.den))
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl std::str::FromStr for Scalar {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Scalar, ParseError> {
        parse_scalar(s)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Scalar {
        Scalar::from_int(v)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                Scalar::$m(self, o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                Scalar::$m(&self, &o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                Scalar::$m(&self, o)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on a zero divisor; use `checked_div` when that can happen.
    fn div(self, o: &Scalar) -> Scalar {
        self.checked_div(o).expect("scalar division by zero")
    }
}

impl std::ops::Div<Scalar> for Scalar {
    type Output = Scalar;
    fn div(self, o: Scalar) -> Scalar {
        self.checked_div(&o).expect("scalar division by zero")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(src: &str) -> Scalar {
        src.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(s("q - q^-1") * s("q + q^-1"), s("q^2 - q^-2"));
    }

    #[test]
    fn antisymmetrizer_entry_ratio() {
        let r = s("1 - q^-2").checked_div(&s("q^2 - q^-2")).unwrap();
        assert_eq!(r, s("q^-1/(q + q^-1)"));
        assert_eq!(r.to_string(), "1/(q^2 + 1)");
    }

    #[test]
    fn one_over_one() {
        assert_eq!(s("1").checked_div(&s("1")).unwrap(), Scalar::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(s("q").checked_div(&s("q - q")), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn bar_examples() {
        assert_eq!(s("q - q^-1").bar(), s("q^-1 - q"));
        assert_eq!(s("1 + q^2").bar(), s("1 + q^-2"));
    }

    #[test]
    fn canonical_denominator() {
        let a = s("(2*q + 2)/(4*q^2 - 4)");
        assert_eq!(a.den(), &s("q - 1").num().clone());
        assert_eq!(a, s("1/2/(q - 1)"));
    }
}
