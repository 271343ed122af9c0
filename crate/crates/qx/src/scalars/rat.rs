//! Exact rational numbers with a machine-integer fast path.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// An exact rational. Values that are integers fitting in `i64` are always
/// stored as `Int`, so structural equality is numeric equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Rat {
    Int(i64),
    Big(BigRational),
}

impl Rat {
    pub fn zero() -> Rat {
        Rat::Int(0)
    }

    pub fn one() -> Rat {
        Rat::Int(1)
    }

    pub fn from_big(r: BigRational) -> Rat {
        if r.denom().is_one() {
            if let Some(v) = r.numer().to_i64() {
                return Rat::Int(v);
            }
        }
        Rat::Big(r)
    }

    pub fn from_frac(n: i64, d: i64) -> Rat {
        assert!(d != 0, "zero denominator");
        Rat::from_big(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Int(v) => BigRational::from_integer(BigInt::from(*v)),
            Rat::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Int(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Int(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Int(v) => *v < 0,
            Rat::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Int(_) => true,
            Rat::Big(r) => r.denom().is_one(),
        }
    }

    pub fn add(&self, o: &Rat) -> Rat {
        if let (Rat::Int(a), Rat::Int(b)) = (self, o) {
            if let Some(s) = a.checked_add(*b) {
                return Rat::Int(s);
            }
        }
        Rat::from_big(self.to_big() + o.to_big())
    }

    pub fn sub(&self, o: &Rat) -> Rat {
        if let (Rat::Int(a), Rat::Int(b)) = (self, o) {
            if let Some(s) = a.checked_sub(*b) {
                return Rat::Int(s);
            }
        }
        Rat::from_big(self.to_big() - o.to_big())
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        if let (Rat::Int(a), Rat::Int(b)) = (self, o) {
            if let Some(s) = a.checked_mul(*b) {
                return Rat::Int(s);
            }
        }
        Rat::from_big(self.to_big() * o.to_big())
    }

    /// Panics on division by zero; callers check first.
    pub fn div(&self, o: &Rat) -> Rat {
        assert!(!o.is_zero(), "rational division by zero");
        if let (Rat::Int(a), Rat::Int(b)) = (self, o) {
            if *b != 0 && a % b == 0 {
                if let Some(v) = a.checked_div(*b) {
                    return Rat::Int(v);
                }
            }
        }
        Rat::from_big(self.to_big() / o.to_big())
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Int(v) => match v.checked_neg() {
                Some(n) => Rat::Int(n),
                None => Rat::from_big(-self.to_big()),
            },
            Rat::Big(r) => Rat::from_big(-r.clone()),
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Rat::Int(v) => BigInt::from(*v),
            Rat::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Rat::Int(_) => BigInt::one(),
            Rat::Big(r) => r.denom().clone(),
        }
    }
}

impl From<i64> for Rat {
    fn from(v: i64) -> Rat {
        Rat::Int(v)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::Int(v) => write!(f, "{}", v),
            Rat::Big(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Default for Rat {
    fn default() -> Rat {
        Rat::zero()
    }
}

impl Zero for Rat {
    fn zero() -> Rat {
        Rat::Int(0)
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
}

impl std::ops::Add for Rat {
    type Output = Rat;
    fn add(self, o: Rat) -> Rat {
        Rat::add(&self, &o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes() {
        let a = Rat::Int(i64::MAX);
        let b = a.add(&Rat::one());
        assert!(matches!(b, Rat::Big(_)));
        assert_eq!(b.sub(&Rat::one()), a);
    }

    #[test]
    fn fractions_normalize() {
        assert_eq!(Rat::from_frac(4, 2), Rat::Int(2));
        assert_eq!(Rat::from_frac(1, 2).mul(&Rat::Int(2)), Rat::one());
        assert_eq!(Rat::from_frac(1, 3).to_string(), "1/3");
    }
}
