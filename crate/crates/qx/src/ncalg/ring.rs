use super::element::Element;
use crate::scalars::Scalar;

/// Coefficient ring for matrices and tensor operators. Multiplication need
/// not commute; scalars are central.
pub trait Ring: Clone + Send + Sync + std::fmt::Debug {
    fn zero() -> Self;
    fn from_scalar(s: Scalar) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;
    /// Exact zero test; elements are compared in normal form.
    fn is_zero(&self) -> bool;
    /// Cheap structural zero test (no normal form).
    fn vanishes(&self) -> bool;

    fn one() -> Self {
        Self::from_scalar(Scalar::one())
    }

    fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn from_scalar(s: Scalar) -> Self {
        s
    }
    fn add(&self, o: &Self) -> Self {
        Scalar::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Scalar::mul(self, o)
    }
    fn scale(&self, s: &Scalar) -> Self {
        Scalar::mul(self, s)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn vanishes(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl Ring for Element {
    fn zero() -> Self {
        Element::zero()
    }
    fn from_scalar(s: Scalar) -> Self {
        Element::scalar(s)
    }
    fn add(&self, o: &Self) -> Self {
        Element::add(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Element::mul(self, o)
    }
    fn scale(&self, s: &Scalar) -> Self {
        Element::scale(self, s)
    }
    fn is_zero(&self) -> bool {
        self.normal_form().is_zero()
    }
    fn vanishes(&self) -> bool {
        self.is_empty()
    }
}
