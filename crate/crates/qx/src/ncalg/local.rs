use super::element::Element;
use super::ring::Ring;
use crate::scalars::Scalar;
use std::sync::Arc;

/// Named central element used as a denominator.
#[derive(Debug)]
pub struct DenTag {
    pub name: String,
    pub value: Element,
}

/// `num * d^{-pow}` for a fixed central element `d`.
#[derive(Clone, Debug)]
pub struct LocalElement {
    pub num: Element,
    pub pow: u32,
    pub den: Option<Arc<DenTag>>,
}

impl LocalElement {
    pub fn new(num: Element, pow: u32, den: &Arc<DenTag>) -> LocalElement {
        LocalElement { num, pow, den: Some(den.clone()) }
    }

    pub fn from_element(e: Element) -> LocalElement {
        LocalElement { num: e, pow: 0, den: None }
    }

    fn tag(&self, o: &LocalElement) -> Option<Arc<DenTag>> {
        match (&self.den, &o.den) {
            (Some(a), Some(b)) => {
                assert!(Arc::ptr_eq(a, b), "mixed denominators");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            _ => None,
        }
    }

    /// Numerator over `d^p` for `p >= self.pow`.
    pub fn raised(&self, p: u32) -> Element {
        self.raised_with(p, self.den.as_ref())
    }

    fn raised_with(&self, p: u32, den: Option<&Arc<DenTag>>) -> Element {
        if p == self.pow || self.num.is_zero() {
            return self.num.clone();
        }
        let d = &den.expect("denominator").value;
        self.num.mul(&d.pow(p - self.pow))
    }

    /// Cross-multiplied equality `a d^{-p} = b d^{-r}`.
    pub fn equals(&self, o: &LocalElement) -> bool {
        self.sub(o).num.normal_form().is_zero()
    }
}

impl Ring for LocalElement {
    fn zero() -> Self {
        LocalElement::from_element(Element::zero())
    }
    fn from_scalar(s: Scalar) -> Self {
        LocalElement::from_element(Element::scalar(s))
    }
    fn add(&self, o: &Self) -> Self {
        let den = self.tag(o);
        let p = self.pow.max(o.pow);
        let num = self.raised_with(p, den.as_ref()).add(&o.raised_with(p, den.as_ref()));
        LocalElement { num, pow: p, den }
    }
    fn mul(&self, o: &Self) -> Self {
        LocalElement { num: self.num.mul(&o.num), pow: self.pow + o.pow, den: self.tag(o) }
    }
    fn scale(&self, s: &Scalar) -> Self {
        LocalElement { num: self.num.scale(s), pow: self.pow, den: self.den.clone() }
    }
    fn is_zero(&self) -> bool {
        self.num.normal_form().is_zero()
    }
    fn vanishes(&self) -> bool {
        self.num.is_empty()
    }
}
