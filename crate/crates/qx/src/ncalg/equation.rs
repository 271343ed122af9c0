use super::element::Element;
use super::presentation::NfError;

/// A claimed equality `lhs = rhs` between elements of one algebra.
#[derive(Clone, Debug)]
pub struct Equation {
    pub label: String,
    pub lhs: Element,
    pub rhs: Element,
}

impl Equation {
    pub fn new(label: impl Into<String>, lhs: Element, rhs: Element) -> Equation {
        Equation { label: label.into(), lhs, rhs }
    }

    /// `e = 0`.
    pub fn vanishes(label: impl Into<String>, e: Element) -> Equation {
        Equation::new(label, e, Element::zero())
    }

    pub fn residual(&self) -> Result<Element, NfError> {
        self.lhs.sub(&self.rhs).try_normal_form()
    }

    pub fn holds(&self) -> bool {
        self.residual().map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Copy with the first coefficient of the first nonzero side multiplied by `q`.
    pub fn perturbed(&self) -> Equation {
        let l = self.lhs.normal_form();
        let r = self.rhs.normal_form();
        let bump = |e: &Element| {
            let mut done = false;
            e.map_coeffs(|c| {
                if done {
                    c.clone()
                } else {
                    done = true;
                    c.mul(&crate::scalars::Scalar::q())
                }
            })
        };
        if !l.is_zero() {
            Equation::new(self.label.clone(), bump(&l), r)
        } else {
            Equation::new(self.label.clone(), l, bump(&r))
        }
    }
}
