//! Quadratic algebras given by generators and relations, with normal forms.

pub mod basis;
pub mod element;
pub mod equation;
pub mod gens;
pub mod local;
pub mod presentation;
pub mod relations;
pub mod ring;
pub mod solve;
pub mod word;

pub use basis::{basis_enumerate, basis_words, is_central, linearly_independent, rank};
pub use element::{normal_form_of, Element};
pub use equation::Equation;
pub use gens::{Alphabet, Case, Family, Gen, PresKind};
pub use local::{DenTag, LocalElement};
pub use presentation::{presentation, set_budget, NfError, Presentation, DEFAULT_BUDGET};
pub use ring::Ring;
pub use solve::{Rules, SolveError};
pub use word::Word;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mat_rules_reorder() {
        let e = normal_form_of(PresKind::Mat, 2, "t[2,2]*t[1,1]").unwrap();
        assert_eq!(e.to_string(), "t[1,1]*t[2,2] - (q - q^-1)*t[1,2]*t[2,1]");
        let e = normal_form_of(PresKind::Mat, 2, "t[1,2]*t[1,1]").unwrap();
        assert_eq!(e.to_string(), "q^-1*t[1,1]*t[1,2]");
    }

    #[test]
    fn all_tables_complete() {
        for n in 1..=5 {
            for kind in [PresKind::Mat, PresKind::X(Case::O), PresKind::X(Case::Sp), PresKind::Ext, PresKind::XExt(Case::Sp)] {
                Presentation::build(kind, n).unwrap_or_else(|e| panic!("{:?} {}: {:?}", kind, n, e));
            }
        }
    }

    #[test]
    fn symmetric_generators() {
        let p = presentation(PresKind::X(Case::O), 2);
        let e = Element::parse(&p, "x[2,1]").unwrap();
        assert_eq!(e.to_string(), "q^-1*x[1,2]");
        let p = presentation(PresKind::X(Case::Sp), 2);
        assert_eq!(Element::parse(&p, "x[2,1]").unwrap().to_string(), "-q*x[1,2]");
        assert!(Element::parse(&p, "x[1,1]").unwrap().is_zero());
    }

    #[test]
    fn exterior_squares_vanish() {
        let e = normal_form_of(PresKind::Ext, 3, "y[2]*y[1]*y[2]").unwrap();
        assert!(e.is_zero());
        let e = normal_form_of(PresKind::Ext, 2, "y[2]*y[1]").unwrap();
        assert_eq!(e.to_string(), "-q*y[1]*y[2]");
    }
}
