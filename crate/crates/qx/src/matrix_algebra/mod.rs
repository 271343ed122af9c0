//! Quantum minors of the matrix algebra, its coproduct, and the embedding of
//! the reflection algebras.

pub mod embed;
pub mod index;
pub mod minors;
pub mod relations;

pub use embed::{a_count, a_params, coideal_check, coideal_equations, phi_embed, phi_matrix, x_matrix};
pub use index::IndexSet;
pub use minors::{coproduct, det_q, family_matrix, minor_cols, minor_rows, quantum_minor, t_matrix, to_square};
pub use relations::{failing_relations, relation_residuals, relation_sides};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{presentation, Case, Element, PresKind};

    #[test]
    fn det2() {
        assert_eq!(det_q(2).to_string(), "t[1,1]*t[2,2] - q*t[1,2]*t[2,1]");
        assert_eq!(det_q(1).to_string(), "t[1,1]");
    }

    #[test]
    fn coproduct_of_generator() {
        let p = presentation(PresKind::Mat, 2);
        let t11 = Element::parse(&p, "t[1,1]").unwrap();
        assert_eq!(coproduct(&t11).to_string(), "u[1,1]*v[1,1] + u[1,2]*v[2,1]");
    }

    #[test]
    fn phi_images() {
        let m = phi_matrix(Case::O, 2, &a_params(Case::O, 2, false)).unwrap();
        assert_eq!(m[0][0].to_string(), "t[1,1]^2 + t[1,2]^2");
        let m = phi_matrix(Case::Sp, 2, &a_params(Case::Sp, 2, false)).unwrap();
        assert_eq!(m[0][1].to_string(), "t[1,1]*t[2,2] - q*t[1,2]*t[2,1]");
    }

    #[test]
    fn index_sets() {
        let s: IndexSet = "1,3".parse().unwrap();
        assert_eq!(s.complement(4).to_string(), "{2,4}");
        assert!("3,1".parse::<IndexSet>().is_err());
        assert_eq!(IndexSet::all_subsets(3).len(), 8);
    }
}
