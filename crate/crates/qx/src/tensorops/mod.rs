//! Sparse operators on tensor powers of `C^N`.

pub mod basic;
pub mod op;
pub mod sym;

pub use basic::{
    anti_diag, build_basic, j_matrix, permutation, q_diag, r_hat, r_lambda, r_matrix, r_minus, r_t1, BasicKind,
    BasicParams,
};
pub use op::{all_indices, idx, Chain, Factor, Idx, TensorOp, Vector};
pub use sym::{
    antisymmetrizer, antisymmetrizer_recursive, antisymmetrizer_tilde, inversions, mq, permutations, sort_with_sign,
    symmetrizer,
};

use crate::ncalg::Ring;
use std::sync::Arc;

/// Dense `N x N` matrix, 0-based.
pub type Matrix<R> = Vec<Vec<R>>;

/// Matrix as an operator on one factor.
pub fn matrix_op<R: Ring>(x: &Matrix<R>) -> TensorOp<R> {
    let n = x.len();
    let mut op = TensorOp::zero(n, 1);
    for j in 0..n {
        let col: Vec<_> = (0..n).filter(|&i| !x[i][j].vanishes()).map(|i| (idx(&[i]), x[i][j].clone())).collect();
        if !col.is_empty() {
            op.cols.insert(idx(&[j]), col);
        }
    }
    op
}

/// `X_{i1}(R^t_{i1 i2}…R^t_{i1 im}) X_{i2}(…) … X_{im}` for a 1-based `order`;
/// `rt` is the partial transpose used between factors.
pub fn bracket<R: Ring>(x: &Arc<TensorOp<R>>, rt: &Arc<TensorOp<crate::scalars::Scalar>>, order: &[usize]) -> Chain<R> {
    let m = order.len();
    let mut c = Chain::new(x.n, m);
    for (a, &ia) in order.iter().enumerate() {
        c = c.ring(x, &[ia - 1]);
        for &ib in &order[a + 1..] {
            c = c.scalar(rt, &[ia - 1, ib - 1]);
        }
    }
    c
}

/// Full trace of a chain: `Σ_v <v| op |v>`.
pub fn partial_trace<R: Ring>(c: &Chain<R>) -> R {
    let mut acc = R::zero();
    for v in all_indices(c.n, c.m) {
        let w = c.apply(&Vector::basis(c.n, &v));
        acc = acc.add(&w.coeff(&v));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Scalar;

    #[test]
    fn r_minus_inverts_r() {
        for n in 2..=3 {
            let p = r_matrix(n, false).compose(&r_minus(n));
            assert!(p.equals(&TensorOp::identity(n, 2)));
        }
    }

    #[test]
    fn rhat_example() {
        let op = r_hat(2, &Scalar::qpow(-1));
        let v = op.column(&idx(&[0, 1]));
        assert_eq!(v.coeff(&idx(&[0, 1])), Scalar::one() - Scalar::qpow(-2));
        assert_eq!(v.coeff(&idx(&[1, 0])), Scalar::qpow(-1) - Scalar::q());
    }

    #[test]
    fn antisymmetrizer_small() {
        let a = antisymmetrizer_tilde(2, 2, false);
        let v = a.column(&idx(&[0, 1]));
        assert_eq!(v.coeff(&idx(&[0, 1])), Scalar::one());
        assert_eq!(v.coeff(&idx(&[1, 0])), Scalar::q().neg());
        assert_eq!(v.data.len(), 2);
    }

    #[test]
    fn traces() {
        let id: TensorOp<Scalar> = TensorOp::identity(2, 2);
        assert_eq!(id.trace(), Scalar::from_int(4));
        assert_eq!(permutation(2).trace(), Scalar::from_int(2));
    }
}
