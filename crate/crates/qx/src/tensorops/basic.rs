//! The m = 1, 2 building blocks.

use super::op::{idx, TensorOp};
use crate::ncalg::{Case, Ring};
use crate::scalars::{qdiff, Scalar};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasicKind {
    R,
    Rplus,
    Rminus,
    P,
    Rt1,
    Rlambda,
    Rhat,
    Ja,
    Qdiag,
    Aanti,
}

impl fmt::Display for BasicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

impl std::str::FromStr for BasicKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "R" => BasicKind::R,
            "Rplus" => BasicKind::Rplus,
            "Rminus" => BasicKind::Rminus,
            "P" => BasicKind::P,
            "Rt1" => BasicKind::Rt1,
            "Rlambda" => BasicKind::Rlambda,
            "Rhat" => BasicKind::Rhat,
            "Ja" => BasicKind::Ja,
            "Qdiag" => BasicKind::Qdiag,
            "Aanti" => BasicKind::Aanti,
            _ => return Err(format!("unknown operator kind '{}'", s)),
        })
    }
}

/// Parameters for [`build_basic`].
#[derive(Clone, Debug, Default)]
pub struct BasicParams {
    pub lambda: Option<Scalar>,
    pub case: Option<Case>,
    pub a: Vec<Scalar>,
}

fn e2(i: usize, j: usize) -> super::op::Idx {
    idx(&[i, j])
}

/// `R`, or `R^+` when `plus`.
pub fn r_matrix(n: usize, plus: bool) -> TensorOp<Scalar> {
    let mut op = TensorOp::zero(n, 2);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                op.add_entry(e2(i, i), e2(i, i), Scalar::q());
            } else {
                op.add_entry(e2(i, j), e2(i, j), Scalar::one());
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if (i > j && !plus) || (i < j && plus) {
                op.add_entry(e2(i, j), e2(j, i), qdiff());
            }
        }
    }
    op
}

/// `R^- = R^{-1}`.
pub fn r_minus(n: usize) -> TensorOp<Scalar> {
    let mut op = TensorOp::zero(n, 2);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                op.add_entry(e2(i, i), e2(i, i), Scalar::qpow(-1));
            } else {
                op.add_entry(e2(i, j), e2(i, j), Scalar::one());
            }
            if i > j {
                op.add_entry(e2(i, j), e2(j, i), qdiff().neg());
            }
        }
    }
    op
}

pub fn permutation(n: usize) -> TensorOp<Scalar> {
    let mut op = TensorOp::zero(n, 2);
    for i in 0..n {
        for j in 0..n {
            op.add_entry(e2(j, i), e2(i, j), Scalar::one());
        }
    }
    op
}

/// Partial transpose of `R` in the first factor.
pub fn r_t1(n: usize) -> TensorOp<Scalar> {
    let mut op = TensorOp::zero(n, 2);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                op.add_entry(e2(i, i), e2(i, i), Scalar::q());
            } else {
                op.add_entry(e2(i, j), e2(i, j), Scalar::one());
            }
            if i > j {
                op.add_entry(e2(j, j), e2(i, i), qdiff());
            }
        }
    }
    op
}

/// `R(λ) = λ R^+ - λ^{-1} R^-`.
pub fn r_lambda(n: usize, lambda: &Scalar) -> TensorOp<Scalar> {
    let li = lambda.inv().expect("nonzero spectral parameter");
    r_matrix(n, true).scale(lambda).sub(&r_minus(n).scale(&li))
}

/// `R̂(λ) = R(λ) P`.
pub fn r_hat(n: usize, lambda: &Scalar) -> TensorOp<Scalar> {
    r_lambda(n, lambda).compose(&permutation(n))
}

/// `J(a)`: `Σ a_i e_ii` (O) or `Σ a_i (e_{2i-1,2i} - q e_{2i,2i-1})` (Sp).
pub fn j_matrix<R: Ring>(n: usize, case: Case, a: &[R]) -> TensorOp<R> {
    let mut op = TensorOp::zero(n, 1);
    match case {
        Case::O => {
            for i in 0..n {
                op.add_entry(idx(&[i]), idx(&[i]), a[i].clone());
            }
        }
        Case::Sp => {
            for k in 0..n / 2 {
                op.add_entry(idx(&[2 * k]), idx(&[2 * k + 1]), a[k].clone());
                op.add_entry(idx(&[2 * k + 1]), idx(&[2 * k]), a[k].scale(&Scalar::q()).neg());
            }
        }
    }
    op
}

/// `Q = diag((-q)^i)`.
pub fn q_diag(n: usize) -> TensorOp<Scalar> {
    let mut op = TensorOp::zero(n, 1);
    for i in 0..n {
        op.add_entry(idx(&[i]), idx(&[i]), Scalar::mqpow(i as i32 + 1));
    }
    op
}

/// Antidiagonal `A = Σ e_{i,N+1-i}`.
pub fn anti_diag(n: usize) -> TensorOp<Scalar> {
    let mut op = TensorOp::zero(n, 1);
    for i in 0..n {
        op.add_entry(idx(&[i]), idx(&[n - 1 - i]), Scalar::one());
    }
    op
}

pub fn build_basic(kind: BasicKind, n: usize, p: &BasicParams) -> Result<TensorOp<Scalar>, String> {
    let lambda = || p.lambda.clone().ok_or_else(|| "spectral parameter required".to_string());
    Ok(match kind {
        BasicKind::R => r_matrix(n, false),
        BasicKind::Rplus => r_matrix(n, true),
        BasicKind::Rminus => r_minus(n),
        BasicKind::P => permutation(n),
        BasicKind::Rt1 => r_t1(n),
        BasicKind::Rlambda => r_lambda(n, &lambda()?),
        BasicKind::Rhat => r_hat(n, &lambda()?),
        BasicKind::Ja => {
            let case = p.case.ok_or("case required")?;
            let need = if case == Case::O { n } else { n / 2 };
            if p.a.len() < need {
                return Err(format!("J(a) needs {} parameters", need));
            }
            j_matrix(n, case, &p.a)
        }
        BasicKind::Qdiag => q_diag(n),
        BasicKind::Aanti => anti_diag(n),
    })
}
