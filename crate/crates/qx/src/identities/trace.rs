//! Alternating trace identities mixing q-symmetrizers and q-antisymmetrizers.

use super::Outcome;
use crate::ncalg::{Case, Element};
use crate::scalars::Scalar;
use crate::sklyanin::{bracket_chain, x_mat, Consts};
use crate::tensorops::{antisymmetrizer, partial_trace, symmetrizer, Chain, TensorOp};
use std::sync::Arc;

fn sym_op(n: usize, m: usize, anti: bool) -> Option<Arc<TensorOp<Scalar>>> {
    if m <= 1 {
        None
    } else if anti {
        Some(Arc::new(antisymmetrizer(n, m, false)))
    } else {
        Some(Arc::new(symmetrizer(n, m)))
    }
}

/// `Σ_r (-1)^r tr S_r A'_{k-r} ⟨X_1 … X_k⟩`, or with the roles swapped when
/// `anti_first`.
pub fn trace_sum(case: Case, n: usize, k: usize, anti_first: bool) -> Element {
    let (even, odd) = trace_parts(case, n, k, anti_first);
    even.sub(&odd)
}

/// Even-`r` and odd-`r` parts of [`trace_sum`], without signs.
pub fn trace_parts(case: Case, n: usize, k: usize, anti_first: bool) -> (Element, Element) {
    let x = x_mat(case, n);
    let br = bracket_chain(&x, k, Consts::Q);
    let (mut even, mut odd) = (Element::zero(), Element::zero());
    for r in 0..=k {
        let mut c: Chain<Element> = Chain::new(n, k);
        if let Some(op) = sym_op(n, r, anti_first) {
            c = c.scalar(&op, &(0..r).collect::<Vec<_>>());
        }
        if let Some(op) = sym_op(n, k - r, !anti_first) {
            c = c.scalar(&op, &(r..k).collect::<Vec<_>>());
        }
        let t = partial_trace(&c.then(&br));
        if r % 2 == 0 {
            even = even.add(&t);
        } else {
            odd = odd.add(&t);
        }
    }
    (even, odd)
}

/// Both alternating sums vanish.
pub fn muir_trace(case: Case, n: usize, k: usize) -> Result<Outcome, String> {
    if k == 0 || k > n {
        return Err(format!("k must lie in 1..={}", n));
    }
    let mut o = Outcome::new();
    let (e, d) = trace_parts(case, n, k, false);
    o.compare("S_r A'_{k-r}", &e, &d);
    let (e, d) = trace_parts(case, n, k, true);
    o.compare("A_r S'_{k-r}", &e, &d);
    Ok(o)
}
