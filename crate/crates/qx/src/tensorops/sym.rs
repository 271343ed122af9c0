//! q-antisymmetrizers and q-symmetrizers.

use super::basic::r_hat;
use super::op::{all_indices, Idx, TensorOp};
use crate::scalars::{q_factorial, Scalar};

/// Inversion count.
pub fn inversions<T: Ord>(s: &[T]) -> usize {
    let mut c = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] > s[j] {
                c += 1;
            }
        }
    }
    c
}

/// All permutations of `0..m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                rec(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// `(-q)^e`, or `(-q^{-1})^e` when `bar`.
pub fn mq(e: i32, bar: bool) -> Scalar {
    Scalar::mqpow(if bar { -e } else { e })
}

/// Coefficient of `(-q)^{l(σ)}` form: for distinct entries `v`, returns
/// `(sorted v, l(v))`.
pub fn sort_with_sign(v: &[u8]) -> Option<(Idx, usize)> {
    let mut s: Idx = v.iter().cloned().collect();
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((s, inversions(v)))
}

/// `Ã_m = [m]_{q^2}! A_m` from the double sum over `σ, τ`.
pub fn antisymmetrizer_tilde(n: usize, m: usize, bar: bool) -> TensorOp<Scalar> {
    let perms = permutations(m);
    let mut op = TensorOp::zero(n, m);
    for col in all_indices(n, m) {
        let (sorted, lt) = match sort_with_sign(&col) {
            Some(x) => x,
            None => continue,
        };
        let entries = perms
            .iter()
            .map(|s| {
                let row: Idx = s.iter().map(|&k| sorted[k]).collect();
                (row, mq((inversions(s) + lt) as i32, bar))
            })
            .collect();
        op.cols.insert(col, entries);
    }
    op
}

fn q2(bar: bool) -> Scalar {
    Scalar::qpow(if bar { -2 } else { 2 })
}

/// Normalized `A_m = Ã_m / [m]_{q^2}!`.
pub fn antisymmetrizer(n: usize, m: usize, bar: bool) -> TensorOp<Scalar> {
    let f = q_factorial(m as u32, &q2(bar)).inv().expect("nonzero");
    antisymmetrizer_tilde(n, m, bar).scale(&f)
}

fn recursion(n: usize, m: usize, sign: i32) -> TensorOp<Scalar> {
    if m <= 1 {
        return TensorOp::identity(n, m.max(1));
    }
    let mut cur = r_hat(n, &Scalar::qpow(sign)).scale(&(Scalar::qpow(2) - Scalar::qpow(-2)).inv().unwrap());
    for k in 2..m {
        let ext = cur.embed(&(0..k).collect::<Vec<_>>(), k + 1);
        let rh = r_hat(n, &Scalar::qpow(sign * k as i32)).embed(&[k - 1, k], k + 1);
        let c = (Scalar::qpow(k as i32 + 1) - Scalar::qpow(-(k as i32) - 1)).inv().unwrap();
        cur = ext.compose(&rh).compose(&ext).scale(&c);
    }
    cur
}

/// `A_m` through `A_{m+1} = A_m R̂_{m,m+1}(q^{-m}) A_m / (q^{m+1} - q^{-m-1})`.
pub fn antisymmetrizer_recursive(n: usize, m: usize) -> TensorOp<Scalar> {
    recursion(n, m, -1)
}

/// `S_m` through `S_{m+1} = S_m R̂_{m,m+1}(q^m) S_m / (q^{m+1} - q^{-m-1})`;
/// `S_1` is the identity.
pub fn symmetrizer(n: usize, m: usize) -> TensorOp<Scalar> {
    recursion(n, m, 1)
}
