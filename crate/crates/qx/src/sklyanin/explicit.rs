use super::minor::Consts;
use crate::ncalg::{Case, Element, Ring};
use crate::scalars::Scalar;
use crate::tensorops::{inversions, permutations, Matrix};

/// Image of the ordered pair `(a, b)` under the pair map on the ordered set `w`.
fn pair_map(w: &[usize], a: usize, b: usize) -> (usize, usize) {
    let n = w.len();
    let k = w.iter().position(|&x| x == a).expect("in ground set");
    let l = w.iter().position(|&x| x == b).expect("in ground set");
    let top = n - 1;
    if k < top && l < top {
        (w[l], w[k])
    } else if l == top && k < top - 1 {
        (w[top - 1], w[k])
    } else if k == top && l < top - 1 {
        (w[l], w[top - 1])
    } else {
        (w[top - 1], w[top - 2])
    }
}

/// `π_N(p)`; `p` is a sequence of distinct indices. The last entry of the
/// image is always the largest index, which also fixes the two-element case.
pub fn pi_map(p: &[usize]) -> Vec<usize> {
    let n = p.len();
    let mut w: Vec<usize> = p.to_vec();
    w.sort_unstable();
    let mut out = vec![0; n];
    if n == 0 {
        return out;
    }
    out[n - 1] = w[n - 1];
    if n == 1 {
        return out;
    }
    let (mut lo, mut hi, mut hi_out) = (0usize, n - 1, n - 2);
    loop {
        let count = hi + 1 - lo;
        if count >= 3 {
            let (x, y) = pair_map(&w, p[lo], p[hi]);
            out[lo] = x;
            out[hi_out] = y;
            w.retain(|&v| v != p[lo] && v != p[hi]);
            lo += 1;
            hi -= 1;
            hi_out -= 1;
        } else {
            if count == 2 {
                out[lo] = w[0];
            }
            break;
        }
    }
    out
}

/// `γ_N`: 1 (O) or `(-1)^n q^{2n}` (Sp).
pub fn gamma(case: Case, n: usize) -> Scalar {
    match case {
        Case::O => Scalar::one(),
        Case::Sp => {
            let h = (n / 2) as i32;
            let s = if h % 2 == 0 { 1 } else { -1 };
            Scalar::qpow(2 * h).mul(&Scalar::from_int(s))
        }
    }
}

/// `γ_N Σ_p (-q)^{l(p)-l(p')} x^t_{p1p'1} ⋯ x^t_{pn p'n} x_{p_{n+1}p'_{n+1}} ⋯ x_{pN p'N}`
/// with `n = ⌊N/2⌋` transposed factors.
pub fn sdet_explicit_of(case: Case, x: &Matrix<Element>) -> Element {
    let n = x.len();
    let h = n / 2;
    let mut acc = Element::zero();
    for s in permutations(n) {
        let p: Vec<usize> = s.iter().map(|&k| k + 1).collect();
        let pp = pi_map(&p);
        let e = inversions(&p) as i32 - inversions(&pp) as i32;
        let mut term = Element::scalar(Consts::Q.mq(e));
        for k in 0..n {
            let f = if k < h { &x[pp[k] - 1][p[k] - 1] } else { &x[p[k] - 1][pp[k] - 1] };
            term = Ring::mul(&term, f);
        }
        acc = acc.add(&term);
    }
    acc.scale(&gamma(case, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_examples() {
        assert_eq!(pi_map(&[1, 2]), vec![1, 2]);
        assert_eq!(pi_map(&[2, 1]), vec![1, 2]);
        assert_eq!(pi_map(&[1, 2, 3]), vec![2, 1, 3]);
    }

    #[test]
    fn pi_lands_in_permutations() {
        for n in 2..=6 {
            for s in permutations(n) {
                let p: Vec<usize> = s.iter().map(|&k| k + 1).collect();
                let mut pp = pi_map(&p);
                assert_eq!(pp[n - 1], n);
                pp.sort_unstable();
                assert_eq!(pp, (1..=n).collect::<Vec<_>>());
            }
        }
    }
}
