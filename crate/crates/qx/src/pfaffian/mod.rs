//! Quantum Pfaffians of the symplectic reflection algebra.

use crate::matrix_algebra::IndexSet;
use crate::ncalg::{presentation, Case, Element, Equation, Family, PresKind, Ring};
use crate::scalars::{q_factorial, Scalar};
use crate::sklyanin::{x_mat, x_pres, Consts};
use crate::tensorops::{inversions, permutations, Matrix};
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// 2-shuffles of `0..2r`: pairs `(i_k, j_k)` with `i_k < j_k` and increasing `i_k`.
pub fn shuffles(two_r: usize) -> Vec<Vec<usize>> {
    fn rec(left: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(cur.clone());
            return;
        }
        let a = left.remove(0);
        for k in 0..left.len() {
            let b = left.remove(k);
            cur.push(a);
            cur.push(b);
            rec(left, cur, out);
            cur.pop();
            cur.pop();
            left.insert(k, b);
        }
        left.insert(0, a);
    }
    let mut out = Vec::new();
    rec(&mut (0..two_r).collect(), &mut Vec::new(), &mut out);
    out
}

fn entry<R: Ring>(x: &Matrix<R>, set: &[usize], a: usize, b: usize) -> R {
    x[set[a] - 1][set[b] - 1].clone()
}

/// `Σ_{π ∈ Π} (-q)^{l(π)} [i1,j1] ⋯ [ir,jr]` on the principal submatrix `set`.
pub fn pf_shuffle_of<R: Ring>(x: &Matrix<R>, set: &[usize], c: Consts) -> R {
    assert!(set.len() % 2 == 0, "odd index set");
    if set.is_empty() {
        return R::one();
    }
    let mut acc = R::zero();
    for s in shuffles(set.len()) {
        let mut t = R::from_scalar(c.mq(inversions(&s) as i32));
        for k in 0..set.len() / 2 {
            t = t.mul(&entry(x, set, s[2 * k], s[2 * k + 1]));
        }
        acc = acc.add(&t);
    }
    acc
}

/// First-row expansion `Σ_j (-q)^{j-2} [1,j][2…ĵ…2r]`.
pub fn pf_laplace_of<R: Ring>(x: &Matrix<R>, set: &[usize], c: Consts) -> R {
    if set.is_empty() {
        return R::one();
    }
    let mut acc = R::zero();
    for j in 1..set.len() {
        let rest: Vec<usize> = set.iter().enumerate().filter(|(k, _)| *k != 0 && *k != j).map(|(_, &v)| v).collect();
        let t = entry(x, set, 0, j).mul(&pf_laplace_of(x, &rest, c)).scale(&c.mq(j as i32 - 1));
        acc = acc.add(&t);
    }
    acc
}

/// `(1+q^2)^r [r]_{q^4}!`.
pub fn pf_normalizer(r: usize) -> Scalar {
    Scalar::one().add(&Scalar::qpow(2)).pow(r as u32).mul(&q_factorial(r as u32, &Scalar::qpow(4)))
}

/// Definition via the full symmetric-group sum; errors if the division by
/// the normalizer is not exact.
pub fn pf_definition_of(x: &Matrix<Element>, set: &[usize]) -> Result<Element, String> {
    if set.len() % 2 != 0 {
        return Err("odd index set".into());
    }
    if set.is_empty() {
        return Ok(Element::one());
    }
    let mut acc = Element::zero();
    for s in permutations(set.len()) {
        let mut t = Element::scalar(Scalar::mqpow(inversions(&s) as i32));
        for k in 0..set.len() / 2 {
            t = Ring::mul(&t, &entry(x, set, s[2 * k], s[2 * k + 1]));
        }
        acc = acc.add(&t);
    }
    let d = pf_normalizer(set.len() / 2);
    let mut err = None;
    let r = acc.normal_form().map_coeffs(|c| match c.exact_div(&d) {
        Ok(v) => v,
        Err(_) => {
            err = Some(format!("coefficient {} not divisible by {}", c, d));
            Scalar::zero()
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(r),
    }
}

static PF: OnceLock<Mutex<HashMap<(usize, Vec<usize>), Element>>> = OnceLock::new();

/// `[i1, …, i2r] = Pf_q(X_I)` in the symplectic algebra of size `n`, cached.
pub fn pf_minor(n: usize, set: &IndexSet) -> Element {
    let key = (n, set.as_slice().to_vec());
    let cache = PF.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(e) = cache.lock().unwrap().get(&key) {
        return e.clone();
    }
    let p = x_pres(Case::Sp, n);
    let e = pf_shuffle_of(&x_mat(Case::Sp, n), set.as_slice(), Consts::Q).normal_form().with_pres(&p);
    cache.lock().unwrap().insert(key, e.clone());
    e
}

/// `Pf_q(X)`.
pub fn pf(n: usize) -> Element {
    pf_minor(n, &IndexSet::full(n))
}

/// Cofactor `X_ij` of an arbitrary q-antisymmetric matrix, from the
/// complementary Pfaffian computed by `pf`.
pub fn cofactor_with<R: Ring>(n: usize, i: usize, j: usize, pf_of: &dyn Fn(&[usize]) -> R, c: Consts) -> R {
    if i == j {
        return R::zero();
    }
    let rest: Vec<usize> = (1..=n).filter(|&k| k != i && k != j).collect();
    let e = if i < j { i as i32 - j as i32 } else { i as i32 - j as i32 - 1 };
    pf_of(&rest).scale(&c.mq(e))
}

/// Cofactor `X_ij` of `Pf_q(X)`.
pub fn pf_cofactor(i: usize, j: usize, n: usize) -> Element {
    let p = x_pres(Case::Sp, n);
    cofactor_with(n, i, j, &|s: &[usize]| pf_minor(n, &IndexSet::new(s.to_vec()).unwrap()), Consts::Q).with_pres(&p)
}

pub fn pf_comatrix(n: usize) -> Matrix<Element> {
    (1..=n).map(|i| (1..=n).map(|j| pf_cofactor(i, j, n)).collect()).collect()
}

/// `Σ_j [i,j] X_jk = δ_ik Pf` and `Σ_j X_kj [j,i] = δ_ik Pf`.
pub fn orthogonality_equations(n: usize) -> Vec<Equation> {
    let x = x_mat(Case::Sp, n);
    let cof = pf_comatrix(n);
    let p = pf(n);
    let mut out = Vec::new();
    for i in 0..n {
        for k in 0..n {
            let want = if i == k { p.clone() } else { Element::zero() };
            let l = (0..n).fold(Element::zero(), |a, j| a.add(&Ring::mul(&x[i][j], &cof[j][k])));
            let r = (0..n).fold(Element::zero(), |a, j| a.add(&Ring::mul(&cof[k][j], &x[j][i])));
            out.push(Equation::new(format!("row ({},{})", i + 1, k + 1), l, want.clone()));
            out.push(Equation::new(format!("column ({},{})", k + 1, i + 1), r, want));
        }
    }
    out
}

/// The Plücker-type condition for all `i<j<k<l` on the matrix `a`.
pub fn plucker_equations<R: Ring>(a: &Matrix<R>) -> Vec<(String, R, R)> {
    let n = a.len();
    let m = |e: i32| Scalar::mqpow(e);
    let g = |i: usize, j: usize| a[i][j].clone();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    let lhs = g(i, j).mul(&g(k, l)).add(&g(i, k).mul(&g(j, l)).scale(&m(1))).add(&g(i, l).mul(&g(j, k)).scale(&m(2)));
                    let rhs = g(k, l).mul(&g(i, j)).add(&g(j, l).mul(&g(i, k)).scale(&m(-1))).add(&g(j, k).mul(&g(i, l)).scale(&m(-2)));
                    out.push((format!("({},{},{},{})", i + 1, j + 1, k + 1, l + 1), lhs, rhs));
                }
            }
        }
    }
    out
}

pub fn plucker_check(n: usize) -> bool {
    plucker_equations(&x_mat(Case::Sp, n)).into_iter().all(|(_, l, r)| l.sub(&r).normal_form().is_zero())
}

/// Coefficient of `y_1 ⋯ y_N` in `Ω^{N/2}`, `Ω = Σ x_ij y_i y_j`.
pub fn omega_power(n: usize) -> Element {
    let p = presentation(PresKind::XExt(Case::Sp), n);
    let mut om = Element::zero().with_pres(&p);
    for i in 1..=n {
        for j in 1..=n {
            let x = Element::generator(&p, Family::X, i, j).unwrap();
            let yi = Element::generator(&p, Family::Y, i, 0).unwrap();
            let yj = Element::generator(&p, Family::Y, j, 0).unwrap();
            om = om.add(&x.mul(&yi).mul(&yj));
        }
    }
    let pw = om.pow((n / 2) as u32);
    let nx = p.gens().iter().filter(|g| g.fam == Family::X).count() as u8;
    let ytail: Vec<u8> = (0..n as u8).map(|k| nx + k).collect();
    let xp = x_pres(Case::Sp, n);
    let terms = pw.terms().filter_map(|(w, c)| {
        if w.len() >= n && w[w.len() - n..] == ytail[..] && w[..w.len() - n].iter().all(|&g| g < nx) {
            Some((crate::ncalg::Word::from_slice(&w[..w.len() - n]), c.clone()))
        } else {
            None
        }
    });
    Element::from_terms(Some(xp), terms)
}

/// `(-q)^{-n} Σ_p (-q)^{l(p)-l(p')} x^t ⋯ x ⋯`, the explicit square of `Pf`.
pub fn pf_square_explicit(n: usize) -> Element {
    let s = crate::sklyanin::sdet_explicit_of(Case::Sp, &x_mat(Case::Sp, n));
    let h = (n / 2) as i32;
    s.scale(&crate::sklyanin::gamma(Case::Sp, n).inv().unwrap().mul(&Scalar::mqpow(-h))).normal_form()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shuffle_counts() {
        assert_eq!(shuffles(2).len(), 1);
        assert_eq!(shuffles(4).len(), 3);
        assert_eq!(shuffles(6).len(), 15);
    }

    #[test]
    fn pf4() {
        assert_eq!(pf(4).to_string(), "x[1,2]*x[3,4] - q*x[1,3]*x[2,4] + q^2*x[1,4]*x[2,3]");
        assert_eq!(pf(2).to_string(), "x[1,2]");
    }

    #[test]
    fn cofactors() {
        assert_eq!(pf_cofactor(1, 2, 2).to_string(), "-q^-1");
        assert_eq!(pf_cofactor(2, 1, 2).to_string(), "1");
        assert_eq!(pf_cofactor(1, 2, 4).to_string(), "-q^-1*x[3,4]");
    }
}
