//! Factorizations of `sdet` and `Pf` into principal quasideterminants.
//!
//! A quasideterminant `|X_S|_{ab}` is represented by the pair of minors whose
//! ratio it equals; the ratio is checked against the comatrix of `X_S`, and
//! products are compared after clearing the commuting denominators.

use super::Outcome;
use crate::matrix_algebra::IndexSet;
use crate::ncalg::{Case, Element, Ring};
use crate::pfaffian::{cofactor_with, pf_minor};
use crate::scalars::Scalar;
use crate::sklyanin::{comatrix_of, sdet_minor, submatrix, x_mat, Consts};

fn check_perm(n: usize, sigma: &[usize]) -> Result<(), String> {
    let mut s = sigma.to_vec();
    s.sort_unstable();
    if s != (1..=n).collect::<Vec<_>>() {
        return Err(format!("{:?} is not a permutation of 1..{}", sigma, n));
    }
    Ok(())
}

fn commutators(o: &mut Outcome, ns: &[Element]) {
    for a in 0..ns.len() {
        for b in a + 1..ns.len() {
            o.compare(&format!("[n{}, n{}]", a + 1, b + 1), &ns[a].mul(&ns[b]), &ns[b].mul(&ns[a]));
        }
    }
}

fn telescope(o: &mut Outcome, ns: &[Element], prefactor: &Scalar) {
    let all = ns.iter().fold(Element::one(), |acc, e| acc.mul(e)).scale(prefactor);
    let last = ns.last().cloned().unwrap_or_else(Element::one);
    let rest = ns[..ns.len().saturating_sub(1)].iter().fold(last, |acc, e| acc.mul(e));
    o.compare("telescoping product", &all, &rest);
}

/// `sdet(X) = x_{σ1σ1} |X_{σ1σ2}|_{σ2σ2} ⋯ |X_{σ1…σN}|_{σNσN}` in the orthogonal case.
pub fn quasidet_sdet(n: usize, sigma: &[usize]) -> Result<Outcome, String> {
    check_perm(n, sigma)?;
    let x = x_mat(Case::O, n);
    let mut o = Outcome::new();
    let mut ns = Vec::new();
    for k in 1..=n {
        let s = IndexSet::from_unsorted(sigma[..k].to_vec());
        let prev = IndexSet::from_unsorted(sigma[..k - 1].to_vec());
        let nk = sdet_minor(Case::O, n, &s);
        let sub = submatrix(&x, s.as_slice());
        let hat = comatrix_of(&sub, Consts::Q);
        let p = s.position(sigma[k - 1]).unwrap();
        // |X_S|_{pp} = sdet(X_S) / x̂_pp
        o.compare(&format!("k = {} comatrix diagonal", k), &hat[p][p], &sdet_minor(Case::O, n, &prev));
        for l in 0..k {
            let row = (0..k).fold(Element::zero(), |acc, j| acc.add(&Ring::mul(&hat[p][j], &sub[j][l])));
            let want = if l == p { nk.clone() } else { Element::zero() };
            o.compare(&format!("k = {} Cramer row", k), &row, &want);
        }
        ns.push(nk);
    }
    telescope(&mut o, &ns, &Scalar::one());
    commutators(&mut o, &ns);
    Ok(o)
}

/// `θ_σ(k) = #{i ≤ 2k-2 : σ_{2k-1} < σ_i < σ_{2k}}`.
pub fn theta(sigma: &[usize], k: usize) -> usize {
    let (a, b) = (sigma[2 * k - 2], sigma[2 * k - 1]);
    sigma[..2 * k - 2].iter().filter(|&&s| a < s && s < b).count()
}

/// Permutations of `1..N` with `σ_{2k-1} < σ_{2k}`.
pub fn valid_pf_orders(n: usize) -> Vec<Vec<usize>> {
    crate::tensorops::permutations(n)
        .into_iter()
        .map(|p| p.into_iter().map(|i| i + 1).collect::<Vec<_>>())
        .filter(|p| p.chunks(2).all(|c| c[0] < c[1]))
        .collect()
}

/// `Pf(X) = (-q)^{θ_σ} x_{σ1σ2} |X_{σ1…σ4}|_{σ3σ4} ⋯ |X_{σ1…σN}|_{σ_{N-1}σ_N}`.
pub fn quasidet_pf(n: usize, sigma: &[usize]) -> Result<Outcome, String> {
    check_perm(n, sigma)?;
    if n % 2 != 0 || sigma.chunks(2).any(|c| c[0] > c[1]) {
        return Err(format!("{:?} must pair increasing entries", sigma));
    }
    let x = x_mat(Case::Sp, n);
    let mut o = Outcome::new();
    let mut ns = Vec::new();
    let mut shift = 0i32;
    for k in 1..=n / 2 {
        let s = IndexSet::from_unsorted(sigma[..2 * k].to_vec());
        let prev = IndexSet::from_unsorted(sigma[..2 * k - 2].to_vec());
        let (a, b) = (sigma[2 * k - 2], sigma[2 * k - 1]);
        let (pa, pb) = (s.position(a).unwrap(), s.position(b).unwrap());
        let th = theta(sigma, k);
        o.check(&format!("k = {} theta", k), pb - pa - 1 == th);
        shift += th as i32;
        let pfs = |set: &[usize]| pf_minor(n, &IndexSet::from_unsorted(set.iter().map(|&i| s.as_slice()[i - 1]).collect()));
        let cof = |i: usize, j: usize| cofactor_with(s.len(), i, j, &pfs, Consts::Q);
        // |X_S|_{ab} = Pf(X_S) / X*_{ba}
        let pk = pf_minor(n, &s);
        o.compare(&format!("k = {} cofactor", k), &cof(pb + 1, pa + 1), &pf_minor(n, &prev).scale(&Scalar::mqpow(th as i32)));
        let sub = submatrix(&x, s.as_slice());
        for l in 0..s.len() {
            let row = (0..s.len()).fold(Element::zero(), |acc, j| acc.add(&Ring::mul(&cof(pb + 1, j + 1), &sub[j][l])));
            let want = if l == pb { pk.clone() } else { Element::zero() };
            o.compare(&format!("k = {} orthogonality row", k), &row, &want);
        }
        ns.push(pk);
    }
    let theta_total: usize = (1..=n / 2).map(|k| theta(sigma, k)).sum();
    o.note(format!("theta = {}", theta_total));
    telescope(&mut o, &ns, &Scalar::mqpow(theta_total as i32 - shift));
    commutators(&mut o, &ns);
    Ok(o)
}
