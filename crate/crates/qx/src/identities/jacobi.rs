//! Jacobi-type identities relating minors of `X` and of `Y = Q^{-1} X^{-1} Q`.

use super::Outcome;
use crate::matrix_algebra::IndexSet;
use crate::ncalg::{Case, LocalElement, Ring};
use crate::pfaffian::{pf, pf_minor, pf_shuffle_of};
use crate::scalars::Scalar;
use crate::sklyanin::{aux_minor_of, sdet, sdet_minor, sdet_sub, sdet_tag, sklyanin_minor, y_matrix, Consts};

fn check_set(n: usize, i: &IndexSet) -> Result<(), String> {
    match i.max() {
        Some(m) if m > n => Err(format!("index set {} exceeds N = {}", i, n)),
        _ => Ok(()),
    }
}

/// `sdet_{q^{-1}}(Y_{I^c}) = sdet(X_I) sdet(X)^{-1}`.
pub fn jacobi_sdet(case: Case, n: usize, i: &IndexSet) -> Result<Outcome, String> {
    check_set(n, i)?;
    let y = y_matrix(case, n);
    let lhs = sdet_sub(&y, i.complement(n).as_slice(), Consts::QINV);
    let rhs = LocalElement::new(sdet_minor(case, n, i), 1, &sdet_tag(case, n));
    let mut o = Outcome::new();
    o.local(&format!("I = {}", i), &lhs, &rhs);
    Ok(o)
}

/// `Pf_{q^{-1}}(Y_{I^c}) = Pf(X_I) Pf(X)^{-1}`, with `Pf^{-1} = q^{3n} Pf sdet^{-1}`.
pub fn jacobi_pf(n: usize, i: &IndexSet) -> Result<Outcome, String> {
    check_set(n, i)?;
    if n % 2 != 0 || i.len() % 2 != 0 {
        return Err("Pfaffian Jacobi identity needs N and |I| even".into());
    }
    let y = y_matrix(Case::Sp, n);
    let lhs = pf_shuffle_of(&y, i.complement(n).as_slice(), Consts::QINV);
    let num = pf_minor(n, i).mul(&pf(n)).scale(&Scalar::qpow(3 * (n / 2) as i32));
    let rhs = LocalElement::new(num, 1, &sdet_tag(Case::Sp, n));
    let mut o = Outcome::new();
    o.local(&format!("I = {}", i), &lhs, &rhs);
    Ok(o)
}

/// `X^{a,k+1…N}_{b,k+1…N} = (-q)^{k-b} sdet(X) Y̌^{1…k}_{1…â…k, b}` for all `a, b ≤ k`.
pub fn jacobi_comatrix(case: Case, n: usize, k: usize) -> Result<Outcome, String> {
    if k == 0 || k > n {
        return Err(format!("k must lie in 1..={}", n));
    }
    let y = y_matrix(case, n);
    let s = LocalElement::from_element(sdet(case, n));
    let tail: Vec<usize> = (k + 1..=n).collect();
    let rows: Vec<usize> = (1..=k).collect();
    let mut o = Outcome::new();
    for a in 1..=k {
        for b in 1..=k {
            let lhs_rows: Vec<usize> = std::iter::once(a).chain(tail.iter().cloned()).collect();
            let lhs_cols: Vec<usize> = std::iter::once(b).chain(tail.iter().cloned()).collect();
            let lhs = LocalElement::from_element(sklyanin_minor(case, n, &lhs_rows, &lhs_cols)?);
            let cols: Vec<usize> = rows.iter().cloned().filter(|&c| c != a).collect();
            let aux = aux_minor_of(&y, &rows, &cols, b, Consts::QINV);
            let rhs = s.mul(&aux).scale(&Scalar::mqpow(k as i32 - b as i32));
            o.local(&format!("a = {}, b = {}", a, b), &lhs, &rhs);
        }
    }
    Ok(o)
}
