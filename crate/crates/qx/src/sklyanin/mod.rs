//! Sklyanin minors, the Sklyanin determinant and comatrix, the inverse
//! matrix `Y` and the automorphism `ω`.

pub mod explicit;
pub mod minor;

pub use explicit::{gamma, pi_map, sdet_explicit_of};
pub use minor::{
    antisym_coeff, aux_minor_of, block, bracket_chain, comatrix_of, rt_op, sdet_of, sdet_sub, sklyanin_minor_of,
    submatrix, Consts,
};

use crate::matrix_algebra::{x_matrix, IndexSet};
use crate::ncalg::{presentation, Case, DenTag, Element, LocalElement, PresKind, Presentation, Ring};
use crate::tensorops::Matrix;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

pub fn x_pres(case: Case, n: usize) -> Arc<Presentation> {
    presentation(PresKind::X(case), n)
}

/// Generator matrix of the reflection algebra of the given type.
pub fn x_mat(case: Case, n: usize) -> Matrix<Element> {
    x_matrix(&x_pres(case, n))
}

/// `X^I_J` in the reflection algebra.
pub fn sklyanin_minor(case: Case, n: usize, rows: &[usize], cols: &[usize]) -> Result<Element, String> {
    if rows.len() != cols.len() {
        return Err("cardinality mismatch".into());
    }
    if rows.iter().chain(cols).any(|&i| i == 0 || i > n) {
        return Err(format!("index out of range for N = {}", n));
    }
    let p = x_pres(case, n);
    Ok(sklyanin_minor_of(&x_mat(case, n), rows, cols, Consts::Q).normal_form().with_pres(&p))
}

/// `X̌^{rows}_{cols, c}` in the reflection algebra.
pub fn aux_minor(case: Case, n: usize, rows: &[usize], cols: &[usize], c: usize) -> Element {
    let p = x_pres(case, n);
    aux_minor_of(&x_mat(case, n), rows, cols, c, Consts::Q).normal_form().with_pres(&p)
}

static SDET: OnceLock<Mutex<HashMap<(Case, usize, Vec<usize>), Element>>> = OnceLock::new();

/// `sdet(X_S)` for a principal submatrix, cached.
pub fn sdet_minor(case: Case, n: usize, s: &IndexSet) -> Element {
    let key = (case, n, s.as_slice().to_vec());
    let cache = SDET.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(e) = cache.lock().unwrap().get(&key) {
        return e.clone();
    }
    let p = x_pres(case, n);
    let e = sdet_sub(&x_mat(case, n), s.as_slice(), Consts::Q).normal_form().with_pres(&p);
    cache.lock().unwrap().insert(key, e.clone());
    e
}

/// `sdet_q(X)`.
pub fn sdet(case: Case, n: usize) -> Element {
    sdet_minor(case, n, &IndexSet::full(n))
}

pub fn sdet_explicit(case: Case, n: usize) -> Element {
    let p = x_pres(case, n);
    sdet_explicit_of(case, &x_mat(case, n)).normal_form().with_pres(&p)
}

/// Sklyanin comatrix of `X`.
pub fn comatrix(case: Case, n: usize) -> Matrix<Element> {
    let p = x_pres(case, n);
    comatrix_of(&x_mat(case, n), Consts::Q)
        .into_iter()
        .map(|r| r.into_iter().map(|e| e.normal_form().with_pres(&p)).collect())
        .collect()
}

static TAGS: OnceLock<Mutex<HashMap<(Case, usize), Arc<DenTag>>>> = OnceLock::new();

/// The denominator tag for `sdet`, shared per `(case, N)`.
pub fn sdet_tag(case: Case, n: usize) -> Arc<DenTag> {
    let m = TAGS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = m.lock().unwrap().get(&(case, n)) {
        return t.clone();
    }
    let t = Arc::new(DenTag { name: "sdet".into(), value: sdet(case, n) });
    m.lock().unwrap().entry((case, n)).or_insert(t).clone()
}

/// `Y = Q^{-1} X^{-1} Q`: `y_ij = (-q)^{j-i} x̂_ij sdet^{-1}`.
pub fn y_matrix(case: Case, n: usize) -> Matrix<LocalElement> {
    let tag = sdet_tag(case, n);
    let hat = comatrix(case, n);
    hat.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, e)| LocalElement::new(e.scale(&Consts::Q.mq(j as i32 - i as i32)), 1, &tag))
                .collect()
        })
        .collect()
}

/// `ω(x_ij) = y_{N+1-i, N+1-j}` on generators.
pub fn omega_matrix(case: Case, n: usize) -> Matrix<LocalElement> {
    let y = y_matrix(case, n);
    (0..n).map(|i| (0..n).map(|j| y[n - 1 - i][n - 1 - j].clone()).collect()).collect()
}

/// `ω(e)` as a local element.
pub fn omega(e: &Element, case: Case, n: usize) -> LocalElement {
    let w = omega_matrix(case, n);
    let gens = x_pres(case, n).gens().to_vec();
    let r: LocalElement = e.substitute(&|g| {
        let gg = gens[g as usize];
        w[gg.i as usize - 1][gg.j as usize - 1].clone()
    });
    if r.den.is_none() {
        LocalElement { den: Some(sdet_tag(case, n)), ..r }
    } else {
        r
    }
}

/// Lifts an element matrix to local elements.
pub fn localize(x: &Matrix<Element>) -> Matrix<LocalElement> {
    x.iter().map(|r| r.iter().map(|e| LocalElement::from_element(e.clone())).collect()).collect()
}

/// `X̂ X` and `X X̂` entries, to be compared with `sdet δ_ij`.
pub fn cramer_products(case: Case, n: usize) -> (Matrix<Element>, Matrix<Element>) {
    let x = x_mat(case, n);
    let h = comatrix(case, n);
    let prod = |a: &Matrix<Element>, b: &Matrix<Element>| -> Matrix<Element> {
        (0..n)
            .map(|i| (0..n).map(|j| (0..n).fold(Element::zero(), |acc, k| acc.add(&Ring::mul(&a[i][k], &b[k][j])))).collect())
            .collect()
    };
    (prod(&h, &x), prod(&x, &h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sdets() {
        assert_eq!(sdet(Case::O, 1).to_string(), "x[1,1]");
        assert_eq!(sdet(Case::O, 2).to_string(), "x[1,1]*x[2,2] - q*x[1,2]^2");
        assert_eq!(sdet(Case::Sp, 2).to_string(), "q^3*x[1,2]^2");
    }

    #[test]
    fn repeated_rows_vanish() {
        assert!(sklyanin_minor(Case::O, 2, &[1, 1], &[1, 2]).unwrap().is_zero());
        assert_eq!(sklyanin_minor(Case::O, 3, &[1], &[2]).unwrap().to_string(), "x[1,2]");
    }
}
