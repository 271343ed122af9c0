use super::minors::{coproduct, family_matrix, minor_rows, t_matrix, to_square};
use crate::ncalg::{presentation, Case, Element, Equation, Family, PresKind, Presentation};
use crate::scalars::Scalar;
use crate::tensorops::Matrix;
use std::sync::Arc;

/// Number of `a` parameters: `N` (O) or `N/2` (Sp).
pub fn a_count(case: Case, n: usize) -> usize {
    match case {
        Case::O => n,
        Case::Sp => n / 2,
    }
}

/// `a = (1, …, 1)` or the formal `(a1, a2, …)`.
pub fn a_params(case: Case, n: usize, symbolic: bool) -> Vec<Scalar> {
    (1..=a_count(case, n)).map(|k| if symbolic { Scalar::a(k) } else { Scalar::one() }).collect()
}

/// The generator matrix `X` of the reflection algebra, entries canonicalized.
pub fn x_matrix(p: &Arc<Presentation>) -> Matrix<Element> {
    family_matrix(p, Family::X)
}

/// `(T J(a) T^t)_{ij}` for all `i, j`.
pub fn phi_matrix(case: Case, n: usize, a: &[Scalar]) -> Result<Matrix<Element>, String> {
    if a.iter().any(|x| x.is_zero()) {
        return Err("a-parameters must be nonzero".into());
    }
    if a.len() < super::embed::a_count(case, n) {
        return Err("too few a-parameters".into());
    }
    let pm = presentation(PresKind::Mat, n);
    let t = t_matrix(&pm);
    let mut out = vec![vec![Element::zero(); n]; n];
    for i in 1..=n {
        for j in 1..=n {
            let mut acc = Element::zero().with_pres(&pm);
            match case {
                Case::O => {
                    for k in 1..=n {
                        acc = acc.add(&t[i - 1][k - 1].mul(&t[j - 1][k - 1]).scale(&a[k - 1]));
                    }
                }
                Case::Sp => {
                    for k in 1..=n / 2 {
                        let d = minor_rows(&t, &[i, j], &[2 * k - 1, 2 * k]);
                        acc = acc.add(&d.scale(&a[k - 1]));
                    }
                }
            }
            out[i - 1][j - 1] = acc;
        }
    }
    Ok(out)
}

/// `φ(e)` for `e` in the reflection algebra.
pub fn phi_embed(e: &Element, case: Case, a: &[Scalar]) -> Result<Element, String> {
    let src = match e.pres() {
        Some(p) => p.clone(),
        None => return Ok(e.clone()),
    };
    let n = src.n();
    let m = phi_matrix(case, n, a)?;
    let gens = src.gens().to_vec();
    let pm = presentation(PresKind::Mat, n);
    Ok(e.substitute(&|g| {
        let gg = gens[g as usize];
        m[gg.i as usize - 1][gg.j as usize - 1].clone()
    })
    .with_pres(&pm))
}

/// `Δ(x̃_ij) = Σ t_ir t_js ⊗ x̃_rs` (O) or `Σ_{r<s} det_q(T^{ij}_{rs}) ⊗ x̃_rs` (Sp).
pub fn coideal_equations(case: Case, n: usize, a: &[Scalar]) -> Result<Vec<Equation>, String> {
    let m = phi_matrix(case, n, a)?;
    let sq = presentation(PresKind::MatSquare, n);
    let u = family_matrix(&sq, Family::U);
    let xv: Vec<Vec<Element>> = m.iter().map(|row| row.iter().map(|e| to_square(e, Family::V)).collect()).collect();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if case == Case::Sp && i == j {
                continue;
            }
            let lhs = coproduct(&m[i - 1][j - 1]);
            let mut rhs = Element::zero().with_pres(&sq);
            for r in 1..=n {
                for s in 1..=n {
                    match case {
                        Case::O => {
                            rhs = rhs.add(&u[i - 1][r - 1].mul(&u[j - 1][s - 1]).mul(&xv[r - 1][s - 1]));
                        }
                        Case::Sp if r < s => {
                            let d = minor_rows(&u, &[i, j], &[r, s]);
                            rhs = rhs.add(&d.mul(&xv[r - 1][s - 1]));
                        }
                        Case::Sp => {}
                    }
                }
            }
            out.push(Equation::new(format!("coideal ({},{})", i, j), lhs, rhs));
        }
    }
    Ok(out)
}

pub fn coideal_check(case: Case, n: usize, a: &[Scalar]) -> Result<bool, String> {
    Ok(coideal_equations(case, n, a)?.iter().all(|e| e.holds()))
}
