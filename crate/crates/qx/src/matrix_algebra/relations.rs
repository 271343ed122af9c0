use crate::ncalg::{presentation, Case, PresKind, Ring};
use crate::scalars::Scalar;
use crate::tensorops::Matrix;

/// The symmetry and quadratic relations of the reflection algebra evaluated
/// on the matrix `m`, as `(label, lhs, rhs)`; `m` satisfies them iff every
/// pair agrees. With `bar`, the `q^{-1}` relations are used.
pub fn relation_sides<R: Ring>(case: Case, m: &Matrix<R>, bar: bool) -> Vec<(String, R, R)> {
    let n = m.len();
    let sc = |s: Scalar| if bar { s.bar() } else { s };
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            match case {
                Case::O if i < j => {
                    out.push((format!("sym ({},{})", i + 1, j + 1), m[i][j].clone(), m[j][i].scale(&sc(Scalar::q()))));
                }
                Case::O => {}
                Case::Sp if i == j => out.push((format!("diag ({})", i + 1), m[i][i].clone(), R::zero())),
                Case::Sp => {
                    out.push((
                        format!("antisym ({},{})", i + 1, j + 1),
                        m[j][i].clone(),
                        m[i][j].scale(&sc(Scalar::q()).neg()),
                    ));
                }
            }
        }
    }
    let p = presentation(PresKind::X(case), n);
    let gens = p.gens().to_vec();
    for (k, row) in p.relation_rows().iter().enumerate() {
        let mut lhs = None;
        let mut rhs = R::zero();
        for (w, c) in row {
            let mut t = R::from_scalar(sc(c.clone()));
            for &g in w.iter() {
                let gg = gens[g as usize];
                t = t.mul(&m[gg.i as usize - 1][gg.j as usize - 1]);
            }
            match lhs {
                None => lhs = Some(t),
                Some(_) => rhs = rhs.sub(&t),
            }
        }
        out.push((format!("relation {}", k + 1), lhs.unwrap_or_else(R::zero), rhs));
    }
    out
}

/// Residuals `lhs - rhs` of [`relation_sides`].
pub fn relation_residuals<R: Ring>(case: Case, m: &Matrix<R>, bar: bool) -> Vec<(String, R)> {
    relation_sides(case, m, bar).into_iter().map(|(l, a, b)| (l, a.sub(&b))).collect()
}

/// Labels of the relations that fail on `m`.
pub fn failing_relations<R: Ring>(case: Case, m: &Matrix<R>, bar: bool) -> Vec<String> {
    relation_residuals(case, m, bar).into_iter().filter(|(_, r)| !r.is_zero()).map(|(l, _)| l).collect()
}
