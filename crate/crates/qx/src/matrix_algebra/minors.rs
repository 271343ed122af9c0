use super::index::IndexSet;
use crate::ncalg::{presentation, Element, Family, PresKind, Presentation, Ring};
use crate::scalars::Scalar;
use crate::tensorops::{inversions, permutations, Matrix};
use std::sync::Arc;

/// The generator matrix `T = (t_ij)` of the matrix algebra.
pub fn t_matrix(p: &Arc<Presentation>) -> Matrix<Element> {
    family_matrix(p, Family::T)
}

pub fn family_matrix(p: &Arc<Presentation>, fam: Family) -> Matrix<Element> {
    let n = p.n();
    (1..=n).map(|i| (1..=n).map(|j| Element::generator(p, fam, i, j).expect("in range")).collect()).collect()
}

/// `Σ_σ (-q)^{l(σ)} t_{r1 c_σ(1)} ⋯ t_{rk c_σ(k)}` over sequences (1-based).
pub fn minor_rows<R: Ring>(t: &Matrix<R>, rows: &[usize], cols: &[usize]) -> R {
    assert_eq!(rows.len(), cols.len(), "cardinality mismatch");
    let mut acc = R::zero();
    for s in permutations(rows.len()) {
        let mut term = R::from_scalar(Scalar::mqpow(inversions(&s) as i32));
        for (k, &r) in rows.iter().enumerate() {
            term = term.mul(&t[r - 1][cols[s[k]] - 1]);
        }
        acc = acc.add(&term);
    }
    acc
}

/// `Σ_σ (-q)^{l(σ)} t_{r_σ(1) c1} ⋯ t_{r_σ(k) ck}`.
pub fn minor_cols<R: Ring>(t: &Matrix<R>, rows: &[usize], cols: &[usize]) -> R {
    assert_eq!(rows.len(), cols.len(), "cardinality mismatch");
    let mut acc = R::zero();
    for s in permutations(rows.len()) {
        let mut term = R::from_scalar(Scalar::mqpow(inversions(&s) as i32));
        for (k, &c) in cols.iter().enumerate() {
            term = term.mul(&t[rows[s[k]] - 1][c - 1]);
        }
        acc = acc.add(&term);
    }
    acc
}

/// Quantum minor `ξ^I_J` of the matrix algebra, normal-formed.
pub fn quantum_minor(n: usize, i: &IndexSet, j: &IndexSet) -> Result<Element, String> {
    if i.len() != j.len() {
        return Err(format!("cardinality mismatch: {} vs {}", i, j));
    }
    let p = presentation(PresKind::Mat, n);
    Ok(minor_rows(&t_matrix(&p), i.as_slice(), j.as_slice()).normal_form().with_pres(&p))
}

/// `det_q(T)`.
pub fn det_q(n: usize) -> Element {
    let f = IndexSet::full(n);
    quantum_minor(n, &f, &f).expect("square")
}

/// Image of a matrix-algebra element under `t_ij -> fam_ij` in the tensor square.
pub fn to_square(e: &Element, fam: Family) -> Element {
    let src = e.pres().expect("matrix element").clone();
    let dst = presentation(PresKind::MatSquare, src.n());
    let gens = src.gens().to_vec();
    e.substitute(&|g| {
        let gg = gens[g as usize];
        Element::generator(&dst, fam, gg.i as usize, gg.j as usize).unwrap()
    })
    .with_pres(&dst)
}

/// Coproduct `Δ(t_ij) = Σ_k u_ik v_kj`, extended multiplicatively.
pub fn coproduct(e: &Element) -> Element {
    let n = match e.pres() {
        Some(p) => p.n(),
        None => return e.clone(),
    };
    let dst = presentation(PresKind::MatSquare, n);
    let src = e.pres().unwrap().clone();
    let images: Vec<Element> = src
        .gens()
        .iter()
        .map(|g| {
            let (i, j) = (g.i as usize, g.j as usize);
            (1..=n).fold(Element::zero(), |acc, k| {
                let u = Element::generator(&dst, Family::U, i, k).unwrap();
                let v = Element::generator(&dst, Family::V, k, j).unwrap();
                acc.add(&u.mul(&v))
            })
        })
        .collect();
    e.substitute(&|g| images[g as usize].clone()).with_pres(&dst)
}
