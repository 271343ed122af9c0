#![allow(dead_code)]

use qx::ncalg::Element;
use qx::scalars::{Rat, Scalar};
use qx::tensorops::{inversions, permutations};
use std::collections::BTreeMap;

/// Commutative image at `q = 1`: sorted generator index pairs to coefficients.
pub type Classical = BTreeMap<Vec<(u8, u8)>, Scalar>;

fn add_to(out: &mut Classical, mut key: Vec<(u8, u8)>, c: Scalar) {
    key.sort();
    let slot = out.entry(key).or_insert_with(Scalar::zero);
    *slot = slot.add(&c);
}

pub fn classical(e: &Element) -> Classical {
    let mut out = Classical::new();
    let Some(p) = e.pres().cloned() else {
        if let Some(s) = e.as_scalar() {
            add_to(&mut out, vec![], s.substitute(0, &Rat::one()).unwrap());
        }
        return out;
    };
    for (w, c) in e.terms() {
        let key = w.iter().map(|&g| (p.gens()[g as usize].i, p.gens()[g as usize].j)).collect();
        add_to(&mut out, key, c.substitute(0, &Rat::one()).unwrap());
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// All `N^2` entries independent.
    Generic,
    /// `a_ij = a_ji`.
    Symmetric,
    /// `a_ij = -a_ji`, zero diagonal.
    Antisymmetric,
}

/// Entry `(i, j)` (1-based) as a sign and a generator, or `None` when zero.
pub fn entry(shape: Shape, i: usize, j: usize) -> Option<(i64, (u8, u8))> {
    let (i, j) = (i as u8, j as u8);
    match shape {
        Shape::Generic => Some((1, (i, j))),
        Shape::Symmetric => Some((1, (i.min(j), i.max(j)))),
        Shape::Antisymmetric if i == j => None,
        Shape::Antisymmetric if i < j => Some((1, (i, j))),
        Shape::Antisymmetric => Some((-1, (j, i))),
    }
}

/// Leibniz expansion of the determinant of the submatrix on `rows x cols`.
pub fn leibniz(shape: Shape, rows: &[usize], cols: &[usize]) -> Classical {
    let mut out = Classical::new();
    'perm: for p in permutations(rows.len()) {
        let mut sign = if inversions(&p) % 2 == 0 { 1 } else { -1 };
        let mut key = Vec::new();
        for (k, &pk) in p.iter().enumerate() {
            match entry(shape, rows[k], cols[pk]) {
                Some((s, g)) => {
                    sign *= s;
                    key.push(g);
                }
                None => continue 'perm,
            }
        }
        add_to(&mut out, key, Scalar::from_int(sign));
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Perfect-matching expansion of the Pfaffian of the antisymmetric matrix on `set`.
pub fn matching_pf(set: &[usize]) -> Classical {
    let mut out = Classical::new();
    if set.is_empty() {
        out.insert(vec![], Scalar::one());
        return out;
    }
    let first = set[0];
    for k in 1..set.len() {
        let rest: Vec<usize> = set.iter().enumerate().filter(|&(t, _)| t != 0 && t != k).map(|(_, &v)| v).collect();
        let sign = if k % 2 == 1 { 1 } else { -1 };
        for (mut key, c) in matching_pf(&rest) {
            key.push((first as u8, set[k] as u8));
            add_to(&mut out, key, c.mul(&Scalar::from_int(sign)));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Product of two commutative polynomials.
pub fn cmul(a: &Classical, b: &Classical) -> Classical {
    let mut out = Classical::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let mut k = ka.clone();
            k.extend(kb.iter().cloned());
            add_to(&mut out, k, ca.mul(cb));
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
