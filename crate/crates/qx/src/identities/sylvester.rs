//! Sylvester-type identities and the Grassmann-Plücker relation.

use super::Outcome;
use crate::matrix_algebra::{relation_sides, IndexSet};
use crate::ncalg::{Case, Element};
use crate::pfaffian::{pf_minor, pf_shuffle_of};
use crate::scalars::Scalar;
use crate::sklyanin::{sdet, sdet_minor, sdet_of, sklyanin_minor, Consts};
use crate::tensorops::Matrix;

/// Which block of indices borders the small minors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Border {
    /// `J = {N+1, …, N+M}`.
    Tail,
    /// The literal reading `{M+1, …, M+N}`.
    Literal,
}

/// Exponent of `Pf(X_J)` in the Pfaffian Sylvester identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PfExponent {
    /// `n - 1`, where `2n` is the size of the small matrix.
    Small,
    /// `m - 1`, where `2m = |J|`.
    Border,
}

fn morphism(o: &mut Outcome, case: Case, xt: &Matrix<Element>) {
    for (label, a, b) in relation_sides(case, xt, false) {
        o.compare(&format!("morphism {}", label), &a, &b);
    }
}

/// The bordered matrix `x̃_ij = X^{i ∪ J}_{j ∪ J}`.
pub fn bordered_sdet_matrix(case: Case, n: usize, m: usize, border: Border) -> Result<Matrix<Element>, String> {
    let tail: Vec<usize> = match border {
        Border::Tail => (n + 1..=n + m).collect(),
        Border::Literal => (m + 1..=m + n).collect(),
    };
    let mut out = Vec::new();
    for i in 1..=n {
        let mut row = Vec::new();
        for j in 1..=n {
            let rows: Vec<usize> = std::iter::once(i).chain(tail.iter().cloned()).collect();
            let cols: Vec<usize> = std::iter::once(j).chain(tail.iter().cloned()).collect();
            row.push(sklyanin_minor(case, n + m, &rows, &cols)?);
        }
        out.push(row);
    }
    Ok(out)
}

/// `x̃` satisfies the relations of the size-`N` algebra and
/// `sdet(X̃) = sdet(X_J)^{N-1} sdet(X)`.
pub fn sylvester_sdet(case: Case, n: usize, m: usize, border: Border) -> Result<Outcome, String> {
    if n == 0 || m == 0 {
        return Err("sizes must be positive".into());
    }
    if case == Case::Sp && (n % 2 != 0 || m % 2 != 0) {
        return Err("symplectic Sylvester identity needs N and M even".into());
    }
    let xt = bordered_sdet_matrix(case, n, m, border)?;
    let mut o = Outcome::new();
    morphism(&mut o, case, &xt);
    let j = IndexSet::range(n + 1, n + m);
    let rhs = sdet_minor(case, n + m, &j).pow(n as u32 - 1).mul(&sdet(case, n + m));
    o.compare("sdet", &sdet_of(&xt, Consts::Q), &rhs);
    o.note(format!("border {:?}", border));
    Ok(o)
}

/// `x̃_ij = Pf(X_{{i,j} ∪ J})` for `i < j`, extended q-antisymmetrically.
pub fn bordered_pf_matrix(n2: usize, m2: usize) -> Matrix<Element> {
    let total = n2 + m2;
    let j = IndexSet::range(n2 + 1, total);
    let mut out = vec![vec![Element::zero(); n2]; n2];
    for a in 1..=n2 {
        for b in a + 1..=n2 {
            let e = pf_minor(total, &j.with(a).with(b));
            out[b - 1][a - 1] = e.scale(&Scalar::q().neg());
            out[a - 1][b - 1] = e;
        }
    }
    out
}

/// Morphism property and `Pf(X̃) = Pf(X_J)^e Pf(X_{I ∪ J})` for sizes `2n`, `2m`.
pub fn sylvester_pf(n: usize, m: usize, exponent: PfExponent) -> Result<Outcome, String> {
    if n == 0 || m == 0 {
        return Err("sizes must be positive".into());
    }
    let (n2, m2) = (2 * n, 2 * m);
    let xt = bordered_pf_matrix(n2, m2);
    let mut o = Outcome::new();
    morphism(&mut o, Case::Sp, &xt);
    let e = match exponent {
        PfExponent::Small => n - 1,
        PfExponent::Border => m - 1,
    };
    let total = n2 + m2;
    let rhs = pf_minor(total, &IndexSet::range(n2 + 1, total)).pow(e as u32).mul(&pf_minor(total, &IndexSet::full(total)));
    let full: Vec<usize> = (1..=n2).collect();
    o.compare("Pf", &pf_shuffle_of(&xt, &full, Consts::Q), &rhs);
    o.note(format!("exponent {:?}", exponent));
    Ok(o)
}

/// Exponent convention on the right-hand side of the Grassmann-Plücker relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GpExponent {
    /// `(-q)^{j-n}`.
    Statement,
    /// `(-q)^{j-n-1}`.
    Expansion,
}

/// Both sides of the Grassmann-Plücker relation for odd `n`, `m`.
pub fn grassmann_plucker_sides(n: usize, m: usize, conv: GpExponent) -> Result<(Element, Element), String> {
    if n % 2 == 0 || m % 2 == 0 {
        return Err("n and m must be odd".into());
    }
    let total = n + m;
    let i = IndexSet::full(n);
    let j = IndexSet::range(n + 1, total);
    let mut lhs = Element::zero();
    for a in 1..=n {
        let t = pf_minor(total, &i.without(a)).mul(&pf_minor(total, &j.with(a)));
        lhs = lhs.add(&t.scale(&Scalar::mqpow(n as i32 - a as i32)));
    }
    let mut rhs = Element::zero();
    for b in n + 1..=total {
        let e = b as i32 - n as i32 - if conv == GpExponent::Expansion { 1 } else { 0 };
        let t = pf_minor(total, &i.with(b)).mul(&pf_minor(total, &j.without(b)));
        rhs = rhs.add(&t.scale(&Scalar::mqpow(e)));
    }
    Ok((lhs, rhs))
}

pub fn grassmann_plucker(n: usize, m: usize, conv: GpExponent) -> Result<Outcome, String> {
    let (l, r) = grassmann_plucker_sides(n, m, conv)?;
    let mut o = Outcome::new();
    o.compare(&format!("n = {}, m = {}", n, m), &l, &r);
    o.note(format!("exponent {:?}", conv));
    Ok(o)
}

/// The convention that holds at `n = m = 1`.
pub fn gp_convention() -> GpExponent {
    super::unarmed(|| {
        for c in [GpExponent::Expansion, GpExponent::Statement] {
            if grassmann_plucker(1, 1, c).map(|o| o.holds).unwrap_or(false) {
                return c;
            }
        }
        GpExponent::Expansion
    })
}
