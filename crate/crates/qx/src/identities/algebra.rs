//! Checks on the algebras themselves: presentations, the embedding, the
//! Sklyanin determinant and comatrix, `Y`, `ω`, centers, and the Pfaffian.

use super::Outcome;
use crate::matrix_algebra::{
    a_params, coideal_equations, det_q, phi_embed, phi_matrix, relation_sides, IndexSet,
};
use crate::ncalg::{
    basis_enumerate, linearly_independent, presentation, Case, Element, LocalElement, PresKind, Presentation, Ring,
};
use crate::pfaffian::{
    omega_power, orthogonality_equations, pf, pf_definition_of, pf_laplace_of, pf_normalizer, pf_shuffle_of,
    pf_square_explicit, plucker_equations,
};
use crate::scalars::Scalar;
use crate::sklyanin::{
    aux_minor, bracket_chain, comatrix, cramer_products, omega, omega_matrix, rt_op,
    sdet, sdet_explicit, sdet_minor, sdet_tag, sklyanin_minor, x_mat, x_pres, y_matrix, Consts,
};
use crate::tensorops::{antisymmetrizer_tilde, idx, inversions, Vector};
use std::sync::Arc;

fn check_size(case: Case, n: usize) -> Result<(), String> {
    if n == 0 {
        return Err("N must be positive".into());
    }
    if case == Case::Sp && n % 2 != 0 {
        return Err("the symplectic case needs even N".into());
    }
    Ok(())
}

/// Every defining relation of the presentation normal-forms to zero.
pub fn presentation_relations(kind: PresKind, n: usize) -> Outcome {
    let p = presentation(kind, n);
    let mut o = Outcome::new();
    for (k, row) in p.relation_rows().iter().enumerate() {
        let e = Element::from_terms(Some(p.clone()), row.iter().map(|(w, c)| (w.clone(), c.clone())));
        o.element(&format!("{} relation {}", kind.name(), k + 1), &e);
    }
    o
}

/// `φ` preserves the relations; images of PBW monomials of degree `≤ 3` are
/// linearly independent (checked at `a = 1`).
pub fn embedding(case: Case, n: usize, symbolic: bool) -> Result<Outcome, String> {
    check_size(case, n)?;
    let mut o = Outcome::new();
    let m = phi_matrix(case, n, &a_params(case, n, symbolic))?;
    for (label, a, b) in relation_sides(case, &m, false) {
        o.compare(&label, &a, &b);
    }
    let one = a_params(case, n, false);
    let xp = x_pres(case, n);
    for d in 1..=3 {
        let imgs: Vec<Element> =
            basis_enumerate(&xp, d).iter().map(|e| phi_embed(e, case, &one)).collect::<Result<_, _>>()?;
        o.check(&format!("degree {} images independent", d), linearly_independent(&imgs));
        o.note(format!("degree {}: monomials {}", d, imgs.len()));
    }
    Ok(o)
}

/// Coproduct of `φ(x_ij)` lands in `A_q(Mat_N) ⊗ φ(A_q(X_N))`.
pub fn coideal(case: Case, n: usize, symbolic: bool) -> Result<Outcome, String> {
    check_size(case, n)?;
    Ok(Outcome::from_equations(&coideal_equations(case, n, &a_params(case, n, symbolic))?))
}

/// `γ` with `φ(sdet) = γ det_q(T)^2`.
pub fn sdet_gamma(case: Case, n: usize, a: &[Scalar]) -> Scalar {
    let prod = a.iter().fold(Scalar::one(), |acc, x| acc.mul(x));
    match case {
        Case::O => prod,
        Case::Sp => Scalar::qpow(3 * (n / 2) as i32).mul(&prod.mul(&prod)),
    }
}

/// `φ(sdet_q(X)) = γ det_q(T)^2`.
pub fn sdet_det2(case: Case, n: usize, symbolic: bool) -> Result<Outcome, String> {
    check_size(case, n)?;
    let a = a_params(case, n, symbolic);
    let lhs = phi_embed(&sdet(case, n), case, &a)?;
    let d = det_q(n);
    let rhs = d.mul(&d).scale(&sdet_gamma(case, n, &a));
    let mut o = Outcome::new();
    o.compare("phi(sdet) - gamma det^2", &lhs, &rhs);
    Ok(o)
}

/// The explicit permutation sum equals the operator definition of `sdet`.
pub fn sdet_explicit_check(case: Case, n: usize) -> Result<Outcome, String> {
    check_size(case, n)?;
    let mut o = Outcome::new();
    o.compare("explicit - operator", &sdet_explicit(case, n), &sdet(case, n));
    o.note("pi_2 base case: p'_N = w_N, so both permutations of S_2 map to the identity");
    o.note(format!("transposed factors: {} (floor(N/2))", n / 2));
    Ok(o)
}

/// `X̂X = XX̂ = sdet I`, `x̂_ii` is the complementary principal minor, and
/// `Ã_N ⟨X_1…X_{N-1}⟩ R^t_{1N}⋯R^t_{N-1,N} = Ã_N X̂_N` on every `v_ij`.
pub fn comatrix_check(case: Case, n: usize) -> Result<Outcome, String> {
    check_size(case, n)?;
    let mut o = Outcome::new();
    let s = sdet(case, n);
    let (hx, xh) = cramer_products(case, n);
    for i in 0..n {
        for j in 0..n {
            let want = if i == j { s.clone() } else { Element::zero() };
            o.compare(&format!("hat(X) X ({},{})", i + 1, j + 1), &hx[i][j], &want);
            o.compare(&format!("X hat(X) ({},{})", i + 1, j + 1), &xh[i][j], &want);
        }
    }
    let hat = comatrix(case, n);
    let x = x_mat(case, n);
    for i in 1..=n {
        let rest: Vec<usize> = (1..=n).filter(|&k| k != i).collect();
        let minor = if rest.is_empty() { Element::one() } else { sklyanin_minor(case, n, &rest, &rest)? };
        o.compare(&format!("diagonal {}", i), &hat[i - 1][i - 1], &minor);
    }
    let rt = rt_op(n, Consts::Q);
    let a = Arc::new(antisymmetrizer_tilde(n, n, false));
    let pos: Vec<usize> = (0..n).collect();
    let mut chain = bracket_chain(&x, n - 1, Consts::Q);
    chain.m = n;
    for k in 0..n - 1 {
        chain = chain.scalar(&rt, &[k, n - 1]);
    }
    let chain = crate::tensorops::Chain::new(n, n).scalar(&a, &pos).then(&chain);
    for i in 1..=n {
        let head: Vec<usize> = (0..n).filter(|&k| k != i - 1).collect();
        for j in 1..=n {
            let mut v = head.clone();
            v.push(j - 1);
            let lhs = chain.apply(&Vector::basis(n, &idx(&v)));
            let mut w = Vector::zero(n, n);
            for k in 0..n {
                let mut key = head.clone();
                key.push(k);
                w.add_at(idx(&key), hat[k][j - 1].clone());
            }
            let rhs = a.act(&pos, &w);
            let d = lhs.add(&rhs.scale(&Scalar::from_int(-1)));
            for (row, e) in d.data {
                o.element(&format!("v_({},{}) at {:?}", i, j, row.as_slice()), &e);
            }
        }
    }
    Ok(o)
}

/// `Y` satisfies the symmetry and quadratic relations with `q^{-1}`.
pub fn y_relations(case: Case, n: usize) -> Result<Outcome, String> {
    check_size(case, n)?;
    let mut o = Outcome::new();
    for (label, a, b) in relation_sides(case, &y_matrix(case, n), true) {
        o.local(&label, &a, &b);
    }
    Ok(o)
}

/// `ω` respects the `q`-relations and `ω^2 = id` on generators.
pub fn omega_check(case: Case, n: usize) -> Result<Outcome, String> {
    check_size(case, n)?;
    let mut o = Outcome::new();
    for (label, a, b) in relation_sides(case, &omega_matrix(case, n), false) {
        o.local(&format!("omega {}", label), &a, &b);
    }
    // ω(y_{i'j'}) = (-q)^{j'-i'} ω(x̂_{i'j'}) ω(sdet)^{-1}
    let hat = comatrix(case, n);
    let ws = omega(&sdet(case, n), case, n);
    let x = x_mat(case, n);
    for i in 1..=n {
        for j in 1..=n {
            let (ii, jj) = (n + 1 - i, n + 1 - j);
            let lhs = omega(&hat[ii - 1][jj - 1], case, n).scale(&Scalar::mqpow(jj as i32 - ii as i32));
            let rhs = LocalElement::from_element(x[i - 1][j - 1].clone()).mul(&ws);
            o.local(&format!("omega^2 x[{},{}]", i, j), &lhs, &rhs);
        }
    }
    o.local("omega(1)", &omega(&Element::one(), case, n), &LocalElement::new(Element::one(), 0, &sdet_tag(case, n)));
    Ok(o)
}

/// Which sign branch of the expansion of `X̌^{i_1…i_m}_{j_1…j_{m-1},c}` at
/// `c = i_m` a configuration satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuxBranch {
    /// `+(-q)^{2l(I)} Σ (-q)^{r-1} …`
    Upper,
    /// `-(-q)^{2l(I)} Σ (-q)^{r+1} …`
    Lower,
}

fn aux_branch_value(case: Case, n: usize, rows: &[usize], cols: &[usize], branch: AuxBranch) -> Result<Element, String> {
    let m = rows.len();
    let x = x_mat(case, n);
    let l = inversions(rows) as i32;
    let j1 = cols[0];
    let mut acc = Element::zero();
    for r in 1..m {
        let rest: Vec<usize> = (1..m).filter(|&k| k != r).map(|k| rows[k - 1]).collect();
        let minor = if rest.is_empty() { Element::one() } else { sklyanin_minor(case, n, &rest, &cols[1..])? };
        let e = match branch {
            AuxBranch::Upper => r as i32 - 1,
            AuxBranch::Lower => r as i32 + 1,
        };
        acc = acc.add(&x[j1 - 1][rows[r - 1] - 1].mul(&minor).scale(&Scalar::mqpow(e)));
    }
    let sign = match branch {
        AuxBranch::Upper => Scalar::one(),
        AuxBranch::Lower => Scalar::from_int(-1),
    };
    Ok(acc.scale(&sign.mul(&Scalar::mqpow(2 * l))).normal_form())
}

/// Configurations of the expansion: `i_1 < … < i_{m-1}`, `i_m` distinct,
/// `j_1 ∈ I`, `j_2 < … < j_{m-1}` avoiding `j_1`.
fn aux_configs(n: usize, m: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for head in IndexSet::all_subsets(n).into_iter().filter(|s| s.len() == m - 1) {
        for im in (1..=n).filter(|&k| !head.contains(k)) {
            let mut rows = head.as_slice().to_vec();
            rows.push(im);
            for &j1 in &rows {
                for tail in IndexSet::all_subsets(n).into_iter().filter(|s| s.len() == m - 2 && !s.contains(j1)) {
                    let mut cols = vec![j1];
                    cols.extend_from_slice(tail.as_slice());
                    out.push((rows.clone(), cols));
                }
            }
        }
    }
    out
}

/// The auxiliary-minor expansions at size `m`: column expansion of `X^I_J`,
/// vanishing for `c ∉ I`, and the `c = i_m` formula, recording which sign
/// branch each case `j_1 = i_m` / `j_1 = i_p` satisfies.
pub fn aux_expansion(case: Case, n: usize, m: usize) -> Result<Outcome, String> {
    check_size(case, n)?;
    if m < 2 || m > n {
        return Err(format!("m must lie in 2..={}", n));
    }
    let mut o = Outcome::new();
    let x = x_mat(case, n);
    let sets: Vec<IndexSet> = IndexSet::all_subsets(n).into_iter().filter(|s| s.len() == m).collect();
    for i in &sets {
        for j in &sets {
            let (js, jm) = (&j.as_slice()[..m - 1], j.as_slice()[m - 1]);
            let mut acc = Element::zero();
            for c in 1..=n {
                acc = acc.add(&aux_minor(case, n, i.as_slice(), js, c).mul(&x[c - 1][jm - 1]));
            }
            let want = sklyanin_minor(case, n, i.as_slice(), j.as_slice())?;
            o.compare(&format!("column expansion {} {}", i, j), &acc, &want);
        }
    }
    let mut seen: [Option<Vec<AuxBranch>>; 2] = [None, None];
    for (rows, cols) in aux_configs(n, m) {
        let tail = &cols[1..];
        for c in (1..=n).filter(|c| !tail.contains(c)) {
            let v = aux_minor(case, n, &rows, &cols, c);
            if !rows.contains(&c) {
                o.element(&format!("c = {} not in rows {:?}", c, rows), &v);
                continue;
            }
            if c != rows[m - 1] {
                continue;
            }
            let ok: Vec<AuxBranch> = [AuxBranch::Upper, AuxBranch::Lower]
                .into_iter()
                .filter(|&b| aux_branch_value(case, n, &rows, &cols, b).map(|e| e.sub(&v).normal_form().is_zero()).unwrap_or(false))
                .collect();
            let k = usize::from(cols[0] != rows[m - 1]);
            o.check(&format!("c = i_m {:?} {:?}", rows, cols), !ok.is_empty());
            let merged = match &seen[k] {
                None => ok,
                Some(prev) => prev.iter().cloned().filter(|b| ok.contains(b)).collect(),
            };
            seen[k] = Some(merged);
        }
    }
    for (k, name) in ["j_1 = i_m", "j_1 = i_p"].iter().enumerate() {
        match &seen[k] {
            Some(b) if !b.is_empty() => o.note(format!("{}: branch {:?}", name, b)),
            Some(_) => o.fail(&format!("{}: no single branch", name), 1),
            None => {}
        }
    }
    Ok(o)
}

/// `x_ab X^I_I = X^I_I x_ab` for `a, b ∈ I`, `|I| = 2, 3`.
pub fn commuting_minors(case: Case, n: usize) -> Result<Outcome, String> {
    check_size(case, n)?;
    let mut o = Outcome::new();
    let x = x_mat(case, n);
    for s in IndexSet::all_subsets(n).into_iter().filter(|s| (2..=3).contains(&s.len())) {
        let m = sdet_minor(case, n, &s);
        for &a in s.as_slice() {
            for &b in s.as_slice() {
                let g = &x[a - 1][b - 1];
                o.compare(&format!("x[{},{}] against X^{}", a, b, s), &g.mul(&m), &m.mul(g));
            }
        }
    }
    Ok(o)
}

fn central_with_powers(p: &Arc<Presentation>, c: &Element, name: &str) -> Outcome {
    let mut o = Outcome::new();
    for g in 0..p.gens().len() as u8 {
        let x = Element::gen(p, g);
        o.compare(&format!("[{}, {}]", name, p.gen_name(g)), &c.mul(&x), &x.mul(c));
    }
    let powers: Vec<Element> = (0..=3).map(|k| c.pow(k)).collect();
    o.check(&format!("powers of {} independent", name), linearly_independent(&powers));
    o
}

/// `sdet_q(X)` is central and its powers up to 3 are independent.
pub fn center_sdet(case: Case, n: usize) -> Result<Outcome, String> {
    check_size(case, n)?;
    Ok(central_with_powers(&x_pres(case, n), &sdet(case, n), "sdet"))
}

fn check_pf_size(n: usize) -> Result<(), String> {
    if n == 0 || n % 2 != 0 {
        return Err("Pfaffians need even N".into());
    }
    Ok(())
}

/// `Pf_q(X)` is central and its powers up to 3 are independent.
pub fn center_pf(n: usize) -> Result<Outcome, String> {
    check_pf_size(n)?;
    Ok(central_with_powers(&x_pres(Case::Sp, n), &pf(n), "Pf"))
}

/// `X X^* = X^* X = Pf I`.
pub fn pf_orthogonality(n: usize) -> Result<Outcome, String> {
    check_pf_size(n)?;
    Ok(Outcome::from_equations(&orthogonality_equations(n)))
}

/// Definition, shuffle and Laplace forms of `Pf` agree on every even subset
/// (subsets of size at most `max_size`).
pub fn pf_shuffle_vs_def(n: usize, max_size: usize) -> Result<Outcome, String> {
    check_pf_size(n)?;
    let x = x_mat(Case::Sp, n);
    let mut o = Outcome::new();
    let mut count = 0;
    for s in IndexSet::all_subsets(n).into_iter().filter(|s| !s.is_empty() && s.len() % 2 == 0 && s.len() <= max_size) {
        let sh = pf_shuffle_of(&x, s.as_slice(), Consts::Q);
        let def = pf_definition_of(&x, s.as_slice())?;
        o.compare(&format!("definition {}", s), &def, &sh);
        o.compare(&format!("Laplace {}", s), &pf_laplace_of(&x, s.as_slice(), Consts::Q), &sh);
        count += 1;
    }
    o.note(format!("subsets: {}", count));
    Ok(o)
}

/// The Plücker-type relations among the `x_ij`.
pub fn plucker(n: usize) -> Result<Outcome, String> {
    check_pf_size(n)?;
    let mut o = Outcome::new();
    for (label, l, r) in plucker_equations(&x_mat(Case::Sp, n)) {
        o.compare(&label, &l, &r);
    }
    Ok(o)
}

/// `Ω^{n}` has `y_1⋯y_{2n}`-coefficient `(1+q^2)^n [n]_{q^4}! Pf`.
pub fn omega_power_check(n: usize) -> Result<Outcome, String> {
    check_pf_size(n)?;
    let mut o = Outcome::new();
    let want = pf(n).scale(&pf_normalizer(n / 2));
    o.compare("Omega^n coefficient", &omega_power(n), &want);
    Ok(o)
}

/// `sdet = q^{3n} Pf^2`, the explicit form of `Pf^2`, and `φ(Pf) = a_1⋯a_n det_q`.
pub fn sdet_pf(n: usize, symbolic: bool) -> Result<Outcome, String> {
    check_pf_size(n)?;
    let h = (n / 2) as i32;
    let mut o = Outcome::new();
    let p = pf(n);
    let p2 = p.mul(&p);
    o.compare("sdet - q^{3n} Pf^2", &sdet(Case::Sp, n), &p2.scale(&Scalar::qpow(3 * h)));
    o.compare("Pf^2 explicit", &pf_square_explicit(n), &p2);
    let a = a_params(Case::Sp, n, symbolic);
    let prod = a.iter().fold(Scalar::one(), |acc, x| acc.mul(x));
    o.compare("phi(Pf) - a det", &phi_embed(&p, Case::Sp, &a)?, &det_q(n).scale(&prod));
    Ok(o)
}
