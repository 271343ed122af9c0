//! Polynomial gcd over the rationals: dense Euclid for one variable,
//! recursive primitive remainder sequences otherwise.

use super::poly::{Mono, Poly, NVARS};
use super::rat::Rat;

/// Greatest common divisor of two genuine polynomials, normalized so that the
/// lex-leading coefficient is 1. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return monic(b);
    }
    if b.is_zero() {
        return monic(a);
    }
    if a.as_constant().is_some() || b.as_constant().is_some() {
        return Poly::one();
    }
    let mask = a.vars() | b.vars();
    if mask.count_ones() == 1 {
        let v = mask.trailing_zeros() as usize;
        return univariate_gcd(a, b, v);
    }
    let v = mask.trailing_zeros() as usize;
    let ca = content(a, v);
    let cb = content(b, v);
    let c = gcd(&ca, &cb);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    if deg(&pa, v) == 0 || deg(&pb, v) == 0 {
        return monic(&c);
    }
    let (mut f, mut g) = if deg(&pa, v) >= deg(&pb, v) { (pa, pb) } else { (pb, pa) };
    loop {
        let r = prem(&f, &g, v);
        if r.is_zero() {
            break;
        }
        let rp = primitive(&r, v);
        if deg(&rp, v) == 0 {
            g = Poly::one();
            break;
        }
        f = g;
        g = rp;
    }
    monic(&c.mul(&primitive(&g, v)))
}

pub fn monic(p: &Poly) -> Poly {
    match p.leading() {
        None => Poly::zero(),
        Some((_, c)) => {
            if c.is_one() {
                p.clone()
            } else {
                p.scale(&Rat::one().div(c))
            }
        }
    }
}

fn deg(p: &Poly, v: usize) -> i16 {
    p.degree_in(v).max(0)
}

fn coeff_at(p: &Poly, v: usize, e: i16) -> Poly {
    Poly::from_terms(
        p.terms()
            .iter()
            .filter(|(m, _)| m.0[v] == e)
            .map(|(m, c)| {
                let mut m = *m;
                m.0[v] = 0;
                (m, c.clone())
            })
            .collect(),
    )
}

fn coefficients(p: &Poly, v: usize) -> Vec<Poly> {
    let mut exps: Vec<i16> = p.terms().iter().map(|(m, _)| m.0[v]).collect();
    exps.sort_unstable();
    exps.dedup();
    exps.into_iter().map(|e| coeff_at(p, v, e)).collect()
}

/// Content with respect to `v`: gcd of the coefficients in the other variables.
fn content(p: &Poly, v: usize) -> Poly {
    let mut g = Poly::zero();
    for c in coefficients(p, v) {
        g = gcd(&g, &c);
        if g.as_constant().is_some() {
            return Poly::one();
        }
    }
    g
}

fn primitive(p: &Poly, v: usize) -> Poly {
    let c = content(p, v);
    p.exact_div(&c).expect("content divides")
}

fn prem(f: &Poly, g: &Poly, v: usize) -> Poly {
    let dg = deg(g, v);
    let lcg = coeff_at(g, v, dg);
    let mut r = f.clone();
    while !r.is_zero() && deg(&r, v) >= dg {
        let dr = deg(&r, v);
        let lcr = coeff_at(&r, v, dr);
        let shifted = g.mul(&lcr).shift(&Mono::var(v, dr - dg));
        r = r.mul(&lcg).sub(&shifted);
    }
    r
}

fn to_dense(p: &Poly, v: usize) -> Vec<Rat> {
    let d = deg(p, v) as usize;
    let mut out = vec![Rat::zero(); d + 1];
    for (m, c) in p.terms() {
        out[m.0[v] as usize] = c.clone();
    }
    out
}

fn from_dense(c: &[Rat], v: usize) -> Poly {
    Poly::from_terms(
        c.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (Mono::var(v, e as i16), c.clone()))
            .collect(),
    )
}

fn trim(a: &mut Vec<Rat>) {
    while a.len() > 1 && a.last().map_or(false, |c| c.is_zero()) {
        a.pop();
    }
}

fn is_dense_zero(a: &[Rat]) -> bool {
    a.iter().all(|c| c.is_zero())
}

fn dense_rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = b[db].clone();
    while !is_dense_zero(&r) && r.len() > db {
        let dr = r.len() - 1;
        let f = r[dr].div(&lb);
        for i in 0..=db {
            r[dr - db + i] = r[dr - db + i].sub(&f.mul(&b[i]));
        }
        r.pop();
        if r.is_empty() {
            r.push(Rat::zero());
        }
        trim(&mut r);
    }
    r
}

fn univariate_gcd(a: &Poly, b: &Poly, v: usize) -> Poly {
    debug_assert!(v < NVARS);
    let mut x = to_dense(a, v);
    let mut y = to_dense(b, v);
    trim(&mut x);
    trim(&mut y);
    while !is_dense_zero(&y) {
        let r = dense_rem(&x, &y);
        x = y;
        y = r;
    }
    monic(&from_dense(&x, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::text::parse_poly_for_tests as p;

    #[test]
    fn univariate() {
        let g = gcd(&p("q^2 - 1"), &p("q^2 + 2*q + 1"));
        assert_eq!(g, p("q + 1"));
    }

    #[test]
    fn coprime_is_one() {
        assert!(gcd(&p("q + 1"), &p("q + 2")).is_one());
    }

    #[test]
    fn multivariate() {
        let f = p("q*l + 1");
        let a = f.mul(&p("q + l"));
        let b = f.mul(&p("q - l")).mul(&p("a1 + 2"));
        assert_eq!(gcd(&a, &b), monic(&f));
    }

    #[test]
    fn multivariate_content() {
        let a = p("a1*q + a1");
        let b = p("a1*a2");
        assert_eq!(gcd(&a, &b), p("a1"));
    }
}
