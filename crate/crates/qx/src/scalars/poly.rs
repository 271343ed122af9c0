//! Sparse multivariate Laurent polynomials with exact rational coefficients.

use super::rat::Rat;
use std::cmp::Ordering;

pub const NVARS: usize = 12;

/// Variable slots: `q`, `l`, `m`, then `a1` .. `a9`.
pub fn var_name(i: usize) -> String {
    match i {
        0 => "q".into(),
        1 => "l".into(),
        2 => "m".into(),
        _ => format!("a{}", i - 2),
    }
}

pub fn var_index(name: &str) -> Option<usize> {
    match name {
        "q" => Some(0),
        "l" => Some(1),
        "m" => Some(2),
        _ => {
            let k: usize = name.strip_prefix('a')?.parse().ok()?;
            if k >= 1 && k + 2 < NVARS {
                Some(k + 2)
            } else {
                None
            }
        }
    }
}

/// Exponent vector; negative entries are allowed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono(pub [i16; NVARS]);

impl Mono {
    pub fn one() -> Mono {
        Mono([0; NVARS])
    }

    pub fn var(i: usize, e: i16) -> Mono {
        let mut m = Mono::one();
        m.0[i] = e;
        m
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for i in 0..NVARS {
            r.0[i] += o.0[i];
        }
        r
    }

    pub fn div(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for i in 0..NVARS {
            r.0[i] -= o.0[i];
        }
        r
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    pub fn divides(&self, o: &Mono) -> bool {
        (0..NVARS).all(|i| self.0[i] <= o.0[i])
    }

    /// Componentwise minimum.
    pub fn meet(&self, o: &Mono) -> Mono {
        let mut r = *self;
        for i in 0..NVARS {
            r.0[i] = r.0[i].min(o.0[i]);
        }
        r
    }

    pub fn vars(&self) -> u32 {
        let mut mask = 0;
        for i in 0..NVARS {
            if self.0[i] != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }
}

/// Terms are kept sorted by monomial (ascending) with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, Rat)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(Mono::one(), c)] }
        }
    }

    pub fn monomial(m: Mono, c: Rat) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn from_terms(mut t: Vec<(Mono, Rat)>) -> Poly {
        t.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Mono, Rat)> = Vec::with_capacity(t.len());
        for (m, c) in t {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = last.1.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, Rat)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Lexicographically largest term.
    pub fn leading(&self) -> Option<&(Mono, Rat)> {
        self.terms.last()
    }

    pub fn vars(&self) -> u32 {
        self.terms.iter().fold(0, |m, (mo, _)| m | mo.vars())
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.iter();
        match it.next() {
            None => Mono::one(),
            Some((m0, _)) => it.fold(*m0, |acc, (m, _)| acc.meet(m)),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.0.iter().all(|&e| e >= 0))
    }

    pub fn degree_in(&self, v: usize) -> i16 {
        self.terms.iter().map(|(m, _)| m.0[v]).max().unwrap_or(i16::MIN)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        merge(self, o, false)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        merge(self, o, true)
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, k)| (*m, k.mul(c))).collect() }
    }

    pub fn shift(&self, by: &Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.mul(by), c.clone())).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return o.shift(m).scale(c);
        }
        if o.terms.len() == 1 {
            let (m, c) = &o.terms[0];
            return self.shift(m).scale(c);
        }
        let mut t = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                t.push((m1.mul(m2), c1.mul(c2)));
            }
        }
        Poly::from_terms(t)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut r = Poly::one();
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(&b);
            }
        }
        r
    }

    /// Replaces variable `v` by the nonzero rational `x`.
    pub fn substitute(&self, v: usize, x: &Rat) -> Poly {
        let t = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = *m;
                let e = m.0[v];
                m.0[v] = 0;
                let mut f = Rat::one();
                for _ in 0..e.unsigned_abs() {
                    f = f.mul(x);
                }
                if e < 0 {
                    f = Rat::one().div(&f);
                }
                (m, c.mul(&f))
            })
            .collect();
        Poly::from_terms(t)
    }

    /// Negates the exponent of variable `v` in every term.
    pub fn invert_var(&self, v: usize) -> Poly {
        let t = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = *m;
                m.0[v] = -m.0[v];
                (m, c.clone())
            })
            .collect();
        Poly::from_terms(t)
    }

    /// Multivariate division by the lex-leading term of `d`. Both operands
    /// must be genuine polynomials.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let (lm, lc) = d.leading().cloned().unwrap();
        let mut rem = self.clone();
        let mut quo = Vec::new();
        let mut out = Vec::new();
        while let Some((m, c)) = rem.terms.last().cloned() {
            if lm.divides(&m) {
                let qm = m.div(&lm);
                let qc = c.div(&lc);
                rem = rem.sub(&d.shift(&qm).scale(&qc));
                quo.push((qm, qc));
            } else {
                rem.terms.pop();
                out.push((m, c));
            }
        }
        (Poly::from_terms(quo), Poly::from_terms(out))
    }

    /// Exact quotient in the Laurent ring, or `None` if `d` does not divide.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.terms.len() == 1 {
            let (m, c) = &d.terms[0];
            let inv = Mono::one().div(m);
            return Some(self.shift(&inv).scale(&Rat::one().div(c)));
        }
        let ma = self.min_mono();
        let md = d.min_mono();
        let a = self.shift(&Mono::one().div(&ma));
        let b = d.shift(&Mono::one().div(&md));
        let (lm, lc) = b.leading().cloned().unwrap();
        let mut rem = a;
        let mut quo = Vec::new();
        while let Some((m, c)) = rem.terms.last().cloned() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = m.div(&lm);
            let qc = c.div(&lc);
            rem = rem.sub(&b.shift(&qm).scale(&qc));
            quo.push((qm, qc));
        }
        Some(Poly::from_terms(quo).shift(&ma.div(&md)))
    }

    /// Sort key used for printing: total degree, then exponents, both descending.
    pub fn display_order(&self) -> Vec<&(Mono, Rat)> {
        let mut v: Vec<&(Mono, Rat)> = self.terms.iter().collect();
        v.sort_by(|a, b| match b.0.total_degree().cmp(&a.0.total_degree()) {
            Ordering::Equal => b.0.cmp(&a.0),
            o => o,
        });
        v
    }
}

fn merge(a: &Poly, b: &Poly, negate_b: bool) -> Poly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        let (ma, ca) = &a.terms[i];
        let (mb, cb) = &b.terms[j];
        match ma.cmp(mb) {
            Ordering::Less => {
                out.push((*ma, ca.clone()));
                i += 1;
            }
            Ordering::Greater => {
                out.push((*mb, if negate_b { cb.neg() } else { cb.clone() }));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b { ca.sub(cb) } else { ca.add(cb) };
                if !c.is_zero() {
                    out.push((*ma, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for t in &a.terms[i..] {
        out.push(t.clone());
    }
    for (m, c) in &b.terms[j..] {
        out.push((*m, if negate_b { c.neg() } else { c.clone() }));
    }
    Poly { terms: out }
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", super::text::poly_to_string(self))
    }
}
