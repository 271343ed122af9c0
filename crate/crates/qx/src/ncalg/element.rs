use super::gens::{Family, PresKind};
use super::presentation::{presentation, NfError, Presentation};
use super::word::Word;
use crate::scalars::text::{parse_with, ExprValue};
use crate::scalars::{ParseError, Scalar};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// A linear combination of words over a presentation.
///
/// Products made with [`Element::mul`] are normal-formed; [`Element::mul_raw`]
/// only concatenates.
#[derive(Clone)]
pub struct Element {
    pres: Option<Arc<Presentation>>,
    terms: BTreeMap<Word, Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, o: &Element) -> bool {
        self.terms == o.terms
    }
}

impl Element {
    pub fn zero() -> Element {
        Element { pres: None, terms: BTreeMap::new() }
    }

    pub fn one() -> Element {
        Element::scalar(Scalar::one())
    }

    pub fn scalar(s: Scalar) -> Element {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(Word::empty(), s);
        }
        Element { pres: None, terms }
    }

    pub fn gen(p: &Arc<Presentation>, g: u8) -> Element {
        Element::from_terms(Some(p.clone()), vec![(Word::single(g), Scalar::one())])
    }

    pub fn from_terms(pres: Option<Arc<Presentation>>, t: impl IntoIterator<Item = (Word, Scalar)>) -> Element {
        let mut e = Element { pres, terms: BTreeMap::new() };
        for (w, c) in t {
            e.add_term(w, c);
        }
        e
    }

    /// Generator `fam[i,j]` resolved through the symmetry of the presentation.
    pub fn generator(p: &Arc<Presentation>, fam: Family, i: usize, j: usize) -> Result<Element, String> {
        Ok(match p.alpha.canon(fam, i, j)? {
            Some((c, g)) => Element::gen(p, g).scale(&c),
            None => Element::zero().with_pres(p),
        })
    }

    pub fn with_pres(mut self, p: &Arc<Presentation>) -> Element {
        self.pres = Some(p.clone());
        self
    }

    pub fn pres(&self) -> Option<&Arc<Presentation>> {
        self.pres.as_ref()
    }

    fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v = v.add(&c);
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    fn join_pres(&self, o: &Element) -> Option<Arc<Presentation>> {
        match (&self.pres, &o.pres) {
            (Some(a), Some(b)) => {
                debug_assert_eq!(a.id(), b.id(), "mixed presentations");
                Some(a.clone())
            }
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Zero as stored. Call on normal forms for a semantic test.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| w.len()).max()
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add(&self, o: &Element) -> Element {
        let mut r = self.clone();
        r.pres = self.join_pres(o);
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Element) -> Element {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Element {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        if s.is_zero() {
            return Element { pres: self.pres.clone(), terms: BTreeMap::new() };
        }
        self.map_coeffs(|c| c.mul(s))
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> Element {
        Element::from_terms(self.pres.clone(), self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Applies `q -> q^{-1}` to every coefficient.
    pub fn bar(&self) -> Element {
        self.map_coeffs(|c| c.bar())
    }

    /// Free product: words are concatenated without reduction.
    pub fn mul_raw(&self, o: &Element) -> Element {
        let mut r = Element { pres: self.join_pres(o), terms: BTreeMap::new() };
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                r.add_term(w1.concat(w2), c1.mul(c2));
            }
        }
        r
    }

    /// Normal-formed product.
    pub fn try_mul(&self, o: &Element) -> Result<Element, NfError> {
        let pres = match self.join_pres(o) {
            Some(p) => p,
            None => return Ok(self.mul_raw(o)),
        };
        Presentation::budgeted(|| {
            let a = self.normal_form_in(&pres)?;
            let mut r = Element { pres: Some(pres.clone()), terms: BTreeMap::new() };
            for (w2, c2) in &o.terms {
                let mut start = Vec::with_capacity(a.terms.len());
                for (w1, c1) in &a.terms {
                    start.push((w1.clone(), c1.mul(c2)));
                }
                for (w1, c) in start {
                    for (w, v) in pres.reduce_product(&w1, &c, w2)? {
                        r.add_term(w, v);
                    }
                }
            }
            Ok(r)
        })
    }

    /// Normal-formed product; panics if the reduction budget is exhausted.
    pub fn mul(&self, o: &Element) -> Element {
        self.try_mul(o).unwrap_or_else(|e| panic!("{}", e))
    }

    pub fn pow(&self, e: u32) -> Element {
        let mut r = Element::one();
        r.pres = self.pres.clone();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    fn normal_form_in(&self, pres: &Arc<Presentation>) -> Result<Element, NfError> {
        if self.terms.keys().all(|w| pres.is_normal_word(w)) {
            let mut r = self.clone();
            r.pres = Some(pres.clone());
            return Ok(r);
        }
        let mut r = Element { pres: Some(pres.clone()), terms: BTreeMap::new() };
        for (w, c) in &self.terms {
            for (w2, v) in pres.reduce_product(&Word::empty(), c, w)? {
                r.add_term(w2, v);
            }
        }
        Ok(r)
    }

    pub fn try_normal_form(&self) -> Result<Element, NfError> {
        match &self.pres {
            None => Ok(self.clone()),
            Some(p) => Presentation::budgeted(|| self.normal_form_in(p)),
        }
    }

    pub fn normal_form(&self) -> Element {
        self.try_normal_form().unwrap_or_else(|e| panic!("{}", e))
    }

    pub fn is_normal(&self) -> bool {
        match &self.pres {
            None => true,
            Some(p) => self.terms.keys().all(|w| p.is_normal_word(w)),
        }
    }

    /// `[self, o] = self o - o self`, normal-formed.
    pub fn commutator(&self, o: &Element) -> Element {
        self.mul(o).sub(&o.mul(self))
    }

    /// Evaluates the element with generator `g` sent to `f(g)`; products are
    /// taken in `R` in word order.
    pub fn substitute<R: crate::ncalg::Ring>(&self, f: &dyn Fn(u8) -> R) -> R {
        let mut acc = R::zero();
        for (w, c) in &self.terms {
            let mut t = R::from_scalar(c.clone());
            for &g in w.iter() {
                t = t.mul(&f(g));
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Words of this element with presentation generator names.
    pub fn word_string(&self, w: &Word) -> String {
        let p = match &self.pres {
            Some(p) => p,
            None => return String::new(),
        };
        let mut parts: Vec<String> = Vec::new();
        let mut k = 0;
        while k < w.len() {
            let g = w[k];
            let mut e = 1;
            while k + e < w.len() && w[k + e] == g {
                e += 1;
            }
            let name = p.gen_name(g);
            parts.push(if e == 1 { name } else { format!("{}^{}", name, e) });
            k += e;
        }
        parts.join("*")
    }

    /// Parses an expression in the generators of `p` without normal-forming.
    pub fn parse(p: &Arc<Presentation>, src: &str) -> Result<Element, ParseError> {
        let pr = p.clone();
        let r: Element = parse_with(src, |name, idx| {
            if let Some(fam) = Family::from_name(name) {
                let idx = idx.ok_or_else(|| format!("generator '{}' needs an index", name))?;
                let (i, j) = match (fam, idx.len()) {
                    (Family::Y, 1) => (idx[0], 0),
                    (Family::Y, _) => return Err("y takes one index".into()),
                    (_, 2) => (idx[0], idx[1]),
                    _ => return Err(format!("{} takes two indices", name)),
                };
                return Element::generator(&pr, fam, i, j);
            }
            if idx.is_some() {
                return Err(format!("unknown generator '{}'", name));
            }
            let s = crate::scalars::parse_scalar(name).map_err(|e| e.msg)?;
            Ok(Element::scalar(s))
        })?;
        Ok(r.with_pres(p))
    }
}

impl ExprValue for Element {
    fn from_scalar(s: Scalar) -> Self {
        Element::scalar(s)
    }
    fn add(&self, o: &Self) -> Self {
        Element::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Element::sub(self, o)
    }
    fn neg(&self) -> Self {
        Element::neg(self)
    }
    fn mul(&self, o: &Self) -> Result<Self, String> {
        Ok(self.mul_raw(o))
    }
    fn div(&self, o: &Self) -> Result<Self, String> {
        match o.as_scalar() {
            Some(s) if !s.is_zero() => Ok(self.scale(&s.inv().map_err(|e| e.to_string())?)),
            Some(_) => Err("division by zero".into()),
            None => Err("division by a non-scalar".into()),
        }
    }
    fn pow(&self, e: i64) -> Result<Self, String> {
        if e < 0 {
            if let Some(s) = self.as_scalar() {
                let s = s.checked_pow(e as i32).map_err(|e| e.to_string())?;
                return Ok(Element::scalar(s));
            }
            return Err("negative power of a non-scalar".into());
        }
        let mut r = Element::one();
        for _ in 0..e {
            r = r.mul_raw(self);
        }
        Ok(r)
    }
}

pub(crate) fn coeff_text(c: &Scalar) -> (bool, String) {
    if let Some((m, r)) = c.as_signed_monomial() {
        let neg = r.is_negative();
        let body = Scalar::from_poly(crate::scalars::Poly::monomial(m, r.abs())).to_string();
        return (neg, body);
    }
    let lead_neg = c.num().display_order().first().map(|t| t.1.is_negative()).unwrap_or(false);
    if lead_neg {
        (true, format!("({})", c.neg()))
    } else {
        (false, format!("({})", c))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let (neg, body) = coeff_text(c);
            let text = if w.is_empty() {
                body
            } else if body == "1" {
                self.word_string(w)
            } else {
                format!("{}*{}", body, self.word_string(w))
            };
            match (first, neg) {
                (true, false) => f.write_str(&text)?,
                (true, true) => write!(f, "-{}", text)?,
                (false, false) => write!(f, " + {}", text)?,
                (false, true) => write!(f, " - {}", text)?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Parses and normal-forms `src` in the presentation `kind` of size `n`.
pub fn normal_form_of(kind: PresKind, n: usize, src: &str) -> Result<Element, String> {
    let p = presentation(kind, n);
    let e = Element::parse(&p, src).map_err(|e| e.to_string())?;
    e.try_normal_form().map_err(|e| e.to_string())
}
