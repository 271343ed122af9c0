//! Identities among products of principal minors, written as descriptors,
//! and the complementary (Cayley) and Muir transformers on them.

use super::Outcome;
use crate::matrix_algebra::IndexSet;
use crate::ncalg::{Case, Element};
use crate::pfaffian::pf_minor;
use crate::scalars::text::{parse_with, ExprValue, ParseError};
use crate::scalars::Scalar;
use crate::sklyanin::sdet_minor;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Sdet,
    Pf,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Sdet => "sdet",
            Kind::Pf => "pf",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Minor(IndexSet),
    /// Inverse of the minor on the set.
    Inv(IndexSet),
}

impl Factor {
    pub fn set(&self) -> &IndexSet {
        match self {
            Factor::Minor(s) | Factor::Inv(s) => s,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub factors: Vec<Factor>,
}

/// `Σ_i b_i Π_j m(I_ij) = 0`, where `m` is `sdet` or `Pf` of a principal
/// submatrix of the size-`n` generator matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Descriptor {
    pub kind: Kind,
    pub n: usize,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescriptorError {
    #[error("parse error at {0}")]
    Parse(String),
    #[error("index set {0} exceeds N = {1}")]
    Range(String, usize),
    #[error("Pfaffian factor on odd set {0}")]
    Parity(String),
    #[error("{0}")]
    Malformed(String),
}

impl Descriptor {
    pub fn new(kind: Kind, n: usize, terms: Vec<Term>) -> Descriptor {
        Descriptor { kind, n, terms }.normalized()
    }

    /// Parses `sdet[1,2]*sdet[1] - q*sdet[1,2,3]^-1` style text.
    pub fn parse(src: &str, n: usize) -> Result<Descriptor, DescriptorError> {
        let mut kind = None;
        let v: Sum = parse_with(src, |name, idx| {
            let k = match name {
                "sdet" => Kind::Sdet,
                "pf" => Kind::Pf,
                _ => {
                    if idx.is_some() {
                        return Err(format!("unknown minor '{}'", name));
                    }
                    let s = crate::scalars::parse_scalar(name).map_err(|e| e.msg)?;
                    return Ok(Sum::scalar(s));
                }
            };
            if *kind.get_or_insert(k) != k {
                return Err("sdet and pf factors cannot be mixed".into());
            }
            let set = IndexSet::new(idx.ok_or("minor needs an index set")?.to_vec())?;
            Ok(Sum(vec![Term { coeff: Scalar::one(), factors: vec![Factor::Minor(set)] }]))
        })
        .map_err(|e: ParseError| DescriptorError::Parse(e.to_string()))?;
        let d = Descriptor::new(kind.unwrap_or(Kind::Sdet), n, v.0);
        d.validate()?;
        Ok(d)
    }

    /// Union of all factor sets.
    pub fn ground_set(&self) -> IndexSet {
        self.terms.iter().flat_map(|t| t.factors.iter()).fold(IndexSet::empty(), |a, f| a.union(f.set()))
    }

    pub fn validate(&self) -> Result<(), DescriptorError> {
        for t in &self.terms {
            for f in &t.factors {
                let s = f.set();
                if s.max().map_or(false, |m| m > self.n) {
                    return Err(DescriptorError::Range(s.to_string(), self.n));
                }
                if self.kind == Kind::Pf && s.len() % 2 != 0 {
                    return Err(DescriptorError::Parity(s.to_string()));
                }
            }
        }
        Ok(())
    }

    /// Drops empty minors and cancels `m(X) m(X)^{-1}` pairs for the full set.
    pub fn normalized(mut self) -> Descriptor {
        let full = IndexSet::full(self.n);
        let mut out: Vec<Term> = Vec::new();
        for mut t in std::mem::take(&mut self.terms) {
            t.factors.retain(|f| !matches!(f, Factor::Minor(s) if s.is_empty()));
            loop {
                let a = t.factors.iter().position(|f| *f == Factor::Minor(full.clone()));
                let b = t.factors.iter().position(|f| *f == Factor::Inv(full.clone()));
                match (a, b) {
                    (Some(a), Some(b)) => {
                        let (hi, lo) = (a.max(b), a.min(b));
                        t.factors.remove(hi);
                        t.factors.remove(lo);
                    }
                    _ => break,
                }
            }
            out.push(t);
        }
        out.retain(|t| !t.coeff.is_zero());
        self.terms = out;
        self
    }

    /// Copy with the first coefficient multiplied by `q`.
    pub fn perturbed(&self) -> Descriptor {
        let mut d = self.clone();
        if let Some(t) = d.terms.first_mut() {
            t.coeff = t.coeff.mul(&Scalar::q());
        }
        d
    }

    fn minor(&self, case: Case, s: &IndexSet) -> Element {
        match self.kind {
            Kind::Sdet => sdet_minor(case, self.n, s),
            Kind::Pf => pf_minor(self.n, s),
        }
    }

    /// The identity with inverse factors cleared: every term is multiplied
    /// by `m(D)^p`, `p` the largest inverse power, with the cleared factor
    /// placed on the left.
    pub fn cleared(&self, case: Case) -> Result<Element, DescriptorError> {
        self.validate()?;
        if self.kind == Kind::Pf && case != Case::Sp {
            return Err(DescriptorError::Malformed("Pfaffian identities live in the symplectic case".into()));
        }
        let full = IndexSet::full(self.n);
        let mut den: Option<&IndexSet> = None;
        for t in &self.terms {
            for f in &t.factors {
                if let Factor::Inv(s) = f {
                    if den.map_or(false, |d| d != s) {
                        return Err(DescriptorError::Malformed("more than one inverted minor".into()));
                    }
                    den = Some(s);
                    let commutes = *s == full || t.factors.iter().all(|g| s.is_subset(g.set()));
                    if !commutes {
                        return Err(DescriptorError::Malformed(format!("inverse of {} need not commute", s)));
                    }
                }
            }
        }
        let inv_count = |t: &Term| t.factors.iter().filter(|f| matches!(f, Factor::Inv(_))).count();
        let top = self.terms.iter().map(inv_count).max().unwrap_or(0);
        let d = den.map(|s| self.minor(case, s));
        let mut acc = Element::zero();
        for t in &self.terms {
            let mut e = match &d {
                Some(d) => d.pow((top - inv_count(t)) as u32),
                None => Element::one(),
            };
            for f in &t.factors {
                if let Factor::Minor(s) = f {
                    e = e.mul(&self.minor(case, s));
                }
            }
            acc = acc.add(&e.scale(&t.coeff));
        }
        Ok(acc)
    }

    pub fn evaluate(&self, case: Case) -> Result<Outcome, DescriptorError> {
        let mut o = Outcome::new();
        if super::armed() && !self.terms.is_empty() {
            super::disarm();
            let mut d = self.clone();
            d.terms[0].coeff = d.terms[0].coeff.mul(&Scalar::q());
            o.element(&self.to_string(), &d.cleared(case)?);
            return Ok(o);
        }
        o.element(&self.to_string(), &self.cleared(case)?);
        Ok(o)
    }
}

/// `b_i ↦ b_i(q^{-1})`, `m(I) ↦ m(X)^{-1} m(I^c)`, `m(X)^{-1} ↦ m(X)`.
pub fn cayley_transform(d: &Descriptor) -> Result<Descriptor, DescriptorError> {
    let full = IndexSet::full(d.n);
    let mut terms = Vec::new();
    for t in &d.terms {
        let mut fs = Vec::new();
        for f in &t.factors {
            match f {
                Factor::Minor(s) => {
                    fs.push(Factor::Inv(full.clone()));
                    fs.push(Factor::Minor(s.complement(d.n)));
                }
                Factor::Inv(s) if *s == full => fs.push(Factor::Minor(full.clone())),
                Factor::Inv(s) => {
                    return Err(DescriptorError::Malformed(format!("cannot complement the inverse of {}", s)));
                }
            }
        }
        terms.push(Term { coeff: t.coeff.bar(), factors: fs });
    }
    let r = Descriptor::new(d.kind, d.n, terms);
    r.validate()?;
    Ok(r)
}

/// `m(I) ↦ m(X_J)^{-1} m(I ∪ J)` for `J` disjoint from the ground set.
pub fn muir_law_transform(d: &Descriptor, j: &IndexSet) -> Result<Descriptor, DescriptorError> {
    if j.is_empty() || !j.is_disjoint(&d.ground_set()) {
        return Err(DescriptorError::Malformed(format!("{} must be nonempty and disjoint from {}", j, d.ground_set())));
    }
    if d.kind == Kind::Pf && j.len() % 2 != 0 {
        return Err(DescriptorError::Parity(j.to_string()));
    }
    let n = d.n.max(j.max().unwrap());
    let mut terms = Vec::new();
    for t in &d.terms {
        let mut fs = Vec::new();
        for f in &t.factors {
            match f {
                Factor::Minor(s) => {
                    fs.push(Factor::Inv(j.clone()));
                    fs.push(Factor::Minor(s.union(j)));
                }
                Factor::Inv(_) => return Err(DescriptorError::Malformed("inverse factors cannot be lifted".into())),
            }
        }
        terms.push(Term { coeff: t.coeff.clone(), factors: fs });
    }
    Ok(Descriptor { kind: d.kind, n, terms })
}

/// `[m(S), m(T)] = 0` for all nested `S ⊊ T ⊆ [1, n]`, `S` nonempty.
pub fn nested_commutators(kind: Kind, n: usize) -> Vec<Descriptor> {
    let sets: Vec<IndexSet> = IndexSet::all_subsets(n)
        .into_iter()
        .filter(|s| !s.is_empty() && (kind == Kind::Sdet || s.len() % 2 == 0))
        .collect();
    let mut out = Vec::new();
    for s in &sets {
        for t in &sets {
            if s != t && s.is_subset(t) {
                let f = |a: &IndexSet, b: &IndexSet| vec![Factor::Minor(a.clone()), Factor::Minor(b.clone())];
                out.push(Descriptor::new(
                    kind,
                    n,
                    vec![
                        Term { coeff: Scalar::one(), factors: f(s, t) },
                        Term { coeff: Scalar::from_int(-1), factors: f(t, s) },
                    ],
                ));
            }
        }
    }
    out
}

fn seeds(kind: Kind, n: usize, srcs: &[&str]) -> Vec<Descriptor> {
    let v: Vec<Descriptor> =
        srcs.iter().map(|s| Descriptor::parse(s, n).unwrap_or_else(|e| panic!("seed {}: {}", s, e))).collect();
    debug_assert!(v.iter().all(|d| d.kind == kind));
    v
}

const SDET_O2: &str = "q^-4*sdet[1]*sdet[2] - sdet[2]*sdet[1] + (1 - q^-4)*sdet[1,2]";

/// Seed identities for the complementary transform: `(case, N, identities)`.
pub fn cayley_seeds(kind: Kind) -> (Case, usize, Vec<Descriptor>) {
    match kind {
        Kind::Sdet => {
            let mut v = seeds(
                kind,
                3,
                &["sdet[1,2] - sdet[1,2]", "sdet[1,3]*sdet[1,2,3] - sdet[1,2,3]*sdet[1,3]", SDET_O2],
            );
            v.extend(nested_commutators(kind, 3));
            (Case::O, 3, v)
        }
        Kind::Pf => {
            let mut v = seeds(
                kind,
                4,
                &[
                    "pf[1,2] - pf[1,2]",
                    "pf[1,3]*pf[2,4] - pf[2,4]*pf[1,3] - (q - q^-1)*pf[1,4]*pf[2,3]",
                    "pf[1,2,3,4] - pf[1,2]*pf[3,4] + q*pf[1,3]*pf[2,4] - q^2*pf[1,4]*pf[2,3]",
                ],
            );
            v.extend(nested_commutators(kind, 4));
            (Case::Sp, 4, v)
        }
    }
}

/// Seed identities for Muir's law with the set they are lifted by.
pub fn muir_seeds(kind: Kind) -> (Case, IndexSet, Vec<Descriptor>) {
    match kind {
        Kind::Sdet => {
            let mut v = seeds(kind, 2, &["sdet[1,2] - sdet[1,2]", SDET_O2]);
            v.extend(nested_commutators(kind, 2));
            (Case::O, IndexSet::range(3, 3), v)
        }
        Kind::Pf => {
            let (_, _, v) = cayley_seeds(kind);
            (Case::Sp, IndexSet::range(5, 6), v)
        }
    }
}

/// Additive structure used by the parser.
#[derive(Clone, Debug)]
struct Sum(Vec<Term>);

impl Sum {
    fn scalar(s: Scalar) -> Sum {
        Sum(vec![Term { coeff: s, factors: Vec::new() }])
    }

    fn as_scalar(&self) -> Option<Scalar> {
        match self.0.as_slice() {
            [] => Some(Scalar::zero()),
            [t] if t.factors.is_empty() => Some(t.coeff.clone()),
            _ => None,
        }
    }
}

impl ExprValue for Sum {
    fn from_scalar(s: Scalar) -> Self {
        Sum::scalar(s)
    }
    fn add(&self, o: &Self) -> Self {
        if let (Some(a), Some(b)) = (self.as_scalar(), o.as_scalar()) {
            return Sum::scalar(a.add(&b));
        }
        Sum(self.0.iter().chain(o.0.iter()).cloned().collect())
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn neg(&self) -> Self {
        Sum(self.0.iter().map(|t| Term { coeff: t.coeff.neg(), factors: t.factors.clone() }).collect())
    }
    fn mul(&self, o: &Self) -> Result<Self, String> {
        let mut out = Vec::new();
        for a in &self.0 {
            for b in &o.0 {
                let mut f = a.factors.clone();
                f.extend(b.factors.iter().cloned());
                out.push(Term { coeff: a.coeff.mul(&b.coeff), factors: f });
            }
        }
        Ok(Sum(out))
    }
    fn div(&self, o: &Self) -> Result<Self, String> {
        let s = o.as_scalar().ok_or("division by a minor")?;
        let inv = s.inv().map_err(|e| e.to_string())?;
        Ok(Sum(self.0.iter().map(|t| Term { coeff: t.coeff.mul(&inv), factors: t.factors.clone() }).collect()))
    }
    fn pow(&self, e: i64) -> Result<Self, String> {
        if let Some(s) = self.as_scalar() {
            return Ok(Sum::scalar(s.checked_pow(e as i32).map_err(|e| e.to_string())?));
        }
        if e >= 0 {
            let mut r = Sum::scalar(Scalar::one());
            for _ in 0..e {
                r = r.mul(self)?;
            }
            return Ok(r);
        }
        match self.0.as_slice() {
            [t] if t.coeff.is_one() && t.factors.len() == 1 => {
                let s = t.factors[0].set().clone();
                Ok(Sum(vec![Term { coeff: Scalar::one(), factors: vec![Factor::Inv(s); (-e) as usize] }]))
            }
            _ => Err("only a single minor can be inverted".into()),
        }
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let name = self.kind.name();
        for (k, t) in self.terms.iter().enumerate() {
            let mut parts = Vec::new();
            let mut i = 0;
            while i < t.factors.len() {
                let mut run = 1;
                while i + run < t.factors.len() && t.factors[i + run] == t.factors[i] {
                    run += 1;
                }
                let set = t.factors[i].set().as_slice().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
                parts.push(match (&t.factors[i], run) {
                    (Factor::Minor(_), 1) => format!("{}[{}]", name, set),
                    (Factor::Minor(_), r) => format!("{}[{}]^{}", name, set, r),
                    (Factor::Inv(_), r) => format!("{}[{}]^-{}", name, set, r),
                });
                i += run;
            }
            let (neg, body) = crate::ncalg::element::coeff_text(&t.coeff);
            let mono = parts.join("*");
            let text = if mono.is_empty() {
                body
            } else if body == "1" {
                mono
            } else {
                format!("{}*{}", body, mono)
            };
            match (k == 0, neg) {
                (true, false) => f.write_str(&text)?,
                (true, true) => write!(f, "-{}", text)?,
                (false, false) => write!(f, " + {}", text)?,
                (false, true) => write!(f, " - {}", text)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for src in ["sdet[1]*sdet[1,2] - sdet[1,2]*sdet[1]", "sdet[1,2,3]^-2*sdet[1] + (q - q^-1)*sdet[2,3]"] {
            let d = Descriptor::parse(src, 3).unwrap();
            assert_eq!(d.to_string(), src);
        }
    }

    #[test]
    fn trivial_identity_complement() {
        let d = Descriptor::parse("sdet[1,2] - sdet[1,2]", 3).unwrap();
        assert_eq!(cayley_transform(&d).unwrap().to_string(), "sdet[1,2,3]^-1*sdet[3] - sdet[1,2,3]^-1*sdet[3]");
    }
}
