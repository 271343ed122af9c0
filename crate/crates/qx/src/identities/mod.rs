//! Verifiers for sdet and Pfaffian minor identities (Jacobi, Sylvester, GP,
//! quasideterminants), the complementary and Muir transformers, and operator checks.

pub mod algebra;
pub mod descriptor;
pub mod jacobi;
pub mod operator;
pub mod quasidet;
pub mod sylvester;
pub mod trace;

pub use descriptor::{
    cayley_transform, muir_law_transform, muir_seeds, cayley_seeds, Descriptor, DescriptorError, Factor, Kind, Term,
};

use crate::ncalg::{Element, Equation, LocalElement, NfError};
use crate::scalars::Scalar;
use std::cell::Cell;

thread_local! {
    static ARMED: Cell<bool> = const { Cell::new(false) };
}

/// Runs `f` with a single-coefficient perturbation armed: the first
/// comparison involving at least two terms has one coefficient multiplied
/// by `q`.
pub fn with_perturbation<T>(f: impl FnOnce() -> T) -> T {
    ARMED.with(|a| a.set(true));
    let r = f();
    ARMED.with(|a| a.set(false));
    r
}

pub(crate) fn armed() -> bool {
    ARMED.with(|a| a.get())
}

pub(crate) fn disarm() {
    ARMED.with(|a| a.set(false));
}

/// Runs `f` with any armed perturbation held back until it returns.
pub(crate) fn unarmed<T>(f: impl FnOnce() -> T) -> T {
    let was = ARMED.with(|a| a.replace(false));
    let r = f();
    if was && !armed() {
        ARMED.with(|a| a.set(true));
    }
    r
}

/// `e` with its first coefficient multiplied by `q`, or `None` if `e` has no terms.
pub(crate) fn bump(e: &Element) -> Option<Element> {
    if e.is_empty() {
        return None;
    }
    let mut done = false;
    Some(e.map_coeffs(|c| {
        if done {
            c.clone()
        } else {
            done = true;
            c.mul(&Scalar::q())
        }
    }))
}

/// Result of one verifier: whether every cleared difference vanished, the
/// total number of surviving terms, and free-form notes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub holds: bool,
    pub terms: usize,
    pub notes: Vec<String>,
}

impl Default for Outcome {
    fn default() -> Self {
        Outcome { holds: true, terms: 0, notes: Vec::new() }
    }
}

const MAX_FAIL_NOTES: usize = 4;

impl Outcome {
    pub fn new() -> Outcome {
        Outcome::default()
    }

    pub fn fail(&mut self, label: &str, terms: usize) {
        if self.notes.iter().filter(|n| n.starts_with("failed")).count() < MAX_FAIL_NOTES {
            self.notes.push(format!("failed: {}", label));
        }
        self.holds = false;
        self.terms += terms;
    }

    pub fn check(&mut self, label: &str, ok: bool) {
        if !ok {
            self.fail(label, 1);
        }
    }

    /// Records a difference that should vanish.
    pub fn residual(&mut self, label: &str, r: Result<Element, NfError>) {
        match r {
            Ok(e) if e.is_zero() => {}
            Ok(e) => self.fail(label, e.len()),
            Err(err) => self.fail(&format!("{} ({})", label, err), 1),
        }
    }

    pub fn element(&mut self, label: &str, e: &Element) {
        if armed() && e.len() >= 2 {
            if let Some(b) = bump(e) {
                disarm();
                return self.residual(label, b.try_normal_form());
            }
        }
        self.residual(label, e.try_normal_form());
    }

    /// Records `a - b`, which should vanish.
    pub fn compare(&mut self, label: &str, a: &Element, b: &Element) {
        if armed() && a.len() + b.len() >= 2 {
            let bumped = match bump(a) {
                Some(x) => Some(x.sub(b)),
                None => bump(b).map(|x| a.sub(&x)),
            };
            if let Some(d) = bumped {
                disarm();
                return self.residual(label, d.try_normal_form());
            }
        }
        self.residual(label, a.sub(b).try_normal_form());
    }

    pub fn equation(&mut self, eq: &Equation) {
        if armed() {
            let p = eq.perturbed();
            if p.lhs.len() + p.rhs.len() >= 2 {
                disarm();
                return self.residual(&eq.label, p.residual());
            }
        }
        self.residual(&eq.label, eq.residual());
    }

    pub fn equations<'a>(&mut self, eqs: impl IntoIterator<Item = &'a Equation>) {
        for e in eqs {
            self.equation(e);
        }
    }

    /// Cross-multiplied comparison of local elements.
    pub fn local(&mut self, label: &str, a: &LocalElement, b: &LocalElement) {
        use crate::ncalg::Ring;
        if armed() {
            let (na, nb) = (a.num.normal_form(), b.num.normal_form());
            let bumped = match bump(&na) {
                _ if na.len() + nb.len() < 2 => None,
                Some(x) => Some((LocalElement { num: x, ..a.clone() }, b.clone())),
                None => bump(&nb).map(|x| (a.clone(), LocalElement { num: x, ..b.clone() })),
            };
            if let Some((pa, pb)) = bumped {
                disarm();
                return self.residual(label, pa.sub(&pb).num.try_normal_form());
            }
        }
        self.residual(label, a.sub(b).num.try_normal_form());
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    pub fn merge(&mut self, o: Outcome) {
        self.holds &= o.holds;
        self.terms += o.terms;
        self.notes.extend(o.notes);
    }

    pub fn from_equations(eqs: &[Equation]) -> Outcome {
        let mut o = Outcome::new();
        o.equations(eqs);
        o
    }
}
