use super::report::Report;
use super::Algebra;
use crate::identities::algebra::*;
use crate::identities::jacobi::{jacobi_comatrix, jacobi_pf, jacobi_sdet};
use crate::identities::operator::*;
use crate::identities::quasidet::{quasidet_pf, quasidet_sdet, valid_pf_orders};
use crate::identities::sylvester::{gp_convention, grassmann_plucker, sylvester_pf, sylvester_sdet, Border, GpExponent, PfExponent};
use crate::identities::trace::muir_trace;
use crate::identities::{cayley_seeds, cayley_transform, muir_law_transform, muir_seeds, Descriptor, Kind, Outcome};
use crate::matrix_algebra::{a_params, IndexSet};
use crate::ncalg::{Case, PresKind};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::time::Instant;

/// Names accepted by `verify`, in suite order.
pub const IDENTITIES: [&str; 29] = [
    "rtt",
    "reflection",
    "basic-r",
    "ybe",
    "braid",
    "embedding",
    "coideal",
    "sdet-det2",
    "sdet-explicit",
    "comatrix",
    "y-relations",
    "omega",
    "jacobi-sdet",
    "jacobi-pf",
    "cayley",
    "muir-law",
    "muir-trace",
    "sylvester-sdet",
    "sylvester-pf",
    "gp",
    "pf-orthogonality",
    "pf-shuffle-vs-def",
    "plucker",
    "omega-power",
    "sdet-pf",
    "center-sdet",
    "center-pf",
    "quasidet-sdet",
    "quasidet-pf",
];

/// Largest algebra size `verify` accepts.
pub const MAX_N: usize = 6;

/// Identity-specific options; unset fields take per-identity defaults.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Options {
    pub symbolic_a: bool,
    pub set: Option<IndexSet>,
    pub k: Option<usize>,
    /// Block sizes `(n, m)` for Sylvester and Grassmann-Plücker.
    pub sizes: Option<(usize, usize)>,
    pub sigma: Option<Vec<usize>>,
    pub border: Option<Border>,
    pub pf_exponent: Option<PfExponent>,
    pub gp_exponent: Option<GpExponent>,
    pub descriptors: Vec<String>,
}

/// One verification task.
#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub identity: &'static str,
    pub case: Algebra,
    /// Size of the algebra the identity lives in.
    pub n: usize,
    pub opts: Options,
}

impl Check {
    pub fn params(&self) -> BTreeMap<String, Value> {
        let o = &self.opts;
        let mut p = BTreeMap::new();
        if uses_a(self.identity) {
            p.insert("a".into(), json!(if o.symbolic_a { "symbolic" } else { "1" }));
        }
        if let Some(s) = &o.set {
            p.insert("I".into(), json!(s.to_string()));
        }
        if let Some(k) = o.k {
            p.insert("k".into(), json!(k));
        }
        if let Some((n, m)) = o.sizes {
            p.insert("n".into(), json!(n));
            p.insert("m".into(), json!(m));
        }
        if let Some(s) = &o.sigma {
            p.insert("sigma".into(), json!(s));
        }
        if let Some(b) = o.border {
            p.insert("border".into(), json!(format!("{:?}", b).to_lowercase()));
        }
        if let Some(e) = o.pf_exponent {
            p.insert("pf_exponent".into(), json!(format!("{:?}", e).to_lowercase()));
        }
        if let Some(e) = o.gp_exponent {
            p.insert("gp_exponent".into(), json!(format!("{:?}", e).to_lowercase()));
        }
        if !o.descriptors.is_empty() {
            p.insert("descriptors".into(), json!(o.descriptors));
        }
        p
    }
}

fn uses_a(name: &str) -> bool {
    matches!(name, "reflection" | "embedding" | "coideal" | "sdet-det2" | "sdet-pf")
}

fn xcase(c: &Check) -> Result<Case, String> {
    match c.case {
        Algebra::O => Ok(Case::O),
        Algebra::Sp => Ok(Case::Sp),
        other => Err(format!("{} needs case O or Sp, not {}", c.identity, other)),
    }
}

fn need(c: &Check, a: Algebra) -> Result<(), String> {
    if c.case != a {
        return Err(format!("{} needs case {}, not {}", c.identity, a, c.case));
    }
    Ok(())
}

fn kind_of(c: &Check) -> Result<Kind, String> {
    Ok(match xcase(c)? {
        Case::O => Kind::Sdet,
        Case::Sp => Kind::Pf,
    })
}

fn merged(parts: Vec<Outcome>) -> Outcome {
    let mut o = Outcome::new();
    for p in parts {
        o.merge(p);
    }
    o
}

fn descriptors(c: &Check, n: usize) -> Result<Vec<Descriptor>, String> {
    c.opts.descriptors.iter().map(|s| Descriptor::parse(s, n).map_err(|e| e.to_string())).collect()
}

fn default_sizes(name: &str, case: Algebra) -> (usize, usize) {
    match (name, case) {
        ("sylvester-sdet", Algebra::Sp) => (2, 2),
        ("sylvester-sdet", _) => (1, 2),
        ("sylvester-pf", _) => (2, 2),
        _ => (1, 1),
    }
}

/// Builds a check with per-identity defaults for case and size.
pub fn check_for(name: &str, case: Option<Algebra>, n: Option<usize>, opts: Options) -> Result<Check, String> {
    let identity = *IDENTITIES.iter().find(|&&x| x == name).ok_or_else(|| format!("unknown identity '{}'", name))?;
    let (dc, dn) = match identity {
        "rtt" | "basic-r" | "ybe" | "braid" => (Algebra::Mat, 2),
        "jacobi-sdet" | "quasidet-sdet" => (Algebra::O, 3),
        "cayley" => (Algebra::O, 3),
        "muir-law" => (Algebra::O, 3),
        "jacobi-pf" | "pf-orthogonality" | "pf-shuffle-vs-def" | "plucker" | "omega-power" | "sdet-pf" | "center-pf"
        | "quasidet-pf" | "sylvester-pf" | "gp" => (Algebra::Sp, 4),
        _ => (Algebra::O, 2),
    };
    let case = case.unwrap_or(dc);
    let mut opts = opts;
    let n = match identity {
        "sylvester-sdet" | "sylvester-pf" | "gp" => {
            let s = match (opts.sizes, n) {
                (Some(s), _) => s,
                (None, Some(_)) => return Err(format!("{} takes its block sizes from --N and --M", identity)),
                (None, None) => default_sizes(identity, case),
            };
            opts.sizes = Some(s);
            s.0 + s.1
        }
        "cayley" if n.is_none() => cayley_seeds(if case == Algebra::Sp { Kind::Pf } else { Kind::Sdet }).1,
        "muir-law" if n.is_none() => {
            let (_, j, _) = muir_seeds(if case == Algebra::Sp { Kind::Pf } else { Kind::Sdet });
            j.as_slice().last().copied().unwrap_or(0)
        }
        _ => n.unwrap_or(dn),
    };
    if n == 0 {
        return Err("N must be positive".into());
    }
    if n > MAX_N {
        return Err(format!("N = {} exceeds the cap of {}", n, MAX_N));
    }
    if case == Algebra::Ext {
        return Err("no identity is verified in the exterior algebra alone".into());
    }
    if case == Algebra::Sp && n % 2 != 0 {
        return Err(format!("the symplectic case needs even N, got {}", n));
    }
    Ok(Check { identity, case, n, opts })
}

/// Runs the verifier behind `c.identity`.
pub fn evaluate(c: &Check) -> Result<Outcome, String> {
    let n = c.n;
    let o = &c.opts;
    let out = match c.identity {
        "rtt" => {
            need(c, Algebra::Mat)?;
            merged(vec![rtt(n), presentation_relations(PresKind::Mat, n)])
        }
        "reflection" => {
            let case = xcase(c)?;
            if case == Case::Sp && n % 2 != 0 {
                return Err("the symplectic case needs even N".into());
            }
            merged(vec![
                presentation_relations(PresKind::X(case), n),
                reflection(case, n),
                j_reflection(case, n, &a_params(case, n, o.symbolic_a)),
                rbrb1(case, n),
                antisymmetrizer_commutes(case, n, 2),
            ])
        }
        "basic-r" => {
            need(c, Algebra::Mat)?;
            let mut parts = vec![basic_r(n)];
            for m in 2..=4 {
                parts.push(antisymmetrizer_checks(n, m));
                parts.push(symmetrizer_checks(n, m.min(3)));
            }
            merged(parts)
        }
        "ybe" => {
            need(c, Algebra::Mat)?;
            merged(vec![ybe(n), variant_ybe(n)])
        }
        "braid" => {
            need(c, Algebra::Mat)?;
            braid(n)
        }
        "embedding" => embedding(xcase(c)?, n, o.symbolic_a)?,
        "coideal" => coideal(xcase(c)?, n, o.symbolic_a)?,
        "sdet-det2" => sdet_det2(xcase(c)?, n, o.symbolic_a)?,
        "sdet-explicit" => sdet_explicit_check(xcase(c)?, n)?,
        "comatrix" => {
            let case = xcase(c)?;
            let mut parts = vec![comatrix_check(case, n)?];
            for m in 2..=n.min(3) {
                parts.push(aux_expansion(case, n, m)?);
            }
            merged(parts)
        }
        "y-relations" => y_relations(xcase(c)?, n)?,
        "omega" => omega_check(xcase(c)?, n)?,
        "jacobi-sdet" => {
            let case = xcase(c)?;
            let sets = match &o.set {
                Some(s) => vec![s.clone()],
                None => IndexSet::all_subsets(n),
            };
            let mut parts = Vec::new();
            for s in &sets {
                parts.push(jacobi_sdet(case, n, s)?);
            }
            if o.set.is_none() || o.k.is_some() {
                let k = o.k.unwrap_or(2.min(n));
                parts.push(jacobi_comatrix(case, n, k)?);
            }
            let mut out = merged(parts);
            out.note(format!("index sets: {}", sets.len()));
            out
        }
        "jacobi-pf" => {
            need(c, Algebra::Sp)?;
            let sets = match &o.set {
                Some(s) => vec![s.clone()],
                None => IndexSet::all_subsets(n).into_iter().filter(|s| s.len() % 2 == 0).collect(),
            };
            let mut parts = Vec::new();
            for s in &sets {
                parts.push(jacobi_pf(n, s)?);
            }
            let mut out = merged(parts);
            out.note(format!("index sets: {}", sets.len()));
            out
        }
        "cayley" => {
            let kind = kind_of(c)?;
            let (case, cn, seeds) = cayley_seeds(kind);
            let ds = if o.descriptors.is_empty() {
                if n != cn {
                    return Err(format!("the built-in {} catalog lives at N = {}", kind.name(), cn));
                }
                seeds
            } else {
                descriptors(c, n)?
            };
            let mut out = Outcome::new();
            for d in &ds {
                if d.kind != kind {
                    return Err(format!("descriptor {} does not match case {}", d, c.case));
                }
                out.merge(d.evaluate(case).map_err(|e| e.to_string())?);
                let t = cayley_transform(d).map_err(|e| e.to_string())?;
                out.merge(t.evaluate(case).map_err(|e| e.to_string())?);
                out.check(&format!("involution on {}", d), cayley_transform(&t).map_err(|e| e.to_string())? == *d);
            }
            out.note(format!("{} identities and their complements", ds.len()));
            out
        }
        "muir-law" => {
            let kind = kind_of(c)?;
            let (case, cj, seeds) = muir_seeds(kind);
            let j = o.set.clone().unwrap_or(cj);
            let ds = if o.descriptors.is_empty() { seeds } else { descriptors(c, n)? };
            let mut out = Outcome::new();
            for d in &ds {
                out.merge(d.evaluate(case).map_err(|e| e.to_string())?);
                let t = muir_law_transform(d, &j).map_err(|e| e.to_string())?;
                if t.n > n {
                    return Err(format!("lifting by {} needs N >= {}", j, t.n));
                }
                out.merge(t.evaluate(case).map_err(|e| e.to_string())?);
            }
            out.note(format!("{} identities lifted by J = {}", ds.len(), j));
            out
        }
        "muir-trace" => muir_trace(xcase(c)?, n, o.k.unwrap_or(2.min(n)))?,
        "sylvester-sdet" => {
            let case = xcase(c)?;
            let (a, b) = o.sizes.ok_or("missing block sizes")?;
            let border = o.border.unwrap_or(Border::Tail);
            let mut out = sylvester_sdet(case, a, b, border)?;
            out.note(format!("bordering block J = {{{}..{}}}", a + 1, a + b));
            if a != b {
                let other = if border == Border::Tail { Border::Literal } else { Border::Tail };
                let alt = sylvester_sdet(case, a, b, other)?;
                out.note(format!("alternative border {:?} {}", other, if alt.holds { "holds" } else { "fails" }));
            }
            out
        }
        "sylvester-pf" => {
            need(c, Algebra::Sp)?;
            let (a, b) = o.sizes.ok_or("missing block sizes")?;
            if a % 2 != 0 || b % 2 != 0 {
                return Err("Pfaffian Sylvester blocks need even sizes".into());
            }
            let e = o.pf_exponent.unwrap_or(PfExponent::Small);
            let mut out = sylvester_pf(a / 2, b / 2, e)?;
            if a != b {
                let other = if e == PfExponent::Small { PfExponent::Border } else { PfExponent::Small };
                let alt = sylvester_pf(a / 2, b / 2, other)?;
                out.note(format!("alternative exponent {:?} {}", other, if alt.holds { "holds" } else { "fails" }));
            }
            out
        }
        "gp" => {
            need(c, Algebra::Sp)?;
            let (a, b) = o.sizes.ok_or("missing block sizes")?;
            let chosen = gp_convention();
            let conv = o.gp_exponent.unwrap_or(chosen);
            let mut out = grassmann_plucker(a, b, conv)?;
            let other = if conv == GpExponent::Expansion { GpExponent::Statement } else { GpExponent::Expansion };
            let alt = grassmann_plucker(a, b, other)?;
            out.note(format!("oracle-selected exponent at n = m = 1: {:?}", chosen));
            out.note(format!("alternative exponent {:?} {}", other, if alt.holds { "holds" } else { "fails" }));
            out
        }
        "pf-orthogonality" => {
            need(c, Algebra::Sp)?;
            pf_orthogonality(n)?
        }
        "pf-shuffle-vs-def" => {
            need(c, Algebra::Sp)?;
            pf_shuffle_vs_def(n, if n >= 6 { 4 } else { n })?
        }
        "plucker" => {
            need(c, Algebra::Sp)?;
            plucker(n)?
        }
        "omega-power" => {
            need(c, Algebra::Sp)?;
            merged(vec![
                presentation_relations(PresKind::Ext, n),
                presentation_relations(PresKind::XExt(Case::Sp), n),
                omega_power_check(n)?,
            ])
        }
        "sdet-pf" => {
            need(c, Algebra::Sp)?;
            sdet_pf(n, o.symbolic_a)?
        }
        "center-sdet" => {
            let case = xcase(c)?;
            merged(vec![center_sdet(case, n)?, commuting_minors(case, n)?])
        }
        "center-pf" => {
            need(c, Algebra::Sp)?;
            center_pf(n)?
        }
        "quasidet-sdet" => {
            need(c, Algebra::O)?;
            let orders = match &o.sigma {
                Some(s) => vec![s.clone()],
                None => crate::tensorops::permutations(n).into_iter().map(|p| p.into_iter().map(|i| i + 1).collect()).collect(),
            };
            let mut out = Outcome::new();
            for s in &orders {
                out.merge(quasidet_sdet(n, s)?);
            }
            out.note(format!("orderings: {}", orders.len()));
            out
        }
        "quasidet-pf" => {
            need(c, Algebra::Sp)?;
            let orders = match &o.sigma {
                Some(s) => vec![s.clone()],
                None => valid_pf_orders(n),
            };
            let mut out = Outcome::new();
            for s in &orders {
                let r = quasidet_pf(n, s)?;
                let theta = r.notes.iter().find(|x| x.starts_with("theta")).cloned().unwrap_or_default();
                out.holds &= r.holds;
                out.terms += r.terms;
                out.notes.extend(r.notes.into_iter().filter(|x| !x.starts_with("theta")));
                out.note(format!("{:?}: {}", s, theta));
            }
            out
        }
        other => return Err(format!("unknown identity '{}'", other)),
    };
    Ok(out)
}

/// Runs a check and wraps the outcome in a report.
pub fn run_check(c: &Check) -> Result<Report, String> {
    let t = Instant::now();
    let o = evaluate(c)?;
    Ok(report(c, o, t.elapsed().as_millis() as u64))
}

/// Runs a check with a single-coefficient perturbation armed.
pub fn run_perturbed(c: &Check) -> Result<Report, String> {
    let t = Instant::now();
    let o = crate::identities::with_perturbation(|| evaluate(c))?;
    Ok(report(c, o, t.elapsed().as_millis() as u64))
}

fn report(c: &Check, o: Outcome, ms: u64) -> Report {
    Report {
        identity: c.identity.to_string(),
        case: c.case.to_string(),
        n: c.n,
        params: c.params(),
        holds: o.holds,
        terms: o.terms,
        elapsed_ms: ms,
        notes: o.notes,
    }
}

/// Per-case size limits for the suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub o: usize,
    pub sp: usize,
    pub mat: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { o: 3, sp: 4, mat: 4 }
    }
}

impl Caps {
    pub fn uniform(n: usize) -> Caps {
        Caps { o: n, sp: n, mat: n }
    }

    pub fn allows(&self, c: &Check) -> bool {
        let cap = match c.case {
            Algebra::O => self.o,
            Algebra::Sp => self.sp,
            Algebra::Mat | Algebra::Ext => self.mat,
        };
        c.n <= cap
    }
}

fn plan_entries(symbolic_a: bool) -> Vec<Check> {
    use Algebra::{Mat, O, Sp};
    let mut v = Vec::new();
    let base = Options { symbolic_a, ..Options::default() };
    let mut add = |identity: &'static str, case: Algebra, n: usize, opts: Options| {
        v.push(Check { identity, case, n, opts });
    };
    let xs = [(O, 2), (O, 3), (Sp, 2), (Sp, 4)];
    for &n in &[2, 3] {
        add("rtt", Mat, n, base.clone());
    }
    for &(c, n) in &xs {
        add("reflection", c, n, base.clone());
    }
    for &n in &[2, 3, 4] {
        add("basic-r", Mat, n, base.clone());
    }
    for id in ["ybe", "braid"] {
        for &n in &[2, 3] {
            add(id, Mat, n, base.clone());
        }
    }
    for id in ["embedding", "coideal", "sdet-det2"] {
        for &(c, n) in &xs {
            add(id, c, n, base.clone());
        }
    }
    for &(c, n) in &[(O, 2), (O, 3), (O, 4), (Sp, 2), (Sp, 4), (Sp, 6)] {
        add("sdet-explicit", c, n, base.clone());
    }
    for id in ["comatrix", "y-relations", "omega", "jacobi-sdet"] {
        for &(c, n) in &xs {
            add(id, c, n, base.clone());
        }
    }
    for &n in &[2, 4] {
        add("jacobi-pf", Sp, n, base.clone());
    }
    add("cayley", O, 3, base.clone());
    add("cayley", Sp, 4, base.clone());
    add("muir-law", O, 3, base.clone());
    add("muir-law", Sp, 6, base.clone());
    for &(c, n, k) in &[(O, 2, 1), (O, 2, 2), (O, 3, 2), (O, 3, 3), (Sp, 4, 2)] {
        add("muir-trace", c, n, Options { k: Some(k), ..base.clone() });
    }
    for &(c, a, b) in &[(O, 1, 2), (O, 2, 1), (O, 2, 2), (Sp, 2, 2)] {
        add("sylvester-sdet", c, a + b, Options { sizes: Some((a, b)), ..base.clone() });
    }
    for &(a, b) in &[(2, 2), (4, 2), (2, 4)] {
        add("sylvester-pf", Sp, a + b, Options { sizes: Some((a, b)), ..base.clone() });
    }
    for &(a, b) in &[(1, 1), (1, 3), (3, 1), (1, 5), (5, 1), (3, 3)] {
        add("gp", Sp, a + b, Options { sizes: Some((a, b)), ..base.clone() });
    }
    for &n in &[2, 4] {
        add("pf-orthogonality", Sp, n, base.clone());
    }
    for &n in &[2, 4, 6] {
        add("pf-shuffle-vs-def", Sp, n, base.clone());
    }
    for &n in &[4, 6] {
        add("plucker", Sp, n, base.clone());
    }
    for id in ["omega-power", "sdet-pf"] {
        for &n in &[2, 4] {
            add(id, Sp, n, base.clone());
        }
    }
    for &(c, n) in &xs {
        add("center-sdet", c, n, base.clone());
    }
    for &n in &[2, 4] {
        add("center-pf", Sp, n, base.clone());
    }
    for &n in &[2, 3] {
        add("quasidet-sdet", O, n, base.clone());
    }
    for &n in &[2, 4] {
        add("quasidet-pf", Sp, n, base.clone());
    }
    v
}

/// The suite's checks within `caps`, in declaration order.
pub fn plan(caps: Caps, symbolic_a: bool) -> Vec<Check> {
    plan_entries(symbolic_a).into_iter().filter(|c| caps.allows(c)).collect()
}
