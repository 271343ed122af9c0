use qx::cli::{check_for, evaluate, plan, run_perturbed, Algebra, Caps, Options};
use qx::identities::algebra::*;
use qx::identities::jacobi::{jacobi_pf, jacobi_sdet};
use qx::identities::operator::*;
use qx::identities::quasidet::{quasidet_pf, quasidet_sdet, valid_pf_orders};
use qx::identities::sylvester::{gp_convention, grassmann_plucker, sylvester_pf, sylvester_sdet, Border, GpExponent, PfExponent};
use qx::identities::trace::muir_trace;
use qx::identities::{cayley_seeds, muir_seeds, Kind, Outcome};
use qx::matrix_algebra::{a_params, IndexSet};
use qx::ncalg::{Case, PresKind};
use qx::tensorops::permutations;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

struct Tally {
    ok: bool,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally { ok: true, failures: Vec::new() }
    }

    fn outcome(&mut self, label: &str, r: Result<Outcome, String>) {
        match r {
            Ok(o) if o.holds => {}
            Ok(o) => self.fail(format!("{}: {:?}", label, o.notes)),
            Err(e) => self.fail(format!("{}: {}", label, e)),
        }
    }

    fn expect(&mut self, label: &str, ok: bool) {
        if !ok {
            self.fail(label.to_string());
        }
    }

    fn fail(&mut self, s: String) {
        self.ok = false;
        self.failures.push(s);
    }
}

fn registry(t: &mut Tally, name: &str, case: Algebra, n: usize, opts: Options) {
    let label = format!("{} {} N={}", name, case, n);
    match check_for(name, Some(case), Some(n), opts) {
        Ok(c) => t.outcome(&label, evaluate(&c)),
        Err(e) => t.fail(format!("{}: {}", label, e)),
    }
}

const X_CASES: [(Case, usize); 4] = [(Case::O, 2), (Case::O, 3), (Case::Sp, 2), (Case::Sp, 4)];

fn c1(t: &mut Tally) {
    for n in 1..=3 {
        t.outcome(&format!("Mat {}", n), Ok(presentation_relations(PresKind::Mat, n)));
        t.outcome(&format!("X-O {}", n), Ok(presentation_relations(PresKind::X(Case::O), n)));
    }
    for n in [2, 4] {
        t.outcome(&format!("X-Sp {}", n), Ok(presentation_relations(PresKind::X(Case::Sp), n)));
    }
    for n in 1..=4 {
        t.outcome(&format!("Ext {}", n), Ok(presentation_relations(PresKind::Ext, n)));
    }
    for (case, n) in X_CASES {
        t.outcome(&format!("RXRX {} {}", case, n), Ok(reflection(case, n)));
    }
}

fn c2(t: &mut Tally) {
    for n in [2, 3] {
        t.outcome(&format!("YBE {}", n), Ok(ybe(n)));
        t.outcome(&format!("braid {}", n), Ok(braid(n)));
        t.outcome(&format!("variant YBE {}", n), Ok(variant_ybe(n)));
    }
    for n in 2..=4 {
        for m in 2..=4 {
            t.outcome(&format!("A_{} on N = {}", m, n), Ok(antisymmetrizer_checks(n, m)));
        }
    }
    for (case, n) in X_CASES {
        t.outcome(&format!("RBRB1 {} {}", case, n), Ok(rbrb1(case, n)));
        t.outcome(&format!("RJRJ {} {}", case, n), Ok(j_reflection(case, n, &a_params(case, n, true))));
    }
}

fn c3(t: &mut Tally) {
    for (case, n) in X_CASES {
        t.outcome(&format!("embedding {} {}", case, n), embedding(case, n, true));
        t.outcome(&format!("coideal {} {}", case, n), coideal(case, n, true));
    }
}

fn c4(t: &mut Tally) {
    for (case, n) in X_CASES {
        t.outcome(&format!("sdet-det2 {} {}", case, n), sdet_det2(case, n, true));
    }
}

fn c5(t: &mut Tally) {
    for (case, n) in X_CASES {
        let r = sdet_explicit_check(case, n);
        if let Ok(o) = &r {
            t.expect("report flags the pi_2 convention", o.notes.iter().any(|s| s.contains("pi_2")));
        }
        t.outcome(&format!("explicit {} {}", case, n), r);
    }
}

fn c6(t: &mut Tally) {
    for (case, n) in X_CASES {
        t.outcome(&format!("comatrix {} {}", case, n), comatrix_check(case, n));
        for m in 2..=n.min(3) {
            t.outcome(&format!("aux expansion {} {} m={}", case, n, m), aux_expansion(case, n, m));
        }
    }
}

fn c7(t: &mut Tally) {
    for (case, n) in X_CASES {
        t.outcome(&format!("Y {} {}", case, n), y_relations(case, n));
        t.outcome(&format!("omega {} {}", case, n), omega_check(case, n));
    }
}

fn c8(t: &mut Tally) {
    for s in IndexSet::all_subsets(3) {
        t.outcome(&format!("jacobi O3 {}", s), jacobi_sdet(Case::O, 3, &s));
    }
    for s in IndexSet::all_subsets(4) {
        t.outcome(&format!("jacobi Sp4 {}", s), jacobi_sdet(Case::Sp, 4, &s));
        if s.len() % 2 == 0 {
            t.outcome(&format!("jacobi pf {}", s), jacobi_pf(4, &s));
        }
    }
}

fn c9(t: &mut Tally) {
    for kind in [Kind::Sdet, Kind::Pf] {
        t.expect("at least 3 Cayley seeds", cayley_seeds(kind).2.len() >= 3);
        t.expect("at least 3 Muir seeds", muir_seeds(kind).2.len() >= 3);
    }
    registry(t, "cayley", Algebra::O, 3, Options::default());
    registry(t, "cayley", Algebra::Sp, 4, Options::default());
    registry(t, "muir-law", Algebra::O, 3, Options::default());
    registry(t, "muir-law", Algebra::Sp, 6, Options::default());
}

fn c10(t: &mut Tally) {
    for (case, n, k) in [(Case::O, 2, 1), (Case::O, 2, 2), (Case::O, 3, 1), (Case::O, 3, 2), (Case::O, 3, 3), (Case::Sp, 4, 1), (Case::Sp, 4, 2)] {
        t.outcome(&format!("trace {} {} k={}", case, n, k), muir_trace(case, n, k));
    }
}

fn c11(t: &mut Tally) {
    t.outcome("sdet O 2+2", sylvester_sdet(Case::O, 2, 2, Border::Tail));
    t.outcome("sdet Sp 2+2", sylvester_sdet(Case::Sp, 2, 2, Border::Tail));
    t.outcome("pf n=1 m=1", sylvester_pf(1, 1, PfExponent::Small));
    t.outcome("pf n=2 m=1", sylvester_pf(2, 1, PfExponent::Small));
    // arbitration: the literal border and the other exponent fail where they differ
    t.expect("literal border rejected", !sylvester_sdet(Case::O, 1, 2, Border::Literal).map(|o| o.holds).unwrap_or(true));
    t.expect("border exponent rejected", !sylvester_pf(2, 1, PfExponent::Border).map(|o| o.holds).unwrap_or(true));
    let c = check_for("sylvester-sdet", Some(Algebra::O), None, Options { sizes: Some((1, 2)), ..Options::default() }).unwrap();
    let notes = evaluate(&c).map(|o| o.notes).unwrap_or_default();
    t.expect("arbitration note", notes.iter().any(|s| s.contains("alternative border")));
}

fn c12(t: &mut Tally) {
    t.outcome("shuffle vs definition N=4", pf_shuffle_vs_def(4, 4));
    t.outcome("shuffle vs definition N=6", pf_shuffle_vs_def(6, 4));
    for n in [2, 4] {
        t.outcome(&format!("orthogonality {}", n), pf_orthogonality(n));
        t.outcome(&format!("Omega power {}", n), omega_power_check(n));
        t.outcome(&format!("sdet = q^3n Pf^2 {}", n), sdet_pf(n, true));
    }
    t.outcome("Plucker 4", plucker(4));
    t.outcome("Plucker 6", plucker(6));
}

fn c13(t: &mut Tally) {
    let conv = gp_convention();
    t.expect("oracle selects the expansion exponent", conv == GpExponent::Expansion);
    for n in (1..6).step_by(2) {
        for m in (1..6).step_by(2) {
            if n + m <= 6 {
                t.outcome(&format!("GP n={} m={}", n, m), grassmann_plucker(n, m, conv));
            }
        }
    }
    t.expect("statement exponent fails at n = m = 1", !grassmann_plucker(1, 1, GpExponent::Statement).map(|o| o.holds).unwrap_or(true));
}

fn c14(t: &mut Tally) {
    for p in permutations(3) {
        let s: Vec<usize> = p.into_iter().map(|i| i + 1).collect();
        t.outcome(&format!("quasidet O3 {:?}", s), quasidet_sdet(3, &s));
    }
    let orders = valid_pf_orders(4);
    t.expect("six valid orders", orders.len() == 6);
    for s in orders {
        t.outcome(&format!("quasidet Sp4 {:?}", s), quasidet_pf(4, &s));
    }
}

fn c15(t: &mut Tally) {
    for (case, n) in X_CASES {
        t.outcome(&format!("center sdet {} {}", case, n), center_sdet(case, n));
    }
    for n in [2, 4] {
        t.outcome(&format!("center Pf {}", n), center_pf(n));
    }
}

fn c16(t: &mut Tally) {
    let checks = plan(Caps::uniform(6), false);
    for name in qx::cli::IDENTITIES {
        t.expect(&format!("{} in the suite", name), checks.iter().any(|c| c.identity == name));
    }
    for c in &checks {
        match run_perturbed(c) {
            Ok(r) => t.expect(&format!("perturbed {} {} N={} rejected", c.identity, c.case, c.n), !r.holds),
            Err(e) => t.fail(format!("{}: {}", c.identity, e)),
        }
    }
    let bin = env!("CARGO_BIN_EXE_qx");
    let code = |args: &[&str]| Command::new(bin).args(args).stdout(Stdio::null()).stderr(Stdio::null()).status().map(|s| s.code()).ok().flatten();
    t.expect("suite --max-N 4 exits 0", code(&["suite", "--max-N", "4", "--format", "json"]) == Some(0));
    t.expect("perturbed suite exits 1", code(&["suite", "--perturb", "--format", "json"]) == Some(1));
    t.expect("usage error exits 2", code(&["suite", "--only", "nope"]) == Some(2));
}

type Criterion = (&'static str, u64, fn(&mut Tally));

fn main() {
    let criteria: [Criterion; 16] = [
        ("presentation soundness", 10, c1),
        ("operator layer", 60, c2),
        ("embedding", 120, c3),
        ("sdet vs det^2", 120, c4),
        ("explicit formula", 60, c5),
        ("comatrix and Cramer", 120, c6),
        ("Y and omega", 120, c7),
        ("Jacobi", 180, c8),
        ("meta-identities", 120, c9),
        ("trace identity", 180, c10),
        ("Sylvester", 300, c11),
        ("Pfaffian core", 180, c12),
        ("Grassmann-Plucker", 120, c13),
        ("quasideterminants", 300, c14),
        ("centrality", 60, c15),
        ("negative controls", 60, c16),
    ];
    let mut failed = 0;
    for (k, (title, budget, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut t = Tally::new();
        f(&mut t);
        let dt = start.elapsed();
        if dt > Duration::from_secs(*budget) {
            t.fail(format!("runtime {:.2}s over budget {}s", dt.as_secs_f64(), budget));
        }
        println!(
            "{} criterion {:>2}: {} ({:.2}s, budget {}s)",
            if t.ok { "PASS" } else { "FAIL" },
            k + 1,
            title,
            dt.as_secs_f64(),
            budget
        );
        for f in t.failures.iter().take(8) {
            println!("      {}", f);
        }
        if !t.ok {
            failed += 1;
        }
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
