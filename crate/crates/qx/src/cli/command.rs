use super::registry::{check_for, plan, run_check, run_perturbed, Caps, Options, MAX_N};
use super::report::{reports_json, Report};
use super::suite::run_suite;
use super::{Algebra, CliError};
use crate::identities::sylvester::{Border, GpExponent, PfExponent};
use crate::matrix_algebra::{quantum_minor, IndexSet};
use crate::ncalg::{basis_enumerate, presentation, Case, Element};
use crate::pfaffian::pf_minor;
use crate::sklyanin::{sdet_minor, sklyanin_minor};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "qx", version, about = "Exact computation in quantum matrix and reflection algebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Normal form of an expression in the generators.
    NormalForm {
        #[arg(long, value_enum)]
        case: Algebra,
        #[arg(long = "N")]
        n: usize,
        expr: String,
    },
    /// Quantum minor of the matrix algebra (full determinant by default).
    Det {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        rows: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        cols: Option<Vec<usize>>,
    },
    /// Sklyanin determinant of a principal submatrix.
    Sdet {
        #[arg(long, value_enum)]
        case: Algebra,
        #[arg(long = "N")]
        n: usize,
        #[arg(long = "I", value_delimiter = ',')]
        set: Option<Vec<usize>>,
    },
    /// Quantum Pfaffian of a principal submatrix.
    Pf {
        #[arg(long, value_enum)]
        case: Option<Algebra>,
        #[arg(long = "N")]
        n: usize,
        #[arg(long = "I", value_delimiter = ',')]
        set: Option<Vec<usize>>,
    },
    /// Quantum or Sklyanin minor with the given rows and columns.
    Minor {
        #[arg(long, value_enum)]
        case: Algebra,
        #[arg(long = "N")]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        rows: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        cols: Vec<usize>,
    },
    /// Verify one identity.
    Verify(VerifyArgs),
    /// Verify every identity within the size caps.
    Suite(SuiteArgs),
    /// Normal-form basis words of a given degree.
    Basis {
        #[arg(long, value_enum)]
        case: Algebra,
        #[arg(long = "N")]
        n: usize,
        #[arg(long)]
        degree: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BorderArg {
    Tail,
    Literal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PfExponentArg {
    Small,
    Border,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GpExponentArg {
    Statement,
    Expansion,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Identity name; see `qx suite` for the list.
    pub identity: String,
    #[arg(long, value_enum)]
    pub case: Option<Algebra>,
    /// Algebra size, or the first block size for sylvester-* and gp.
    #[arg(long = "N")]
    pub n: Option<usize>,
    /// Second block size for sylvester-* and gp.
    #[arg(long = "M")]
    pub m: Option<usize>,
    #[arg(long = "I", value_delimiter = ',')]
    pub set: Option<Vec<usize>>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_delimiter = ',')]
    pub sigma: Option<Vec<usize>>,
    #[arg(long)]
    pub symbolic_a: bool,
    #[arg(long, value_enum)]
    pub border: Option<BorderArg>,
    #[arg(long, value_enum)]
    pub pf_exponent: Option<PfExponentArg>,
    #[arg(long, value_enum)]
    pub gp_exponent: Option<GpExponentArg>,
    /// Identity descriptor for cayley and muir-law; repeatable.
    #[arg(long)]
    pub descriptor: Vec<String>,
    /// File with one descriptor per line.
    #[arg(long)]
    pub catalog: Option<PathBuf>,
    /// Multiply one coefficient by q before comparing (negative control).
    #[arg(long)]
    pub perturb: bool,
}

#[derive(Args, Debug)]
pub struct SuiteArgs {
    /// Size cap for every case.
    #[arg(long = "max-N")]
    pub max_n: Option<usize>,
    /// Worker threads.
    #[arg(long, env = "QX_JOBS")]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub symbolic_a: bool,
    /// Only these identities.
    #[arg(long, value_delimiter = ',')]
    pub only: Option<Vec<String>>,
    /// Run every check as a negative control.
    #[arg(long)]
    pub perturb: bool,
    /// List the planned checks without running them.
    #[arg(long)]
    pub list: bool,
}

/// Printed output and whether every verified identity held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn pass(text: String) -> Output {
        Output { text, ok: true }
    }
}

fn usage(s: impl Into<String>) -> CliError {
    CliError::Usage(s.into())
}

fn cap(n: usize) -> Result<(), CliError> {
    if n == 0 {
        return Err(usage("N must be positive"));
    }
    if n > MAX_N {
        return Err(usage(format!("N = {} exceeds the cap of {}", n, MAX_N)));
    }
    Ok(())
}

fn index_set(v: &[usize], n: usize) -> Result<IndexSet, CliError> {
    if v.iter().any(|&i| i == 0 || i > n) {
        return Err(usage(format!("index out of range 1..={} in {:?}", n, v)));
    }
    IndexSet::new(v.to_vec()).map_err(usage)
}

fn xcase(a: Algebra) -> Result<Case, CliError> {
    match a {
        Algebra::O => Ok(Case::O),
        Algebra::Sp => Ok(Case::Sp),
        other => Err(usage(format!("case must be O or Sp, not {}", other))),
    }
}

fn element_output(format: Format, verb: &str, case: Algebra, n: usize, e: &Element) -> Output {
    let text = match format {
        Format::Text => e.to_string(),
        Format::Json => json!({"verb": verb, "case": case.to_string(), "N": n, "result": e.to_string()}).to_string(),
    };
    Output::pass(text)
}

fn reports_output(format: Format, rs: &[Report], single: bool) -> Output {
    let ok = rs.iter().all(|r| r.holds);
    let text = match format {
        Format::Json if single => rs[0].to_json(),
        Format::Json => reports_json(rs),
        Format::Text => {
            let mut lines: Vec<String> = rs.iter().map(Report::to_text).collect();
            if rs.len() > 1 {
                let passed = rs.iter().filter(|r| r.holds).count();
                lines.push(format!("{}/{} checks passed", passed, rs.len()));
            }
            lines.join("\n")
        }
    };
    Output { text, ok }
}

/// Executes a parsed command.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let f = cli.format;
    match &cli.verb {
        Verb::NormalForm { case, n, expr } => {
            cap(*n)?;
            let p = presentation(case.pres_kind(), *n);
            let e = Element::parse(&p, expr).map_err(|e| CliError::Parse(e.to_string()))?;
            let e = e.try_normal_form().map_err(|e| usage(e.to_string()))?;
            Ok(element_output(f, "normal-form", *case, *n, &e))
        }
        Verb::Det { n, rows, cols } => {
            cap(*n)?;
            let full: Vec<usize> = (1..=*n).collect();
            let i = index_set(rows.as_deref().unwrap_or(&full), *n)?;
            let j = index_set(cols.as_deref().unwrap_or(&full), *n)?;
            let e = quantum_minor(*n, &i, &j).map_err(usage)?;
            Ok(element_output(f, "det", Algebra::Mat, *n, &e))
        }
        Verb::Sdet { case, n, set } => {
            cap(*n)?;
            let c = xcase(*case)?;
            let s = match set {
                Some(v) => index_set(v, *n)?,
                None => IndexSet::full(*n),
            };
            Ok(element_output(f, "sdet", *case, *n, &sdet_minor(c, *n, &s)))
        }
        Verb::Pf { case, n, set } => {
            cap(*n)?;
            if let Some(c) = case {
                if *c != Algebra::Sp {
                    return Err(usage(format!("pf requires case Sp, not {}", c)));
                }
            }
            let s = match set {
                Some(v) => index_set(v, *n)?,
                None => IndexSet::full(*n),
            };
            if s.len() % 2 != 0 {
                return Err(usage(format!("pf requires an even index set, got {}", s)));
            }
            Ok(element_output(f, "pf", Algebra::Sp, *n, &pf_minor(*n, &s)))
        }
        Verb::Minor { case, n, rows, cols } => {
            cap(*n)?;
            let i = index_set(rows, *n)?;
            let j = index_set(cols, *n)?;
            let e = match case {
                Algebra::Mat => quantum_minor(*n, &i, &j).map_err(usage)?,
                Algebra::Ext => return Err(usage("minors are defined for cases Mat, O and Sp")),
                c => sklyanin_minor(xcase(*c)?, *n, i.as_slice(), j.as_slice()).map_err(usage)?,
            };
            Ok(element_output(f, "minor", *case, *n, &e))
        }
        Verb::Basis { case, n, degree } => {
            cap(*n)?;
            let p = presentation(case.pres_kind(), *n);
            let words: Vec<String> = basis_enumerate(&p, *degree).iter().map(|e| e.to_string()).collect();
            let text = match f {
                Format::Text => {
                    let mut s = format!("{} basis words of degree {}", words.len(), degree);
                    for w in &words {
                        s.push('\n');
                        s.push_str(w);
                    }
                    s
                }
                Format::Json => {
                    json!({"verb": "basis", "case": case.to_string(), "N": n, "degree": degree, "result": words}).to_string()
                }
            };
            Ok(Output::pass(text))
        }
        Verb::Verify(a) => verify(f, a),
        Verb::Suite(a) => suite(f, a),
    }
}

fn verify(f: Format, a: &VerifyArgs) -> Result<Output, CliError> {
    let blocks = matches!(a.identity.as_str(), "sylvester-sdet" | "sylvester-pf" | "gp");
    let mut opts = Options {
        symbolic_a: a.symbolic_a,
        k: a.k,
        sigma: a.sigma.clone(),
        border: a.border.map(|b| match b {
            BorderArg::Tail => Border::Tail,
            BorderArg::Literal => Border::Literal,
        }),
        pf_exponent: a.pf_exponent.map(|e| match e {
            PfExponentArg::Small => PfExponent::Small,
            PfExponentArg::Border => PfExponent::Border,
        }),
        gp_exponent: a.gp_exponent.map(|e| match e {
            GpExponentArg::Statement => GpExponent::Statement,
            GpExponentArg::Expansion => GpExponent::Expansion,
        }),
        descriptors: a.descriptor.clone(),
        ..Options::default()
    };
    if let Some(path) = &a.catalog {
        let src = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {}", path.display(), e)))?;
        opts.descriptors.extend(
            src.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from),
        );
    }
    let n = if blocks {
        if a.n.is_some() || a.m.is_some() {
            let d = match (a.identity.as_str(), a.case) {
                ("sylvester-sdet", Some(Algebra::Sp)) | ("sylvester-pf", _) => (2, 2),
                ("sylvester-sdet", _) => (1, 2),
                _ => (1, 1),
            };
            opts.sizes = Some((a.n.unwrap_or(d.0), a.m.unwrap_or(d.1)));
        }
        None
    } else {
        if a.m.is_some() {
            return Err(usage("--M applies only to sylvester-sdet, sylvester-pf and gp"));
        }
        a.n
    };
    if let Some(s) = &a.set {
        let bound = n.unwrap_or(MAX_N);
        opts.set = Some(index_set(s, bound)?);
    }
    let check = check_for(&a.identity, a.case, n, opts).map_err(usage)?;
    let r = if a.perturb { run_perturbed(&check) } else { run_check(&check) }.map_err(usage)?;
    Ok(reports_output(f, &[r], true))
}

fn suite(f: Format, a: &SuiteArgs) -> Result<Output, CliError> {
    let caps = match a.max_n {
        Some(n) => {
            cap(n)?;
            Caps::uniform(n)
        }
        None => Caps::default(),
    };
    let mut checks = plan(caps, a.symbolic_a);
    if let Some(only) = &a.only {
        for name in only {
            if !super::IDENTITIES.contains(&name.as_str()) {
                return Err(usage(format!("unknown identity '{}'", name)));
            }
        }
        checks.retain(|c| only.iter().any(|o| o == c.identity));
    }
    if a.list {
        let lines: Vec<String> = checks
            .iter()
            .map(|c| {
                let p: Vec<String> = c.params().iter().map(|(k, v)| format!("{}={}", k, v)).collect();
                format!("{} {} N={} {}", c.identity, c.case, c.n, p.join(" ")).trim_end().to_string()
            })
            .collect();
        return Ok(Output::pass(lines.join("\n")));
    }
    let jobs = a.jobs.unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
    if jobs == 0 {
        return Err(usage("--jobs must be positive"));
    }
    let rs = run_suite(&checks, jobs, a.perturb);
    Ok(reports_output(f, &rs, false))
}
