use super::registry::{run_check, run_perturbed, Check};
use super::report::Report;
use rayon::prelude::*;

/// Runs `checks` on `jobs` workers; reports come back in input order.
/// A check that errors yields a failing report carrying the error.
pub fn run_suite(checks: &[Check], jobs: usize, perturb: bool) -> Vec<Report> {
    let one = |c: &Check| {
        let r = if perturb { run_perturbed(c) } else { run_check(c) };
        r.unwrap_or_else(|e| Report {
            identity: c.identity.to_string(),
            case: c.case.to_string(),
            n: c.n,
            params: c.params(),
            holds: false,
            terms: 0,
            elapsed_ms: 0,
            notes: vec![format!("error: {}", e)],
        })
    };
    match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(|| checks.par_iter().map(one).collect()),
        Err(_) => checks.iter().map(one).collect(),
    }
}
