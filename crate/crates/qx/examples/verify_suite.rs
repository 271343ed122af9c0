// Running registered checks programmatically and reading their reports.

use qx::cli::{check_for, plan, run_check, run_perturbed, run_suite, Caps, Options};

pub fn run_example() -> Result<(), String> {
    let opts = Options { set: Some(qx::matrix_algebra::IndexSet::new(vec![1, 3])?), ..Options::default() };
    let c = check_for("jacobi-sdet", Some(qx::cli::Algebra::O), Some(3), opts)?;
    let r = run_check(&c)?;
    println!("{}", r.to_text());
    println!("{}", r.to_json());
    assert!(r.holds);

    // the same check with one coefficient multiplied by q
    let bad = run_perturbed(&c)?;
    println!("{}", bad.to_text());
    assert!(!bad.holds);

    let checks: Vec<_> = plan(Caps::uniform(2), false).into_iter().filter(|c| c.identity.starts_with("center")).collect();
    for r in run_suite(&checks, 2, false) {
        println!("{}", r.to_text());
        assert!(r.holds);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("verify_suite example");
}
