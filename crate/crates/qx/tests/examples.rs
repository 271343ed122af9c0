mod q_scalars {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/q_scalars.rs"));
}
mod normal_forms {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/normal_forms.rs"));
}
mod r_matrices {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/r_matrices.rs"));
}
mod quantum_minors {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/quantum_minors.rs"));
}
mod sklyanin_determinant {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/sklyanin_determinant.rs"));
}
mod pfaffians {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/pfaffians.rs"));
}
mod minor_identities {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/minor_identities.rs"));
}
mod verify_suite {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verify_suite.rs"));
}

#[test]
fn q_scalars_runs() {
    q_scalars::run_example().expect("q_scalars");
}

#[test]
fn normal_forms_runs() {
    normal_forms::run_example().expect("normal_forms");
}

#[test]
fn r_matrices_runs() {
    r_matrices::run_example().expect("r_matrices");
}

#[test]
fn quantum_minors_runs() {
    quantum_minors::run_example().expect("quantum_minors");
}

#[test]
fn sklyanin_determinant_runs() {
    sklyanin_determinant::run_example().expect("sklyanin_determinant");
}

#[test]
fn pfaffians_runs() {
    pfaffians::run_example().expect("pfaffians");
}

#[test]
fn minor_identities_runs() {
    minor_identities::run_example().expect("minor_identities");
}

#[test]
fn verify_suite_runs() {
    verify_suite::run_example().expect("verify_suite");
}
