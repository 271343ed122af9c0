// Quantum determinant and minors of the matrix algebra, and their coproduct.

use qx::matrix_algebra::{coproduct, det_q, quantum_minor, IndexSet};
use qx::ncalg::{is_central, presentation, PresKind};

pub fn run_example() -> Result<(), String> {
    let d2 = det_q(2);
    println!("det_q(T), N = 2: {}", d2);
    assert_eq!(d2.to_string(), "t[1,1]*t[2,2] - q*t[1,2]*t[2,1]");

    let d3 = det_q(3);
    println!("det_q(T), N = 3 has {} terms", d3.len());
    assert!(is_central(&presentation(PresKind::Mat, 3), &d3));

    let i = IndexSet::new(vec![1, 2])?;
    let j = IndexSet::new(vec![2, 3])?;
    let m = quantum_minor(3, &i, &j)?;
    println!("minor rows {} cols {}: {}", i, j, m);

    // det_q is grouplike
    let delta = coproduct(&d2);
    println!("coproduct of det_q, N = 2: {} terms", delta.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("quantum_minors example");
}
