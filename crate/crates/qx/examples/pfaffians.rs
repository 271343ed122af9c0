// Quantum Pfaffians of the symplectic reflection algebra.

use qx::matrix_algebra::IndexSet;
use qx::ncalg::Case;
use qx::pfaffian::{pf, pf_minor, plucker_check};
use qx::scalars::Scalar;
use qx::sklyanin::sdet;

pub fn run_example() -> Result<(), String> {
    let p4 = pf(4);
    println!("Pf X, N = 4: {}", p4);
    assert_eq!(p4.to_string(), "x[1,2]*x[3,4] - q*x[1,3]*x[2,4] + q^2*x[1,4]*x[2,3]");

    let sub = pf_minor(6, &IndexSet::new(vec![2, 3, 5, 6])?);
    println!("[2,3,5,6] in N = 6: {}", sub);

    // sdet = q^{3n} Pf^2 with N = 2n
    for n in [2, 4] {
        let p = pf(n);
        let rhs = p.mul(&p).scale(&Scalar::qpow(3 * (n / 2) as i32));
        let ok = sdet(Case::Sp, n).sub(&rhs).normal_form().is_zero();
        println!("sdet X = q^{} Pf(X)^2 at N = {}: {}", 3 * (n / 2), n, ok);
        assert!(ok);
    }

    println!("Plücker condition at N = 4: {}", plucker_check(4));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("pfaffians example");
}
