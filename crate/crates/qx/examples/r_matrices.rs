// R-matrices, the Yang-Baxter equation and q-antisymmetrizers.

use qx::identities::operator::{antisymmetrizer_checks, braid, ybe};
use qx::tensorops::{antisymmetrizer, permutation, r_matrix, r_minus, TensorOp};
use qx::scalars::qdiff;

pub fn run_example() -> Result<(), String> {
    let n = 2;
    let r = r_matrix(n, false);
    let rp = r_matrix(n, true);
    let rm = r_minus(n);
    let lhs = rp.sub(&rm);
    let rhs = permutation(n).scale(&qdiff());
    println!("R^+ - R^- = (q - q^-1) P at N = {}: {}", n, lhs.equals(&rhs));
    assert!(lhs.equals(&rhs));
    assert!(r.compose(&rm).equals(&TensorOp::identity(n, 2)));

    for n in [2, 3] {
        let o = ybe(n);
        println!("YBE with spectral parameters, N = {}: {}", n, o.holds);
        assert!(o.holds);
        assert!(braid(n).holds);
    }

    let a = antisymmetrizer(3, 3, false);
    println!("A_3 on (C^3)^3 has trace {}", a.trace());
    let o = antisymmetrizer_checks(3, 3);
    println!("A_3 idempotent and recursive: {}", o.holds);
    assert!(o.holds);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("r_matrices example");
}
