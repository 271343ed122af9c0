// Exact arithmetic with rational functions in `q` and formal parameters.

use qx::scalars::{gauss_number, parse_scalar, q_factorial, qdiff, Scalar};

pub fn run_example() -> Result<(), String> {
    let q = Scalar::q();

    let x = parse_scalar("(q^2 - q^-2)/(q - q^-1)").map_err(|e| e.to_string())?;
    println!("(q^2 - q^-2)/(q - q^-1) = {}", x);
    let q_inv = q.inv().map_err(|e| e.to_string())?;
    assert_eq!(x, &q + &q_inv);
    assert_eq!(x, gauss_number(2));

    // bar: q -> q^-1
    let y = parse_scalar("q^3 + 2*q - 1").map_err(|e| e.to_string())?;
    println!("bar({}) = {}", y, y.bar());
    assert_eq!(y.bar().bar(), y);

    let f = q_factorial(3, &Scalar::qpow(4));
    println!("[3]_(q^4)! = {}", f);

    let a = Scalar::a(1);
    let r = (&a * &qdiff()).checked_div(&(&a + &Scalar::one())).map_err(|e| e.to_string())?;
    println!("a1 (q - q^-1) / (a1 + 1) = {}", r);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("q_scalars example");
}
