// Jacobi, Cayley complementary, Muir and Sylvester identities.

use qx::identities::jacobi::{jacobi_pf, jacobi_sdet};
use qx::identities::sylvester::{gp_convention, sylvester_sdet, Border};
use qx::identities::{cayley_transform, muir_law_transform, Descriptor};
use qx::matrix_algebra::IndexSet;
use qx::ncalg::Case;

pub fn run_example() -> Result<(), String> {
    let i = IndexSet::new(vec![1, 3])?;
    let o = jacobi_sdet(Case::O, 3, &i)?;
    println!("Jacobi, sdet kind, O, N = 3, I = {}: {}", i, o.holds);
    assert!(o.holds);
    let o = jacobi_pf(4, &IndexSet::new(vec![1, 2])?)?;
    println!("Jacobi, Pfaffian kind, N = 4, I = {{1,2}}: {}", o.holds);

    // a commutation identity among principal minors
    let d = Descriptor::parse("sdet[1]*sdet[1,2] - sdet[1,2]*sdet[1]", 2).map_err(|e| e.to_string())?;
    let c = cayley_transform(&d).map_err(|e| e.to_string())?;
    println!("identity:   {}", d);
    println!("complement: {}", c);
    assert!(c.evaluate(Case::O).map_err(|e| e.to_string())?.holds);
    let j = IndexSet::new(vec![3])?;
    let m = muir_law_transform(&d, &j).map_err(|e| e.to_string())?;
    println!("lifted by J = {}: {}", j, m);
    assert!(m.evaluate(Case::O).map_err(|e| e.to_string())?.holds);

    let o = sylvester_sdet(Case::O, 2, 1, Border::Tail)?;
    println!("Sylvester, O, 2 + 1: {} ({:?})", o.holds, o.notes);
    println!("Grassmann-Plücker exponent selected by the n = m = 1 oracle: {:?}", gp_convention());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("minor_identities example");
}
