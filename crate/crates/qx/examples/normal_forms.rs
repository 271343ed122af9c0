// Parsing and normal forms in the matrix, reflection and exterior algebras.

use qx::ncalg::{basis_enumerate, presentation, Case, Element, PresKind};

fn nf(kind: PresKind, n: usize, src: &str) -> Result<Element, String> {
    let p = presentation(kind, n);
    let e = Element::parse(&p, src).map_err(|e| e.to_string())?;
    e.try_normal_form().map_err(|e| e.to_string())
}

pub fn run_example() -> Result<(), String> {
    let e = nf(PresKind::X(Case::O), 2, "x[2,1]")?;
    println!("O, N=2:  x[2,1] = {}", e);
    assert_eq!(e.to_string(), "q^-1*x[1,2]");

    let e = nf(PresKind::X(Case::Sp), 2, "x[2,1] + q*x[1,2]")?;
    println!("Sp, N=2: x[2,1] + q*x[1,2] = {}", e);
    assert!(e.is_zero());

    let e = nf(PresKind::Mat, 2, "t[2,1]*t[1,1]")?;
    println!("Mat, N=2: t[2,1]*t[1,1] = {}", e);

    let e = nf(PresKind::Mat, 2, "t[2,2]*t[1,1] - t[1,1]*t[2,2]")?;
    println!("Mat, N=2: [t22, t11] = {}", e);

    for (kind, n) in [(PresKind::Mat, 2), (PresKind::X(Case::O), 3), (PresKind::Ext, 4)] {
        let p = presentation(kind, n);
        let counts: Vec<usize> = (0..=3).map(|d| basis_enumerate(&p, d).len()).collect();
        println!("{} N={}: basis sizes in degrees 0..3 = {:?}", kind.name(), n, counts);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("normal_forms example");
}
