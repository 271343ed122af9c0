// Sklyanin determinants, the explicit formula, the comatrix and centrality.

use qx::matrix_algebra::IndexSet;
use qx::ncalg::{is_central, Case};
use qx::sklyanin::{cramer_products, sdet, sdet_explicit, sdet_minor, x_pres};

pub fn run_example() -> Result<(), String> {
    let s = sdet(Case::O, 2);
    println!("sdet X, O, N = 2: {}", s);
    assert_eq!(s.to_string(), "x[1,1]*x[2,2] - q*x[1,2]^2");

    for (case, n) in [(Case::O, 3), (Case::Sp, 4)] {
        let s = sdet(case, n);
        let e = sdet_explicit(case, n);
        println!("{} N = {}: sdet has {} terms, explicit formula agrees: {}", case, n, s.len(), s.sub(&e).normal_form().is_zero());
        assert!(is_central(&x_pres(case, n), &s));
    }

    let m = sdet_minor(Case::O, 3, &IndexSet::new(vec![1, 3])?);
    println!("principal minor on {{1,3}}: {}", m);

    let (hx, xh) = cramer_products(Case::O, 2);
    let s = sdet(Case::O, 2);
    for i in 0..2 {
        for j in 0..2 {
            let want = if i == j { s.clone() } else { qx::ncalg::Element::zero() };
            assert!(hx[i][j].sub(&want).normal_form().is_zero());
            assert!(xh[i][j].sub(&want).normal_form().is_zero());
        }
    }
    println!("hat(X) X = X hat(X) = sdet X . 1 at O, N = 2");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("sklyanin_determinant example");
}
