use qx::identities::jacobi::{jacobi_comatrix, jacobi_pf, jacobi_sdet};
use qx::identities::quasidet::{quasidet_pf, quasidet_sdet, valid_pf_orders};
use qx::identities::sylvester::{gp_convention, grassmann_plucker, sylvester_pf, sylvester_sdet, Border, GpExponent, PfExponent};
use qx::identities::trace::muir_trace;
use qx::identities::{cayley_seeds, cayley_transform, muir_law_transform, muir_seeds, with_perturbation, Descriptor, Kind};
use qx::matrix_algebra::IndexSet;
use qx::ncalg::Case;

#[test]
fn jacobi_all_index_sets() {
    for s in IndexSet::all_subsets(3) {
        assert!(jacobi_sdet(Case::O, 3, &s).unwrap().holds, "I = {}", s);
    }
    for s in IndexSet::all_subsets(4).into_iter().filter(|s| s.len() % 2 == 0) {
        assert!(jacobi_pf(4, &s).unwrap().holds, "I = {}", s);
    }
    assert!(jacobi_comatrix(Case::O, 3, 2).unwrap().holds);
}

#[test]
fn descriptor_text_round_trip() {
    for kind in [Kind::Sdet, Kind::Pf] {
        let (_, n, seeds) = cayley_seeds(kind);
        assert!(seeds.len() >= 3);
        for d in seeds {
            assert_eq!(Descriptor::parse(&d.to_string(), n).unwrap(), d);
        }
    }
    assert!(Descriptor::parse("sdet[1,4]", 3).is_err());
    assert!(Descriptor::parse("sdet[1]*pf[1,2]", 3).is_err());
}

#[test]
fn cayley_is_an_involution_and_preserves_truth() {
    for kind in [Kind::Sdet, Kind::Pf] {
        let (case, _, seeds) = cayley_seeds(kind);
        for d in seeds {
            let c = cayley_transform(&d).unwrap();
            assert_eq!(cayley_transform(&c).unwrap(), d);
            assert!(d.evaluate(case).unwrap().holds, "{}", d);
            assert!(c.evaluate(case).unwrap().holds, "{}", c);
        }
    }
}

#[test]
fn muir_lifts_preserve_truth() {
    for kind in [Kind::Sdet, Kind::Pf] {
        let (case, j, seeds) = muir_seeds(kind);
        assert!(seeds.len() >= 3);
        for d in seeds {
            assert!(muir_law_transform(&d, &j).unwrap().evaluate(case).unwrap().holds, "{}", d);
        }
    }
}

#[test]
fn false_descriptor_fails() {
    let d = Descriptor::parse("sdet[1]*sdet[1,2] - q*sdet[1,2]*sdet[1]", 2).unwrap();
    assert!(!d.evaluate(Case::O).unwrap().holds);
}

#[test]
fn trace_identity() {
    for k in 1..=2 {
        assert!(muir_trace(Case::O, 2, k).unwrap().holds);
    }
    assert!(muir_trace(Case::O, 3, 2).unwrap().holds);
    assert!(muir_trace(Case::O, 3, 0).is_err());
}

#[test]
fn sylvester_border_arbitration() {
    assert!(sylvester_sdet(Case::O, 1, 2, Border::Tail).unwrap().holds);
    assert!(!sylvester_sdet(Case::O, 1, 2, Border::Literal).unwrap().holds);
    assert!(sylvester_sdet(Case::O, 2, 1, Border::Tail).unwrap().holds);
    assert!(sylvester_pf(1, 1, PfExponent::Small).unwrap().holds);
    assert!(sylvester_pf(2, 1, PfExponent::Small).unwrap().holds);
    assert!(!sylvester_pf(2, 1, PfExponent::Border).unwrap().holds);
}

#[test]
fn grassmann_plucker_convention() {
    assert_eq!(gp_convention(), GpExponent::Expansion);
    assert!(!grassmann_plucker(1, 1, GpExponent::Statement).unwrap().holds);
    for (n, m) in [(1, 1), (1, 3), (3, 1)] {
        assert!(grassmann_plucker(n, m, GpExponent::Expansion).unwrap().holds);
    }
    assert!(grassmann_plucker(2, 1, GpExponent::Expansion).is_err());
}

#[test]
fn quasideterminants() {
    assert_eq!(valid_pf_orders(4).len(), 6);
    for s in valid_pf_orders(4) {
        assert!(quasidet_pf(4, &s).unwrap().holds);
    }
    assert!(quasidet_sdet(3, &[3, 1, 2]).unwrap().holds);
    assert!(quasidet_sdet(3, &[1, 1, 2]).is_err());
    assert!(quasidet_pf(4, &[2, 1, 3, 4]).is_err());
}

#[test]
fn negative_controls() {
    let i = IndexSet::new(vec![1, 3]).unwrap();
    assert!(!with_perturbation(|| jacobi_sdet(Case::O, 3, &i)).unwrap().holds);
    assert!(!with_perturbation(|| muir_trace(Case::O, 2, 2)).unwrap().holds);
    assert!(!with_perturbation(|| grassmann_plucker(1, 1, GpExponent::Expansion)).unwrap().holds);
    let (case, _, seeds) = cayley_seeds(Kind::Sdet);
    assert!(!with_perturbation(|| seeds[0].evaluate(case)).unwrap().holds);
    // disarmed afterwards
    assert!(jacobi_sdet(Case::O, 3, &i).unwrap().holds);
}
