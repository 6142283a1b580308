use std::f64::consts::{FRAC_PI_2, PI};

use alexander::potential;
use laurent::{Poly, Torus, C64};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::Rational64;
use proptest::prelude::*;
use signature::library::{self, torus_knot_matrix};
use signature::*;

fn one_variable(a: DMatrix<i64>) -> SeifertSystem {
    SeifertSystem::supported_on(1, 0, a, SeifertMeta::default()).unwrap()
}

/// `σ_{T(2,2m+1)}(e^{2iα})` for `α ∈ (0, π/2]`: `-2` per root `e^{iπ(2k-1)/(2m+1)}`
/// of `(t^{2m+1} + 1)/(t + 1)` passed on the way from `ω = 1`.
fn torus_knot_signature(m: usize, alpha: f64) -> i64 {
    let theta = 2.0 * alpha.min(PI - alpha);
    -2 * (1..=m).filter(|&k| ((2 * k - 1) as f64 * PI / (2 * m + 1) as f64) < theta).count() as i64
}

#[test]
fn empty_and_two_term_forms() {
    let hopf = library::hopf().system;
    let h = hermitian_form(&hopf, &Torus::from_angles(&[0.4, 1.1])).unwrap();
    assert_eq!(h.shape(), (0, 0));
    let p = signature_nullity(&hopf, &Torus::from_angles(&[0.4, 1.1])).unwrap();
    assert_eq!((p.sigma, p.eta, p.gap), (0, 0, None));

    let a = DMatrix::from_row_slice(2, 2, &[-1, 1, 0, -1]);
    let z = Torus::from_angles(&[0.7]);
    let w = z.omegas()[0];
    let one = C64::new(1.0, 0.0);
    let expected = a.map(|x| C64::new(x as f64, 0.0)) * (one - w.conj())
        + a.transpose().map(|x| C64::new(x as f64, 0.0)) * (one - w);
    let h = hermitian_form(&one_variable(a), &z).unwrap();
    assert!((h - expected).norm() < 1e-14);
}

#[test]
fn rejects_trivial_coordinate() {
    let s = library::torus_hopf_sum(1).system;
    let z = Torus::from_angles(&[0.5, 0.0]);
    assert_eq!(hermitian_form(&s, &z), Err(SignatureError::NotInTorusStar(1)));
}

#[test]
fn trefoil_at_minus_one() {
    let s = library::trefoil().system;
    let z = Torus::from_angles(&[FRAC_PI_2]);
    let h = hermitian_form(&s, &z).unwrap();
    let expected = DMatrix::from_row_slice(2, 2, &[-4.0, 2.0, 2.0, -4.0]);
    assert!((h.map(|c| c.re) - expected).norm() < 1e-12);
    let p = signature_nullity(&s, &z).unwrap();
    assert_eq!((p.sigma, p.eta), (-2, 0));
    assert!((p.gap.unwrap() - 2.0).abs() < 1e-12);
    assert!(p.well_separated());
}

#[test]
fn torus_knot_signatures_match_root_count() {
    for m in 1..=3 {
        let s = one_variable(torus_knot_matrix(m));
        for i in 1..40 {
            let alpha = i as f64 * PI / 40.0 + 0.003;
            let p = signature_nullity(&s, &Torus::from_angles(&[alpha])).unwrap();
            assert_eq!(p.sigma, torus_knot_signature(m, alpha), "m = {m}, alpha = {alpha}");
            assert_eq!(p.eta, 0);
        }
    }
}

#[test]
fn json_format() {
    let text = r#"{"mu": 2, "size": 1,
        "matrices": {"++": [[-1]], "+-": [[2]], "-+": [[2]], "--": [[-1]]},
        "meta": {"name": "toy"}}"#;
    let s: SeifertSystem = serde_json::from_str(text).unwrap();
    assert_eq!(s.matrix(0b10)[(0, 0)], 2);
    assert_eq!(s.meta.name, "toy");
    assert_eq!(serde_json::from_str::<SeifertSystem>(&serde_json::to_string(&s).unwrap()).unwrap(), s);

    let asymmetric = text.replace(r#""-+": [[2]]"#, r#""-+": [[4]]"#);
    assert!(serde_json::from_str::<SeifertSystem>(&asymmetric).unwrap_err().to_string().contains("transpose"));
    let missing = text.replace(r#", "--": [[-1]]"#, "");
    assert!(serde_json::from_str::<SeifertSystem>(&missing).unwrap_err().to_string().contains("missing key --"));
}

#[test]
fn crossing_change() {
    let z = Torus::from_angles(&[FRAC_PI_2]);
    let unknot = one_variable(DMatrix::from_row_slice(2, 2, &[0, 1, 0, -1]));
    let trefoil = library::trefoil().system;
    assert_eq!(crossing_change_delta(&trefoil, &unknot, &z), Ok(-2));
    assert_eq!(crossing_change_delta(&trefoil, &trefoil, &z), Ok(0));
    // a 1x1 zero matrix is degenerate at every point
    let zero = one_variable(DMatrix::zeros(1, 1));
    let minus = one_variable(DMatrix::from_element(1, 1, -1));
    assert!(matches!(crossing_change_delta(&minus, &zero, &z), Err(SignatureError::PreconditionViolated(_))));
    let plus = one_variable(DMatrix::from_element(1, 1, 1));
    assert_eq!(crossing_change_delta(&plus, &minus, &z), Err(SignatureError::UnexpectedDelta(2)));
}

#[test]
fn signature_side_of_the_family() {
    let hopf = library::hopf().system;
    assert_eq!(signature_side(&hopf, &Torus::from_angles(&[0.9, 2.2])), Ok(Rational64::from_integer(0)));
    for m in 1..=2 {
        let s = library::torus_hopf_sum(m).system;
        for (a1, a2) in [(0.4, 1.3), (1.2, 0.3), (FRAC_PI_2, 2.5), (2.7, 1.9), (1.0, 1.0)] {
            let z = Torus::from_angles(&[a1, a2]);
            let rhs = signature_side(&s, &z).unwrap();
            assert_eq!(rhs, Rational64::from_integer(-torus_knot_signature(m, a1)));
            assert_eq!(signature_side_four_term(&s, &z).unwrap(), rhs);
        }
    }
    assert!(matches!(
        signature_side(&library::trefoil().system, &Torus::from_angles(&[1.0])),
        Err(SignatureError::DimensionMismatch(_))
    ));
}

#[test]
fn conway_matrix_determinants() {
    let t = |mu, k| Poly::var(mu, k) - Poly::var_pow(mu, k, -1);
    for m in 1..=2 {
        let knot = library::torus_knot(m);
        let det = knot.system.conway_matrix().det().unwrap();
        assert_eq!(&det, potential(&knot.braid).unwrap().numerator());

        let sum = library::torus_hopf_sum(m);
        let det = sum.system.conway_matrix().det().unwrap();
        let nabla = potential(&sum.braid).unwrap().as_polynomial().unwrap().clone();
        assert_eq!(det, &t(2, 1).pow(2 * m as u32) * &nabla);

        let single = library::torus_hopf_sum_one_variable(m);
        let det = single.system.conway_matrix().det().unwrap();
        let nabla = potential(&single.braid).unwrap().as_polynomial().unwrap().clone();
        assert_eq!(-det, &t(1, 0) * &nabla);
    }
    let det = library::hopf().system.conway_matrix().det().unwrap();
    assert_eq!(det, Poly::constant(2, BigInt::from(1)));
}

#[test]
fn library_parity() {
    for entry in library::all() {
        let mu = entry.system.mu();
        for i in 0..12 {
            let angles: Vec<f64> = (0..mu).map(|k| 0.15 + 0.26 * (i as f64) + 0.71 * k as f64).map(|a| a % PI).collect();
            let z = Torus::from_angles(&angles);
            match parity_check(&entry.system, &entry.braid, &z) {
                Ok(r) => assert!(r.holds, "{} at {angles:?}: {r:?}", entry.system.meta.name),
                Err(SignatureError::PreconditionViolated(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
    let hopf = library::hopf();
    let r = parity_check(&hopf.system, &hopf.braid, &Torus::from_angles(&[0.5, 2.0])).unwrap();
    assert_eq!((r.sigma, r.components, r.sublink_linking), (0, 2, 1));
    assert!(r.twisted_potential < 0.0);
}

#[test]
fn two_component_parity_tracks_potential_sign() {
    let entry = library::torus_hopf_sum(1);
    for a1 in [0.2, 0.5, 1.0, 1.6, 2.4, 2.9] {
        let z = Torus::from_angles(&[a1, 1.3]);
        let sigma = signature_nullity(&entry.system, &z).unwrap().sigma;
        let nabla = potential(&entry.braid).unwrap().evaluate_half(&z);
        assert!(nabla.im.abs() < 1e-12);
        assert_eq!(sigma.rem_euclid(4) == 0, nabla.re > 0.0, "alpha_1 = {a1}");
    }
}

fn arb_system() -> impl Strategy<Value = SeifertSystem> {
    (1usize..=3, 0usize..=4).prop_flat_map(|(mu, g)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, g * g), 1 << (mu - 1)).prop_map(move |halves| {
            let full = (1usize << mu) - 1;
            let mut matrices = vec![DMatrix::zeros(g, g); 1 << mu];
            for (mask, entries) in (0..1usize << mu).filter(|m| m >> (mu - 1) & 1 == 0).zip(halves) {
                let a = DMatrix::from_row_slice(g, g, &entries);
                matrices[full ^ mask] = a.transpose();
                matrices[mask] = a;
            }
            SeifertSystem::new(mu, g, matrices, SeifertMeta::default()).unwrap()
        })
    })
}

fn arb_angles() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.05f64..PI - 0.05, 3)
}

proptest! {
    #[test]
    fn form_is_hermitian_and_counts_are_consistent(s in arb_system(), a in arb_angles()) {
        let z = Torus::from_angles(&a[..s.mu()]);
        let h = hermitian_form(&s, &z).unwrap();
        prop_assert!((&h - h.adjoint()).norm() <= 1e-12 * (1.0 + h.norm()));
        let p = signature_nullity(&s, &z).unwrap();
        prop_assert!(p.sigma.unsigned_abs() as usize + p.eta <= s.size());
        prop_assert_eq!((p.sigma + p.eta as i64 - s.size() as i64).rem_euclid(2), 0);
    }

    #[test]
    fn conjugate_point_has_same_signature(s in arb_system(), a in arb_angles()) {
        let z = Torus::from_angles(&a[..s.mu()]);
        let p = signature_nullity(&s, &z).unwrap();
        let q = signature_nullity(&s, &z.conj()).unwrap();
        prop_assert_eq!((p.sigma, p.eta), (q.sigma, q.eta));
    }

    #[test]
    fn diagonal_relation_on_the_family(m in 1usize..=2, alpha in 0.05f64..PI - 0.05) {
        let multi = library::torus_hopf_sum(m).system;
        let single = library::torus_hopf_sum_one_variable(m).system;
        let z = Torus::from_angles(&[alpha]);
        prop_assume!(signature_nullity(&single, &z).unwrap().eta == 0);
        prop_assert!(diagonal_relation_holds(&multi, &single, &z, 1).unwrap());
    }

    #[test]
    fn family_signature_is_constant_off_the_zero_locus(m in 1usize..=2, a1 in 0.05f64..PI - 0.05, a2 in prop::collection::vec(0.05f64..PI - 0.05, 5)) {
        let s = library::torus_hopf_sum(m).system;
        let expected = torus_knot_signature(m, a1);
        prop_assume!(signature_nullity(&s, &Torus::from_angles(&[a1, a2[0]])).unwrap().eta == 0);
        for b in a2 {
            prop_assert_eq!(signature_nullity(&s, &Torus::from_angles(&[a1, b])).unwrap().sigma, expected);
        }
    }
}
