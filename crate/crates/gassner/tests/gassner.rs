use braidcore::{ColoredBraidWord, Coloring};
use gassner::*;
use laurent::{Complex, Poly, PolyMat, Torus};
use num_bigint::BigInt;
use proptest::prelude::*;

fn word(colors: &[usize], letters: &[i32]) -> ColoredBraidWord {
    let mu = *colors.iter().max().unwrap();
    ColoredBraidWord::new(colors.len(), Coloring::new(colors.to_vec(), mu).unwrap(), letters.to_vec()).unwrap()
}

fn t(mu: usize, k: usize) -> Poly {
    Poly::var(mu, k)
}

fn one(mu: usize) -> Poly {
    Poly::one(mu)
}

#[test]
fn generator_matrix() {
    let b = word(&[1, 1, 1, 1], &[2]);
    let m = gassner_unreduced(&b).unwrap().matrix;
    let x = t(1, 0);
    let mut expected = PolyMat::identity(1, 4);
    expected.set(1, 1, &one(1) - &x);
    expected.set(1, 2, x.clone());
    expected.set(2, 1, one(1));
    expected.set(2, 2, Poly::zero(1));
    assert_eq!(m, expected);
}

#[test]
fn pure_braid_example() {
    let b = word(&[1, 2], &[1, 1]);
    let m = gassner_unreduced(&b).unwrap().matrix;
    let (t1, t2) = (t(2, 0), t(2, 1));
    let expected = PolyMat::from_rows(
        2,
        vec![
            vec![&(&one(2) - &t1) + &(&t1 * &t2), &t1 * &(&one(2) - &t1)],
            vec![&one(2) - &t2, t1.clone()],
        ],
    );
    assert_eq!(m, expected);
    // the row identity stated with the example
    let lhs = &(&(&one(2) - &t1) * expected.get(0, 0)) + &(&(&one(2) - &t2) * expected.get(0, 1));
    assert_eq!(lhs, &one(2) - &t1);

    let reduced = gassner_reduced(&b).unwrap().matrix;
    assert_eq!(reduced, PolyMat::from_rows(2, vec![vec![&t1 * &t2]]));
}

#[test]
fn identity_braid() {
    let c = Coloring::new(vec![1, 2, 2], 2).unwrap();
    let id = ColoredBraidWord::identity(c);
    assert_eq!(gassner_unreduced(&id).unwrap().matrix, PolyMat::identity(2, 3));
    assert_eq!(gassner_reduced(&id).unwrap().matrix, PolyMat::identity(2, 2));
    assert!(beta_monomial(&id).is_one());
    assert!(identity_suite(&id).unwrap().all_passed());
}

#[test]
fn trefoil_reduced() {
    let b = word(&[1, 1], &[1, 1, 1]);
    let reduced = gassner_reduced(&b).unwrap().matrix;
    let x = t(1, 0);
    // reduced Burau of σ_1^3 on two strands is the 1×1 matrix [-t^3]
    assert_eq!(reduced, PolyMat::from_rows(1, vec![vec![-(&(&x * &x) * &x)]]));
    let det = reduced.minus_identity().det().unwrap();
    assert_eq!(det, -(&(&(&x * &x) * &x) + &one(1)));
    // (t^3 + 1) = (t + 1)(t^2 - t + 1)
    let alexander = &(&(&x * &x) - &x) + &one(1);
    assert_eq!((-det).exact_divide(&(&x + &one(1))).unwrap(), alexander);
}

#[test]
fn monomials() {
    let b = word(&[1, 2], &[1, 1]);
    assert_eq!(beta_monomial(&b), Poly::monomial(vec![-2, -2], BigInt::from(1)));
    let bb = b.compose(&b.invert()).unwrap();
    assert!(beta_monomial(&bb).is_one());
}

#[test]
fn fixed_vector() {
    let b = word(&[1, 2], &[1, 1]);
    let z = Torus::from_angles(&[0.7, 1.9]);
    assert!(fixed_vector_check(&b, &z).unwrap());
    assert!(fixed_vector_residual(&b, &z).unwrap() < 1e-12);

    // symbolic: (1, t_1) is fixed
    let m = gassner_unreduced(&b).unwrap().matrix;
    let v = PolyMat::from_rows(2, vec![vec![one(2), t(2, 0)]]);
    assert_eq!(v.checked_mul(&m).unwrap(), v);

    let id = ColoredBraidWord::identity(Coloring::new(vec![1, 2], 2).unwrap());
    assert!(matches!(fixed_vector_check(&id, &z), Err(GassnerError::PreconditionViolated(_))));
    let z1 = Torus::from_omegas(&[Complex::new(1.0, 0.0), Complex::new(1.0, 0.0)]).unwrap();
    assert!(fixed_vector_check(&b, &z1).is_err());
}

#[test]
fn suite_skips_double_twist_for_mixed_colors() {
    let r = identity_suite(&word(&[1, 2], &[1, 1])).unwrap();
    assert!(r.all_passed());
    let twist = r.checks.iter().find(|c| c.name == "double_twist_minor").unwrap();
    assert!(matches!(twist.outcome, Outcome::Skipped(_)));
}

fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec((1..n as i32, any::<bool>()), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(i, p)| if p { i } else { -i }).collect())
}

fn arb_cc_braid(max_n: usize, max_len: usize, max_mu: usize) -> impl Strategy<Value = ColoredBraidWord> {
    (2..=max_n)
        .prop_flat_map(move |n| (Just(n), arb_word(n, max_len), prop::collection::vec(1..=max_mu, n)))
        .prop_map(|(n, letters, labels)| ColoredBraidWord::colored_by_cycles(n, letters, &labels).unwrap())
}

fn arb_any_braid(n: usize, max_len: usize) -> impl Strategy<Value = ColoredBraidWord> {
    (arb_word(n, max_len), prop::collection::vec(1usize..=2, n)).prop_filter_map("surjective", move |(l, raw)| {
        let c = Coloring::new(raw, 2).ok()?;
        ColoredBraidWord::new(n, c, l).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn identities_hold(b in arb_cc_braid(5, 10, 3)) {
        let report = identity_suite(&b).unwrap();
        prop_assert!(report.all_passed(), "{}", report);
    }

    #[test]
    fn fox_and_blocks_agree_on_any_coloring(b in arb_any_braid(4, 8)) {
        prop_assert_eq!(gassner_fox(&b), gassner_blocks(&b));
    }

    #[test]
    fn multiplicative(b1 in arb_any_braid(4, 6), tail in arb_word(4, 6)) {
        let b2 = ColoredBraidWord::new(4, b1.top(), tail).unwrap();
        let b12 = b1.compose(&b2).unwrap();
        let product = gassner_fox(&b1).checked_mul(&gassner_fox(&b2)).unwrap();
        prop_assert_eq!(gassner_fox(&b12), product);
    }

    #[test]
    fn determinant_is_a_unit(b in arb_cc_braid(4, 8, 3)) {
        prop_assert!(gassner_unreduced(&b).unwrap().matrix.det().unwrap().is_unit());
    }

    #[test]
    fn trivial_point_gives_permutation(b in arb_cc_braid(5, 8, 3)) {
        let z = Torus::from_angles(&vec![0.0; b.mu()]);
        let m = evaluate(&gassner_unreduced(&b).unwrap().matrix, &z);
        let p = b.induced_permutation();
        for i in 0..b.strands() {
            for j in 0..b.strands() {
                let expected = if p.apply(i) == j { 1.0 } else { 0.0 };
                prop_assert!((m[(i, j)] - Complex::new(expected, 0.0)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn inverse_gives_identity(b in arb_cc_braid(4, 8, 2)) {
        let bb = b.compose(&b.invert()).unwrap();
        prop_assert_eq!(gassner_unreduced(&bb).unwrap().matrix, PolyMat::identity(b.mu(), b.strands()));
        prop_assert!(beta_monomial(&bb).is_one());
    }

    #[test]
    fn fixed_vector_at_generic_points(b in arb_cc_braid(4, 8, 2), a in prop::collection::vec(0.3f64..2.8, 2)) {
        let z = Torus::from_angles(&a[..b.mu()]);
        prop_assert!(fixed_vector_residual(&b, &z).unwrap() < 1e-9);
        if let Ok(ok) = fixed_vector_check(&b, &z) {
            prop_assert!(ok);
        }
    }
}
