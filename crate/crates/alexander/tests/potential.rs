use alexander::*;
use braidcore::{ColoredBraidWord, Coloring};
use gassner::{beta_monomial, gassner_unreduced, minor_det, prefix_monomials};
use laurent::{Complex, Poly, Torus};
use num_bigint::BigInt;
use proptest::prelude::*;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6};

fn word(colors: &[usize], letters: &[i32]) -> ColoredBraidWord {
    let mu = *colors.iter().max().unwrap();
    ColoredBraidWord::new(colors.len(), Coloring::new(colors.to_vec(), mu).unwrap(), letters.to_vec()).unwrap()
}

fn poly1(coeffs: &[(i32, i64)]) -> Poly {
    Poly::from_terms(1, coeffs.iter().map(|&(e, c)| (vec![2 * e], BigInt::from(c))))
}

/// Δ from a corner minor of the unreduced matrix: `B(β,1,1)` when one
/// color is used, `B(β,1,1) / (t_{c_1} - 1)` otherwise.
fn fox_minor_alexander(b: &ColoredBraidWord) -> Poly {
    let m = gassner_unreduced(b).unwrap().matrix;
    let corner = minor_det(&m, 0, 0);
    let d = if b.mu() == 1 {
        corner
    } else {
        let t = Poly::var(b.mu(), b.bottom().color(0) - 1);
        corner.exact_divide(&(t - Poly::one(b.mu()))).unwrap()
    };
    d.normalized().1
}

#[test]
fn hopf_link() {
    let hopf = word(&[1, 2], &[1, 1]);
    let p = potential(&hopf).unwrap();
    assert_eq!(p.as_polynomial().unwrap(), &Poly::one(2));
    assert!(alexander_poly(&hopf).unwrap().is_one());
    let negative = word(&[1, 2], &[-1, -1]);
    assert_eq!(potential(&negative).unwrap().as_polynomial().unwrap(), &-Poly::one(2));
    // one color: ∇ is the Conway polynomial divided by z = t - t^{-1}
    let plain = word(&[1, 1], &[1, 1]);
    assert!(potential(&plain).unwrap().as_polynomial().unwrap().is_one());
    assert_eq!(alexander_poly(&plain).unwrap(), poly1(&[(0, 1), (1, -1)]).normalized().1);
}

#[test]
fn trefoil() {
    let b = word(&[1, 1], &[1, 1, 1]);
    let p = potential(&b).unwrap();
    assert!(p.has_conway_denominator());
    assert_eq!(p.numerator(), &poly1(&[(2, 1), (0, -1), (-2, 1)]));
    assert_eq!(alexander_poly(&b).unwrap(), poly1(&[(0, 1), (1, -1), (2, 1)]));
    assert!(alexander_poly(&b).unwrap().equal_up_to_units(&poly1(&[(1, 1), (0, -1), (-1, 1)])));
}

#[test]
fn unknots() {
    let one_strand = ColoredBraidWord::identity(Coloring::uniform(1));
    let p = potential(&one_strand).unwrap();
    assert!(p.has_conway_denominator());
    assert!(p.numerator().is_one());
    assert!(alexander_poly(&one_strand).unwrap().is_one());
    for letters in [vec![1], vec![-1], vec![1, 2], vec![1, -2, -3]] {
        let n = letters.len() + 1;
        let b = ColoredBraidWord::new(n, Coloring::uniform(n), letters).unwrap();
        assert_eq!(potential(&b).unwrap(), p);
    }
}

#[test]
fn torres_examples() {
    let cases = [(word(&[1, 2], &[1, 1]), 1), (word(&[1, 1, 2], &[1, 1, 1, 2, 2]), 1), (word(&[1, 2], &[1, 1, 1, 1]), 2)];
    for (b, lk) in cases {
        let r = torres_check(&b).unwrap();
        assert_eq!(r.linking, lk);
        assert!(r.passed(), "{r:?}");
    }
    assert!(matches!(
        torres_check(&word(&[1, 1], &[1, 1, 1])),
        Err(AlexanderError::WrongComponentCount { expected: 2, found: 1 })
    ));
}

#[test]
fn reducible_criterion() {
    let trefoil = word(&[1, 1], &[1, 1, 1]);
    let root = Complex::from_polar(1.0, FRAC_PI_6);
    assert!(reducible_nonabelian_exists(&trefoil, &[root]).unwrap());
    assert!(reducible_nonabelian_exists(&trefoil, &[root.conj()]).unwrap());
    assert!(!reducible_nonabelian_exists(&trefoil, &[Complex::from_polar(1.0, 0.4)]).unwrap());
    // off the unit circle too: λ^2 a root of t^2 - t + 1
    let hopf = word(&[1, 2], &[1, 1]);
    let l = [Complex::new(0.3, 0.8), Complex::new(2.0, -1.0)];
    assert!(!reducible_nonabelian_exists(&hopf, &l).unwrap());
    let unknot = ColoredBraidWord::identity(Coloring::uniform(1));
    assert!(!reducible_nonabelian_exists(&unknot, &[Complex::new(0.0, 1.0)]).unwrap());
    assert!(reducible_nonabelian_exists(&trefoil, &[Complex::new(1.0, 0.0)]).is_err());
}

#[test]
fn definedness() {
    let hopf = word(&[1, 2], &[1, 1]);
    assert!(casson_lin_defined(&hopf, &[0.3, 2.9]).unwrap());
    let trefoil = word(&[1, 1], &[1, 1, 1]);
    assert!(!casson_lin_defined(&trefoil, &[FRAC_PI_6]).unwrap());
    assert!(casson_lin_defined(&trefoil, &[FRAC_PI_2]).unwrap());
    assert!(!casson_lin_defined(&trefoil, &[5.0 * FRAC_PI_6]).unwrap());
}

#[test]
fn trefoil_evaluation() {
    let trefoil = word(&[1, 1], &[1, 1, 1]);
    let p = potential(&trefoil).unwrap();
    // D(e^{iα}) = 2cos 2α - 1; at α = π/2, D = -3 and ∇ = D / (2i)
    let z = Torus::from_angles(&[FRAC_PI_2]);
    let v = p.evaluate_half(&z);
    assert!((v - Complex::new(0.0, 1.5)).norm() < 1e-12);
    let z = Torus::from_angles(&[FRAC_PI_3 / 2.0]);
    assert!(p.evaluate_half(&z).norm() < 1e-12);
}

fn arb_cc_braid(max_n: usize, max_len: usize, max_mu: usize) -> impl Strategy<Value = ColoredBraidWord> {
    (2..=max_n)
        .prop_flat_map(move |n| {
            (Just(n), prop::collection::vec((1..n as i32, any::<bool>()), 0..=max_len), prop::collection::vec(1..=max_mu, n))
        })
        .prop_map(|(n, v, labels)| {
            let letters = v.into_iter().map(|(i, p)| if p { i } else { -i }).collect();
            ColoredBraidWord::colored_by_cycles(n, letters, &labels).unwrap()
        })
}

fn uniform(b: &ColoredBraidWord) -> ColoredBraidWord {
    ColoredBraidWord::new(b.strands(), Coloring::uniform(b.strands()), b.letters().to_vec()).unwrap()
}

fn components_colored(b: &ColoredBraidWord) -> ColoredBraidWord {
    let labels: Vec<usize> = (0..b.strands()).collect();
    ColoredBraidWord::colored_by_cycles(b.strands(), b.letters().to_vec(), &labels).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matches_fox_minor_oracle(b in arb_cc_braid(4, 10, 3)) {
        let delta = alexander_poly(&b).unwrap();
        let oracle = fox_minor_alexander(&b);
        if oracle.is_zero() {
            prop_assert!(delta.is_zero());
        } else {
            prop_assert!(delta.equal_up_to_units(&oracle), "{} vs {}", delta, oracle);
        }
    }

    #[test]
    fn potential_symmetry(b in arb_cc_braid(4, 10, 3)) {
        prop_assert!(symmetry_holds(&b).unwrap());
    }

    #[test]
    fn potential_is_a_markov_invariant(b in arb_cc_braid(4, 8, 3), k in 0usize..16, sign in any::<bool>()) {
        let p = potential(&b).unwrap();
        prop_assert_eq!(&potential(&b.rotate(k).unwrap()).unwrap(), &p);
        let stabilized = b.markov_stabilize(if sign { 1 } else { -1 }).unwrap();
        prop_assert_eq!(&potential(&stabilized).unwrap(), &p);
        prop_assert_eq!(potential_literal(&stabilized).unwrap(), potential_literal(&b).unwrap());
    }

    #[test]
    fn conway_normalization(b in arb_cc_braid(4, 10, 1)) {
        let b = uniform(&b);
        let nu = b.closure().unwrap().num_components();
        let at_one: BigInt = potential(&b).unwrap().times_conway_factor().terms().values().sum();
        match nu {
            1 => prop_assert_eq!(at_one, BigInt::from(1)),
            _ => prop_assert_eq!(at_one, BigInt::from(0)),
        }
        if nu == 2 {
            let lk = b.closure().unwrap().linking(0, 1);
            let p = potential(&b).unwrap();
            let value: BigInt = p.as_polynomial().unwrap().terms().values().sum();
            prop_assert_eq!(value, BigInt::from(lk));
        }
    }

    #[test]
    fn gassner_corner_minor_formula(b in arb_cc_braid(4, 8, 3)) {
        // (t_{c_1}^2 - 1) ∇_lit = (-1)^{n+1} ⟨β⟩ t_{c_1}⋯t_{c_n} g(B(β,1,1))
        let c = b.bottom();
        let (mu, n) = (c.mu(), b.strands());
        let lit = potential_literal(&b).unwrap();
        let t1 = Poly::var(mu, c.color(0) - 1);
        let lhs = if lit.has_conway_denominator() {
            &t1 * lit.numerator()
        } else {
            &(&(&t1 * &t1) - &Poly::one(mu)) * lit.numerator()
        };
        let corner = minor_det(&gassner_unreduced(&b).unwrap().matrix, 0, 0);
        let mut rhs = &(&beta_monomial(&b) * &prefix_monomials(c)[n]) * &corner.double_exponents();
        if n % 2 == 0 {
            rhs = -rhs;
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_reality(b in arb_cc_braid(4, 8, 2), a in prop::collection::vec(0.2f64..2.9, 2)) {
        let p = potential(&b).unwrap();
        let z = Torus::from_angles(&a[..b.mu()]);
        let v = p.evaluate_half(&z);
        let tol = 1e-9 * (1.0 + p.numerator().coeff_abs_sum());
        if b.closure().unwrap().num_components() % 2 == 0 {
            prop_assert!(v.im.abs() < tol);
        } else {
            prop_assert!(v.re.abs() < tol);
        }
    }

    #[test]
    fn diagonal_specialization(b in arb_cc_braid(4, 10, 1)) {
        let ordered = components_colored(&b);
        prop_assume!(ordered.mu() >= 2);
        prop_assert!(diagonal_check(&ordered).unwrap());
    }

    #[test]
    fn torres_on_two_component_closures(b in arb_cc_braid(4, 10, 1)) {
        let ordered = components_colored(&b);
        prop_assume!(ordered.mu() == 2);
        let r = torres_check(&ordered).unwrap();
        prop_assert!(r.passed(), "{:?}", r);
    }
}
