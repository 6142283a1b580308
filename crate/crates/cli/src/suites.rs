//! Randomized and fixed-case checks shared by `verify` and the acceptance
//! harness. Each returns one [`Check`]; nothing panics on a failed identity.

use std::f64::consts::{FRAC_PI_2, PI};

use alexander::{
    alexander_poly, casson_lin_defined, potential, reducible_nonabelian_exists, symmetry_holds, torres_check,
};
use braidcore::{ColoredBraidWord, Coloring};
use cassonlin::{
    casson_lin, crossing_delta, find_fixed_classes, long_check_all_signs, reducibility_probe, CassonLinError,
    SolverOptions,
};
use freegroup::{action_images, fox_derivative, FreeWord, GroupRingElement};
use gassner::{gassner_blocks, gassner_fox, identity_suite};
use laurent::{BigInt, Poly, Torus, C64};
use rand::Rng;
use signature::library::{self, LibraryEntry};
use signature::{parity_check, signature_nullity};

use crate::random::{random_angles, random_cc_braid, random_two_component, random_word};
use crate::report::{Budget, Check};
use crate::signature_formula::signature_formula_point;

/// Corpus bounds for the exact identities: strands, word length, colors.
pub const CORPUS: (usize, usize, usize) = (5, 12, 3);
const ANGLE_MARGIN: f64 = 0.2;
const MAX_ATTEMPTS: usize = 60;

fn braid(colors: &[usize], letters: &[i32]) -> ColoredBraidWord {
    let mu = *colors.iter().max().unwrap();
    ColoredBraidWord::new(colors.len(), Coloring::new(colors.to_vec(), mu).unwrap(), letters.to_vec()).unwrap()
}

fn inline(b: &ColoredBraidWord) -> String {
    format!("colors {:?} word {:?}", b.bottom().colors(), b.letters())
}

/// `w - 1 = Σ_j (∂w/∂x_j)(x_j - 1)` in the integral group ring.
fn fundamental_formula_holds(w: &FreeWord, n: usize) -> bool {
    let one = GroupRingElement::one();
    let mut lhs = GroupRingElement::zero();
    for j in 1..=n {
        let xj = &GroupRingElement::from_word(FreeWord::gen(j)) - &one;
        lhs = &lhs + &(&fox_derivative(w, j) * &xj);
    }
    lhs == &GroupRingElement::from_word(w.clone()) - &one
}

/// The exact Gassner identities on random color-preserving braids, plus the
/// fundamental formula of Fox calculus on the images of the generators.
pub fn identity_battery(rng: &mut impl Rng, count: usize, budget: Budget) -> Check {
    let (max_n, max_len, max_mu) = CORPUS;
    let (mut ran, mut failures) = (0, Vec::new());
    while ran < count && !budget.exhausted() {
        let b = random_cc_braid(rng, max_n, max_len, max_mu);
        ran += 1;
        match identity_suite(&b) {
            Ok(r) if r.all_passed() => {}
            Ok(r) => {
                let names: Vec<&str> = r.failures().iter().map(|c| c.name).collect();
                failures.push(format!("{} fails {names:?}", inline(&b)));
            }
            Err(e) => failures.push(format!("{}: {e}", inline(&b))),
        }
        if let Some(w) = action_images(&b).iter().find(|w| !fundamental_formula_holds(w, b.strands())) {
            failures.push(format!("{}: fundamental formula fails on {w:?}", inline(&b)));
        }
    }
    Check::from_cases(
        "Gassner sums, minor exchange, reduced determinant, double twist, g-basis minors, fundamental formula",
        "exact",
        ran,
        count,
        &failures,
    )
}

/// `B(β_1 β_2) = B(β_1) B(β_2)`, and the Fox and block-product paths agree.
pub fn gassner_products(rng: &mut impl Rng, count: usize, budget: Budget) -> Check {
    let (max_n, max_len, max_mu) = CORPUS;
    let (mut ran, mut failures) = (0, Vec::new());
    while ran < count && !budget.exhausted() {
        let b1 = random_cc_braid(rng, max_n, max_len, max_mu);
        let tail = random_word(rng, b1.strands(), max_len);
        let b2 = ColoredBraidWord::new(b1.strands(), b1.top(), tail).expect("letters fit the strands");
        let b12 = b1.compose(&b2).expect("b2 starts where b1 ends");
        ran += 1;
        let product = gassner_fox(&b1).checked_mul(&gassner_fox(&b2)).expect("square matrices");
        if gassner_fox(&b12) != product {
            failures.push(format!("multiplicativity: {} then {:?}", inline(&b1), b2.letters()));
        }
        if gassner_fox(&b12) != gassner_blocks(&b12) {
            failures.push(format!("Fox vs blocks: {}", inline(&b12)));
        }
    }
    Check::from_cases("Gassner multiplicativity and Fox/block agreement", "exact", ran, count, &failures)
}

/// Hopf link potential is a unit monomial; trefoil `Δ ≐ t^2 - t + 1`.
pub fn potential_examples() -> Check {
    let mut failures = Vec::new();
    for (name, b) in [("Hopf", braid(&[1, 2], &[1, 1])), ("one-colored Hopf", braid(&[1, 1], &[1, 1]))] {
        match potential(&b) {
            Ok(p) if p.as_polynomial().is_some_and(Poly::is_unit) => {}
            Ok(p) => failures.push(format!("{name} potential {p}")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    // stored exponents are doubled
    let expected = Poly::from_terms(1, [(vec![4], BigInt::from(1)), (vec![2], BigInt::from(-1)), (vec![0], BigInt::from(1))]);
    match alexander_poly(&braid(&[1, 1], &[1, 1, 1])) {
        Ok(d) if d.equal_up_to_units(&expected) => {}
        Ok(d) => failures.push(format!("trefoil Alexander polynomial {d}")),
        Err(e) => failures.push(format!("trefoil: {e}")),
    }
    Check::from_cases("Hopf potential is a unit, trefoil Alexander polynomial", "exact", 3, 3, &failures)
}

/// `∇(t^{-1}) = (-1)^ν ∇(t)` on random color-preserving braids.
pub fn potential_symmetry(rng: &mut impl Rng, count: usize, budget: Budget) -> Check {
    let (max_n, max_len, max_mu) = CORPUS;
    let (mut ran, mut failures) = (0, Vec::new());
    while ran < count && !budget.exhausted() {
        let b = random_cc_braid(rng, max_n, max_len, max_mu);
        ran += 1;
        match symmetry_holds(&b) {
            Ok(true) => {}
            Ok(false) => failures.push(inline(&b)),
            Err(e) => failures.push(format!("{}: {e}", inline(&b))),
        }
    }
    Check::from_cases("potential symmetry under t -> 1/t", "exact", ran, count, &failures)
}

/// `|Δ_L(1, 1)| = |lk|` and the one-variable Torres condition on random
/// two-component closures.
pub fn torres(rng: &mut impl Rng, count: usize, budget: Budget) -> Check {
    let (max_n, max_len, _) = CORPUS;
    let (mut ran, mut failures) = (0, Vec::new());
    while ran < count && !budget.exhausted() {
        let b = random_two_component(rng, max_n, max_len);
        ran += 1;
        match torres_check(&b) {
            Ok(r) if r.passed() => {}
            Ok(r) => failures.push(format!("{}: {r:?}", inline(&b))),
            Err(e) => failures.push(format!("{}: {e}", inline(&b))),
        }
    }
    Check::from_cases("Torres conditions on two-component closures", "exact", ran, count, &failures)
}

/// Finite-difference linearization at every abelian tuple equals the
/// permutation matrix plus the evaluated Gassner matrix.
pub fn long_checks(rng: &mut impl Rng, count: usize, budget: Budget) -> Check {
    let (max_n, max_len, max_mu) = CORPUS;
    let (mut ran, mut failures) = (0, Vec::new());
    let mut worst = 0.0f64;
    while ran < count && !budget.exhausted() {
        let b = random_cc_braid(rng, max_n, max_len, max_mu);
        let alpha = random_angles(rng, b.mu(), ANGLE_MARGIN);
        ran += 1;
        match long_check_all_signs(&b, &alpha) {
            Ok(reports) => {
                for r in reports {
                    worst = worst.max(r.permutation_error).max(r.gassner_error).max(r.structure_error);
                    if !r.passed {
                        failures.push(format!("{} at {alpha:?}, eps {:?}", inline(&b), r.eps));
                    }
                }
            }
            Err(e) => failures.push(format!("{}: {e}", inline(&b))),
        }
    }
    let mut check = Check::from_cases(
        "linearization at abelian tuples is permutation plus Gassner",
        "relative error < 1e-6, step 1e-5",
        ran,
        count,
        &failures,
    );
    check.detail.push_str(&format!(", worst relative error {worst:.1e}"));
    check
}

fn h_at(b: &ColoredBraidWord, alpha: &[f64], opts: &SolverOptions) -> Result<i64, CassonLinError> {
    casson_lin(b, alpha, opts).map(|r| r.h)
}

/// Hopf link `h = 0`, unknot words without irreducible classes, and the
/// trefoil calibration `h(π/2) = -σ(-1)/2` with exactly one class.
pub fn casson_lin_base_cases(rng: &mut impl Rng, hopf_points: usize, opts: &SolverOptions) -> Check {
    let mut failures = Vec::new();
    let hopf = braid(&[1, 2], &[1, 1]);
    for _ in 0..hopf_points {
        let alpha = random_angles(rng, 2, ANGLE_MARGIN);
        match casson_lin(&hopf, &alpha, opts) {
            Ok(r) if r.h == 0 && r.classes.is_empty() => {}
            Ok(r) => failures.push(format!("Hopf at {alpha:?}: h = {}, {} classes", r.h, r.classes.len())),
            Err(e) => failures.push(format!("Hopf at {alpha:?}: {e}")),
        }
    }
    let unknots = [
        braid(&[1, 1], &[1]),
        braid(&[1, 1], &[-1]),
        braid(&[1, 1, 1], &[1, -2]),
        braid(&[1, 1, 1], &[-1, -2]),
    ];
    for b in &unknots {
        for alpha in [0.7, 1.3, 2.4] {
            match find_fixed_classes(b, &[alpha], opts) {
                Ok((classes, _)) if classes.is_empty() => {}
                Ok((classes, _)) => failures.push(format!("unknot {} at {alpha}: {} classes", inline(b), classes.len())),
                Err(e) => failures.push(format!("unknot {} at {alpha}: {e}", inline(b))),
            }
        }
    }
    let trefoil = library::trefoil();
    let sigma = signature_nullity(&trefoil.system, &Torus::from_angles(&[FRAC_PI_2])).map(|p| p.sigma);
    match (casson_lin(&trefoil.braid, &[FRAC_PI_2], opts), sigma) {
        (Ok(r), Ok(sigma)) if r.classes.len() == 1 && 2 * r.h == -sigma => {}
        (Ok(r), Ok(sigma)) => {
            failures.push(format!("trefoil at pi/2: {} classes, h = {}, sigma = {sigma}", r.classes.len(), r.h))
        }
        (Err(e), _) => failures.push(format!("trefoil: {e}")),
        (_, Err(e)) => failures.push(format!("trefoil signature: {e}")),
    }
    let cases = hopf_points + 3 * unknots.len() + 1;
    Check::from_cases("Hopf h = 0, unknots have no classes, trefoil calibration", "exact integers", cases, cases, &failures)
}

/// A word together with Markov-equivalent words: stabilizations of both
/// signs and conjugates of them.
pub fn markov_family(b: &ColoredBraidWord) -> Vec<ColoredBraidWord> {
    let plus = b.markov_stabilize(1).expect("color-preserving");
    let minus = b.markov_stabilize(-1).expect("color-preserving");
    let conjugate = minus.rotate(1).expect("rotation of a color-preserving word");
    let twice = plus.markov_stabilize(-1).and_then(|w| w.rotate(2)).expect("color-preserving");
    vec![b.clone(), plus, conjugate, twice]
}

/// Identical `h` at identical `α` over Markov-equivalent words of the Hopf
/// link and the trefoil.
pub fn markov_invariance(opts: &SolverOptions) -> Check {
    let cases: [(ColoredBraidWord, Vec<Vec<f64>>); 2] = [
        (braid(&[1, 2], &[1, 1]), vec![vec![0.7, 2.1], vec![1.4, 0.5], vec![2.4, 1.3]]),
        (braid(&[1, 1], &[1, 1, 1]), vec![vec![0.9], vec![FRAC_PI_2], vec![2.5]]),
    ];
    let (mut ran, mut failures) = (0, Vec::new());
    for (b, alphas) in &cases {
        let family = markov_family(b);
        for alpha in alphas {
            ran += 1;
            let hs: Result<Vec<i64>, _> = family.iter().map(|w| h_at(w, alpha, opts)).collect();
            match hs {
                Ok(hs) if hs.iter().all(|h| *h == hs[0]) => {}
                Ok(hs) => failures.push(format!("{} at {alpha:?}: {hs:?}", inline(b))),
                Err(e) => failures.push(format!("{} at {alpha:?}: {e}", inline(b))),
            }
        }
    }
    Check::from_cases("h is a Markov invariant", "exact integers", ran, ran, &failures)
}

/// Predicted and observed change of `h` under `σ_1 σ_2^2 -> σ_1^3 σ_2^2`
/// (colors `1, 1, 2`) at random `α` meeting the preconditions.
pub fn crossing_change(rng: &mut impl Rng, points: usize, opts: &SolverOptions) -> Check {
    let b = braid(&[1, 1, 2], &[1, 2, 2]);
    let (mut ran, mut skipped, mut failures, mut seen) = (0, 0, Vec::new(), Vec::new());
    for _ in 0..MAX_ATTEMPTS {
        if ran == points {
            break;
        }
        let alpha = random_angles(rng, 2, ANGLE_MARGIN);
        match crossing_delta(&b, &alpha, opts) {
            Ok(r) => {
                ran += 1;
                seen.push((r.h_before, r.h_after));
                if r.predicted != r.observed || r.max_imaginary >= 1e-9 {
                    failures.push(format!("at {alpha:?}: predicted {} observed {}", r.predicted, r.observed));
                }
            }
            Err(CassonLinError::PreconditionViolated(_) | CassonLinError::NotDefinedHere) => skipped += 1,
            Err(e) => failures.push(format!("at {alpha:?}: {e}")),
        }
    }
    let mut check = Check::from_cases("crossing change formula for h", "exact integers", ran, points, &failures);
    check.detail.push_str(&format!(", (h before, h after) = {seen:?}, {skipped} points failed the preconditions"));
    check
}

/// `h_L(α) = -½(σ(ω_1, ω_2) + σ(ω_1, ω_2^{-1}))` for the linking-number-one
/// family `σ_1^{2m+1} σ_2^2`, at random `α` where `h` is defined and every
/// signature evaluation is well separated from zero.
pub fn signature_formula_family(rng: &mut impl Rng, m: usize, points: usize, opts: &SolverOptions) -> Check {
    let LibraryEntry { system, braid: b } = library::torus_hopf_sum(m);
    let (mut ran, mut skipped, mut failures, mut seen) = (0, 0, Vec::new(), Vec::new());
    for _ in 0..MAX_ATTEMPTS {
        if ran == points {
            break;
        }
        let alpha = random_angles(rng, 2, ANGLE_MARGIN);
        if !casson_lin_defined(&b, &alpha).unwrap_or(false) {
            skipped += 1;
            continue;
        }
        match signature_formula_point(&b, &system, &alpha, opts) {
            Ok(row) if !row.well_separated => skipped += 1,
            Ok(row) => {
                ran += 1;
                seen.push(row.h);
                if !(row.equal && row.four_term_agrees && row.parity_holds) {
                    failures.push(format!("{row:?}"));
                }
            }
            Err(e) => failures.push(format!("at {alpha:?}: {e}")),
        }
    }
    let mut check = Check::from_cases(
        format!("h equals minus half the signature sum, m = {m}"),
        "exact; eigenvalue gap >= 1e3 tau",
        ran,
        points,
        &failures,
    );
    check.detail.push_str(&format!(", h values {seen:?}, {skipped} points not generic"));
    check
}

/// `h` unchanged under `10^{-3}` perturbations of `α` when the invariant is
/// defined along the whole segment.
pub fn local_constancy(rng: &mut impl Rng, probes: usize, opts: &SolverOptions) -> Check {
    let links = [
        library::trefoil().braid,
        library::torus_knot(2).braid,
        library::torus_hopf_sum(1).braid,
        braid(&[1, 2], &[1, 1]),
    ];
    let defined_along = |b: &ColoredBraidWord, a: &[f64], d: &[f64]| {
        (0..=10).all(|k| {
            let s = f64::from(k) / 10.0;
            let p: Vec<f64> = a.iter().zip(d).map(|(x, y)| x + s * y).collect();
            casson_lin_defined(b, &p).unwrap_or(false)
        })
    };
    let (mut ran, mut failures) = (0, Vec::new());
    for b in &links {
        let zero = vec![0.0; b.mu()];
        let base = (0..MAX_ATTEMPTS)
            .map(|_| random_angles(rng, b.mu(), ANGLE_MARGIN))
            .find(|a| defined_along(b, a, &zero))
            .expect("generic angles exist");
        let h0 = match h_at(b, &base, opts) {
            Ok(h) => h,
            Err(e) => {
                failures.push(format!("{} at {base:?}: {e}", inline(b)));
                continue;
            }
        };
        let mut done = 0;
        for _ in 0..MAX_ATTEMPTS {
            if done == probes {
                break;
            }
            let delta: Vec<f64> = (0..b.mu()).map(|_| rng.gen_range(-1e-3..1e-3)).collect();
            if !defined_along(b, &base, &delta) {
                continue;
            }
            done += 1;
            let moved: Vec<f64> = base.iter().zip(&delta).map(|(x, y)| x + y).collect();
            match h_at(b, &moved, opts) {
                Ok(h) if h == h0 => {}
                Ok(h) => failures.push(format!("{} at {moved:?}: {h} vs {h0}", inline(b))),
                Err(e) => failures.push(format!("{} at {moved:?}: {e}", inline(b))),
            }
        }
        ran += done;
    }
    Check::from_cases("h is locally constant", "exact integers", ran, probes * links.len(), &failures)
}

/// Reducible non-abelian representations exist exactly at square roots of
/// Alexander roots, and no irreducible fixed points sit near abelian tuples
/// away from them.
pub fn reducibility(rng: &mut impl Rng, non_roots: usize, opts: &SolverOptions) -> Check {
    let trefoil = library::trefoil().braid;
    let delta = alexander_poly(&trefoil).expect("trefoil Alexander polynomial");
    let mut failures = Vec::new();
    for sign in [1.0, -1.0] {
        let lambda = C64::from_polar(1.0, sign * PI / 6.0);
        let value = delta.evaluate_roots(&[lambda]).norm();
        if value >= 1e-9 || !reducible_nonabelian_exists(&trefoil, &[lambda]).unwrap_or(false) {
            failures.push(format!("root e^(i {sign} pi/6) not detected, |Delta| = {value:.1e}"));
        }
    }
    let mut tested = 0;
    while tested < non_roots {
        let modulus = if tested % 2 == 0 { 1.0 } else { rng.gen_range(0.5..2.0) };
        let lambda = C64::from_polar(modulus, rng.gen_range(-PI..PI));
        if delta.evaluate_roots(&[lambda]).norm() < 1e-3 || (lambda - C64::new(1.0, 0.0)).norm() < 1e-3 {
            continue;
        }
        tested += 1;
        if reducible_nonabelian_exists(&trefoil, &[lambda]).unwrap_or(true) {
            failures.push(format!("false positive at {lambda}"));
        }
    }
    let probes: [(ColoredBraidWord, Vec<f64>); 3] = [
        (trefoil.clone(), vec![1.0]),
        (trefoil, vec![2.2]),
        (library::torus_hopf_sum(1).braid, vec![0.9, 1.7]),
    ];
    let mut probed = 0;
    for (b, alpha) in &probes {
        for mask in 0..1usize << b.mu() {
            let eps: Vec<i32> = (0..b.mu()).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect();
            probed += 1;
            match reducibility_probe(b, alpha, &eps, 0.05, opts) {
                Ok(r) if r.irreducible_nearby == 0 => {}
                Ok(r) => failures.push(format!("{} at {alpha:?} eps {eps:?}: {} nearby", inline(b), r.irreducible_nearby)),
                Err(e) => failures.push(format!("{} at {alpha:?} eps {eps:?}: {e}", inline(b))),
            }
        }
    }
    let cases = 2 + non_roots + probed;
    Check::from_cases(
        "reducible representations exactly at Alexander roots; none irreducible nearby elsewhere",
        "|Delta| < 1e-9 at roots; probe radius 0.05",
        cases,
        cases,
        &failures,
    )
}

/// The mod-4 parity relation for every library Seifert system at a few
/// generic points.
pub fn signature_parity() -> Check {
    let (mut ran, mut failures) = (0, Vec::new());
    for entry in library::all() {
        for a in [0.45, 1.1, 1.9, 2.6] {
            let alpha = vec![a; entry.system.mu()];
            let alpha: Vec<f64> = alpha.iter().enumerate().map(|(k, x)| x + 0.17 * k as f64).collect();
            let z = Torus::from_angles(&alpha);
            ran += 1;
            match parity_check(&entry.system, &entry.braid, &z) {
                Ok(r) if r.holds => {}
                Ok(r) => failures.push(format!("{} at {alpha:?}: {r:?}", entry.system.meta.name)),
                Err(signature::SignatureError::PreconditionViolated(_)) => ran -= 1,
                Err(e) => failures.push(format!("{} at {alpha:?}: {e}", entry.system.meta.name)),
            }
        }
    }
    Check::from_cases("signature parity relation on library links", "mod 4", ran, 1, &failures)
}
