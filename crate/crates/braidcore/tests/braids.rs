use braidcore::{ColoredBraidWord, Coloring, Permutation};
use proptest::prelude::*;

fn word(colors: &[usize], letters: &[i32]) -> ColoredBraidWord {
    let mu = *colors.iter().max().unwrap();
    ColoredBraidWord::new(colors.len(), Coloring::new(colors.to_vec(), mu).unwrap(), letters.to_vec()).unwrap()
}

#[test]
fn composition_concatenates() {
    let a = word(&[1, 1, 1, 1], &[1]);
    let b = word(&[1, 1, 1, 1], &[3]);
    assert_eq!(a.compose(&b).unwrap().letters(), &[1, 3]);
    let id = ColoredBraidWord::identity(a.top());
    assert_eq!(a.compose(&id).unwrap(), a);
    let inv = a.invert();
    assert!(a.compose(&inv).unwrap().induced_permutation().is_identity());
}

#[test]
fn composition_checks_colors() {
    let a = word(&[1, 2], &[1]);
    assert!(a.compose(&a).is_err());
    assert!(a.compose(&a.invert()).is_ok());
}

#[test]
fn induced_permutations() {
    assert_eq!(word(&[1, 1], &[1]).induced_permutation(), Permutation::from_images(vec![1, 0]));
    assert!(word(&[1, 1], &[1, 1]).induced_permutation().is_identity());
    let p = word(&[1, 1, 1], &[1, 2]).induced_permutation();
    assert_eq!(p.cycles().len(), 1);
    // strand at 0 crosses to 1 then to 2
    assert_eq!(p.images(), &[2, 0, 1]);
}

#[test]
fn inclusion_and_stabilization() {
    let id = ColoredBraidWord::identity(Coloring::uniform(1));
    let s = id.markov_stabilize(1).unwrap();
    assert_eq!((s.strands(), s.letters()), (2, &[1][..]));
    assert_eq!(s.closure().unwrap().num_components(), 1);
    let ss = s.markov_stabilize(-1).unwrap();
    assert_eq!((ss.strands(), ss.letters()), (3, &[-2, 1][..]));

    let b = word(&[1, 2], &[1, 1]);
    let inc = b.include_strand(2).unwrap();
    assert_eq!(inc.bottom().colors(), &[1, 2, 2]);
    assert!(b.include_strand(3).is_err());
}

#[test]
fn slides() {
    let s = word(&[1, 1], &[1]);
    assert_eq!(ColoredBraidWord::markov_slide(&s, &s).unwrap().letters(), &[1, 1]);
    let id = ColoredBraidWord::identity(Coloring::uniform(2));
    assert_eq!(ColoredBraidWord::markov_slide(&s, &id).unwrap(), s);
}

#[test]
fn closures() {
    let hopf = word(&[1, 2], &[1, 1]).closure().unwrap();
    assert_eq!(hopf.num_components(), 2);
    assert_eq!(hopf.linking(0, 1), 1);
    assert_eq!(hopf.sublink_linking(1, 2), 1);

    let trefoil = word(&[1, 1], &[1, 1, 1]).closure().unwrap();
    assert_eq!(trefoil.num_components(), 1);
    assert_eq!(trefoil.linking_matrix(), &[vec![0]]);

    let l = word(&[1, 1, 2], &[1, 1, 1, 2, 2]).closure().unwrap();
    assert_eq!(l.num_components(), 2);
    assert_eq!(l.linking(0, 1), 1);
    assert_eq!(l.components()[1].color, 2);
    assert_eq!(l.linking_with_color(0, 2), 1);

    let neg = word(&[1, 2], &[-1, -1]).closure().unwrap();
    assert_eq!(neg.linking(0, 1), -1);
}

#[test]
fn coloring_by_cycles() {
    let b = ColoredBraidWord::colored_by_cycles(3, vec![1, 1, 1, 2, 2], &[5, 9, 7]).unwrap();
    assert_eq!(b.bottom().colors(), &[1, 1, 2]);
    assert!(b.is_color_preserving());
}

#[test]
fn restriction_to_a_sublink() {
    let b = word(&[1, 1, 2], &[1, 1, 1, 2, 2]);
    let k = b.restrict_to_colors(&[1]).unwrap();
    assert_eq!((k.strands(), k.letters()), (2, &[1, 1, 1][..]));
    let m = b.restrict_to_colors(&[2]).unwrap();
    assert_eq!((m.strands(), m.letters()), (1, &[][..]));
    // a deleted strand to the left lowers the index of a kept crossing
    let c = word(&[1, 2, 1], &[2, 1, 1, -2]);
    assert_eq!(c.restrict_to_colors(&[1]).unwrap().letters(), &[1, 1]);
    assert_eq!(word(&[2, 1, 1], &[2, 1, 2, 2, -1]).restrict_to_colors(&[1]).unwrap().letters(), &[1]);
}

#[test]
fn over_strand_colors() {
    assert_eq!(word(&[1, 2], &[1, 1]).over_strand_colors(), vec![(1, 1), (2, 1)]);
    assert_eq!(word(&[1, 1], &[1]).over_strand_colors(), vec![(1, 1)]);
    assert_eq!(word(&[1, 2], &[-1, -1]).over_strand_colors(), vec![(2, -1), (1, -1)]);
}

/// Random word, colored constantly along the cycles of its permutation.
fn arb_cc_braid() -> impl Strategy<Value = ColoredBraidWord> {
    (2usize..=5)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(1usize..=3, n),
                prop::collection::vec((1..n as i32, any::<bool>()), 0..12),
            )
        })
        .prop_map(|(n, labels, letters)| {
            let letters: Vec<i32> = letters.into_iter().map(|(i, p)| if p { i } else { -i }).collect();
            ColoredBraidWord::colored_by_cycles(n, letters, &labels).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn color_preserving_permutation_respects_colors(b in arb_cc_braid()) {
        let p = b.induced_permutation();
        let c = b.bottom().colors();
        for i in 0..b.strands() {
            prop_assert_eq!(c[p.apply(i)], c[i]);
        }
    }

    #[test]
    fn linking_is_symmetric(b in arb_cc_braid()) {
        let cl = b.closure().unwrap();
        let lk = cl.linking_matrix();
        for i in 0..lk.len() {
            prop_assert_eq!(lk[i][i], 0);
            for j in 0..lk.len() {
                prop_assert_eq!(lk[i][j], lk[j][i]);
            }
        }
        let mut seen: Vec<usize> = cl.components().iter().flat_map(|c| c.strands.clone()).collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..b.strands()).collect::<Vec<_>>());
    }

    #[test]
    fn markov_moves_preserve_linking(b in arb_cc_braid(), k in 0usize..20, sign in any::<bool>()) {
        let base = b.closure().unwrap();
        let sorted = |c: &braidcore::ClosureData| {
            let mut per_color: Vec<i64> = Vec::new();
            for i in 1..=c.mu() {
                for j in i + 1..=c.mu() {
                    per_color.push(c.sublink_linking(i, j));
                }
            }
            let mut sizes: Vec<usize> = (1..=c.mu()).map(|i| c.sublink(i).len()).collect();
            sizes.push(c.num_components());
            (per_color, sizes)
        };
        let rotated = b.rotate(k).unwrap().closure().unwrap();
        prop_assert_eq!(sorted(&rotated), sorted(&base));
        let stabilized = b.markov_stabilize(if sign { 1 } else { -1 }).unwrap().closure().unwrap();
        prop_assert_eq!(sorted(&stabilized), sorted(&base));
        let total = |c: &braidcore::ClosureData| c.linking_matrix().iter().flatten().sum::<i64>();
        prop_assert_eq!(total(&stabilized), total(&base));
        prop_assert_eq!(total(&rotated), total(&base));
    }

    #[test]
    fn restriction_keeps_sublink_structure(b in arb_cc_braid()) {
        let whole = b.closure().unwrap();
        for color in 1..=b.mu() {
            let r = b.restrict_to_colors(&[color]).unwrap();
            prop_assert!(r.is_color_preserving());
            prop_assert_eq!(r.closure().unwrap().num_components(), whole.sublink(color).len());
        }
        let all: Vec<usize> = (1..=b.mu()).collect();
        prop_assert_eq!(b.restrict_to_colors(&all).unwrap(), b);
    }

    #[test]
    fn composition_is_associative(b in arb_cc_braid()) {
        let c = b.compose(&b).unwrap().compose(&b).unwrap();
        let d = b.compose(&b.compose(&b).unwrap()).unwrap();
        prop_assert_eq!(c, d);
    }

    #[test]
    fn over_strand_signs_follow_letters(b in arb_cc_braid()) {
        let signs: Vec<i32> = b.over_strand_colors().iter().map(|p| p.1).collect();
        let expected: Vec<i32> = b.letters().iter().map(|l| l.signum()).collect();
        prop_assert_eq!(signs, expected);
    }
}
