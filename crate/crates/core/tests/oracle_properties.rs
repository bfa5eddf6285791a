mod common;

use common::*;
use lyndon_morph::oracle::{
    detect_period, find_suffix_violation, lyndon_prefix_lengths, oracle_report, pre_lyndon_oracle,
};
use lyndon_morph::{
    classify, enumerate_morphisms, is_lyndon, is_pre_lyndon, Conclusion, Morphism, OracleConfig,
    Outcome,
};
use proptest::prelude::*;

fn prolongable_sweep() -> Vec<Morphism> {
    enumerate_morphisms(4)
        .into_iter()
        .filter(Morphism::is_prolongable)
        .collect()
}

#[test]
fn refutations_survive_a_longer_window() {
    let cfg = OracleConfig::with_window(1000);
    for f in prolongable_sweep() {
        let report = oracle_report(&f, &cfg).unwrap();
        if let Conclusion::RefutedAtPosition(j) = report.conclusion {
            let v = report.first_violation.unwrap();
            assert_eq!(v.position, j);
            let longer = f.fixed_point_prefix(2000).unwrap();
            assert!(v.holds_in(longer.letters()), "{f}");
            assert!(!classify(&f).outcome.is_lyndon(), "{f}");
        }
    }
}

// Lyndon prefix lengths of these fixed points grow by up to the largest
// image length (4 here) per step, so a single doubling can fall between two
// of them. Four times the window always reaches the next one.
#[test]
fn lyndon_evidence_grows_when_the_window_quadruples() {
    let cfg = OracleConfig::default();
    for f in prolongable_sweep() {
        if classify(&f).outcome != Outcome::InfiniteLyndon {
            continue;
        }
        let small = oracle_report(&f, &cfg).unwrap();
        let large = oracle_report(&f, &OracleConfig::with_window(4 * cfg.window)).unwrap();
        assert!(
            small.lyndon_prefix_lengths.len() >= cfg.min_lyndon_prefixes,
            "{f}"
        );
        assert!(
            large.lyndon_prefix_lengths.last() > small.lyndon_prefix_lengths.last(),
            "{f}"
        );
    }
}

#[test]
fn single_doubling_can_miss_the_next_lyndon_prefix() {
    let f: Morphism = "a=aaab;b=aab".parse().unwrap();
    assert!(classify(&f).outcome.is_lyndon());
    let at = |w| {
        oracle_report(&f, &OracleConfig::with_window(w))
            .unwrap()
            .lyndon_prefix_lengths
    };
    assert_eq!(at(5000), vec![1, 4, 15, 56, 209, 780, 2911]);
    assert_eq!(at(10000), at(5000));
    assert_eq!(at(20000).last(), Some(&10864));
}

#[test]
fn oracle_and_structural_pre_lyndon_agree() {
    let bound = OracleConfig::default().pre_lyndon_extension_bound;
    for x in binary_words(12) {
        assert_eq!(
            pre_lyndon_oracle(&x, bound(x.len())).unwrap(),
            is_pre_lyndon(&x).unwrap().is_some(),
            "{x}"
        );
    }
}

#[test]
fn detected_periods_reproduce_the_window() {
    for f in prolongable_sweep() {
        let prefix = f.fixed_point_prefix(600).unwrap();
        if let Some(p) = detect_period(&prefix, 300) {
            assert_eq!(p.expand(), prefix, "{f}");
            assert!(2 * p.period() <= prefix.len());
        }
    }
}

#[test]
fn lyndon_prefixes_match_definition() {
    for x in binary_words(10) {
        let expected: Vec<usize> = (1..=x.len())
            .filter(|&n| lyndon_by_rotations(&x.letters()[..n]))
            .collect();
        assert_eq!(lyndon_prefix_lengths(&x).unwrap(), expected, "{x}");
    }
}

#[test]
fn violations_match_definition() {
    for x in binary_words(10) {
        let s = x.letters();
        let expected = (1..s.len()).find(|&j| {
            let t = &s[j..];
            let m = t.iter().zip(s).take_while(|(a, b)| a == b).count();
            m < t.len() && t[m] < s[m]
        });
        let got = find_suffix_violation(&x).unwrap();
        assert_eq!(got.map(|v| v.position), expected, "{x}");
        if let Some(v) = got {
            assert!(v.holds_in(s));
        }
        // without a violation the word is a prefix of a Lyndon word or
        // a power of the largest letter
        if expected.is_none() && x.letters().contains(&0) {
            assert!(is_pre_lyndon(&x).unwrap().is_some(), "{x}");
        }
    }
}

proptest! {
    #[test]
    fn period_witness_expands_to_word(root in proptest::collection::vec(0u8..2, 1..6), len in 1usize..60) {
        let letters: Vec<u8> = root.iter().copied().cycle().take(len).collect();
        let x = lyndon_morph::Word::from_letters(&lyndon_morph::OrderedAlphabet::binary(), letters).unwrap();
        if let Some(p) = detect_period(&x, len) {
            prop_assert_eq!(p.expand(), x.clone());
            prop_assert!(p.period() <= root.len());
        }
    }

    #[test]
    fn lyndon_prefix_lengths_are_lyndon(letters in proptest::collection::vec(0u8..2, 1..200)) {
        let x = lyndon_morph::Word::from_letters(&lyndon_morph::OrderedAlphabet::binary(), letters).unwrap();
        for n in lyndon_prefix_lengths(&x).unwrap() {
            prop_assert!(is_lyndon(&x.prefix(n)).unwrap());
        }
    }
}
