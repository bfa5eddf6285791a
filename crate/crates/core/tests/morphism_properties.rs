mod common;

use std::cmp::Ordering;

use common::*;
use lyndon_morph::words::A;
use lyndon_morph::{
    enumerate_morphisms, lex_compare, Morphism, OrderedAlphabet, PrefixShape, Word,
};
use proptest::prelude::*;

fn prolongable_sweep() -> Vec<Morphism> {
    enumerate_morphisms(4)
        .into_iter()
        .filter(Morphism::is_prolongable)
        .collect()
}

/// Reads the shape off a generated prefix, without the structural shortcuts.
fn shape_by_inspection(prefix: &[u8]) -> Option<PrefixShape> {
    let first_b = prefix.iter().position(|&l| l != A)?;
    if first_b >= 2 {
        return Some(PrefixShape::CaseAA { i: first_b });
    }
    let second_a = prefix[1..].iter().position(|&l| l == A)?;
    Some(PrefixShape::CaseAB { i: second_a })
}

#[test]
fn prefix_shape_matches_inspection() {
    for f in prolongable_sweep() {
        let f2a_len = f.iterate(&w("a"), 2).len();
        let prefix = f.fixed_point_prefix(f2a_len + 2).unwrap();
        let shape = f.prefix_shape().unwrap();
        match shape {
            PrefixShape::PurePowerOfA => {
                assert!(prefix.letters().iter().all(|&l| l == A), "{f}");
                assert!(f.image_a().letters().iter().all(|&l| l == A), "{f}");
            }
            PrefixShape::CaseAbOmega => {
                assert_eq!(shape_by_inspection(prefix.letters()), None, "{f}");
                // The window holds a b^n; the images confirm it never ends.
                assert!(f.apply(&w("b")).letters().iter().all(|&l| l != A), "{f}");
            }
            _ => assert_eq!(shape_by_inspection(prefix.letters()), Some(shape), "{f}"),
        }
        if let PrefixShape::CaseAB { i } = shape {
            // the second a lies inside f^2(a)
            assert!(i + 1 < f2a_len, "{f}");
        }
    }
}

#[test]
fn prefixes_are_consistent() {
    for f in prolongable_sweep() {
        let long = f.fixed_point_prefix(5000).unwrap();
        for n in [0, 1, 7, 64, 999, 4999] {
            assert!(
                f.fixed_point_prefix(n).unwrap().is_prefix_of(&long),
                "{f} {n}"
            );
        }
    }
}

#[test]
fn prefix_is_a_prefix_of_its_image() {
    for f in prolongable_sweep() {
        let p = f.fixed_point_prefix(300).unwrap();
        assert!(p.is_prefix_of(&f.apply(&p)), "{f}");
    }
}

#[test]
fn fixed_point_prefix_matches_iteration() {
    for f in prolongable_sweep() {
        let fna = f.iterate(&w("a"), 6);
        let n = fna.len().min(2000);
        assert_eq!(f.fixed_point_prefix(n).unwrap(), fna.prefix(n), "{f}");
    }
}

#[test]
fn prolongability_report_invariant() {
    for f in enumerate_morphisms(4) {
        let r = f.prolongability();
        let fa = f.image_a().letters();
        let tail_immortal = fa.iter().skip(1).any(|l| !r.mortal_letters.contains(l));
        let expected = r.starts_with_a && fa.len() >= 2 && tail_immortal;
        assert_eq!(r.prolongable, expected, "{f}");
        // growth cross-checked by iterating lengths
        let len8 = f.iterate(&w("a"), 8).len();
        let len9 = f.iterate(&w("a"), 9).len();
        if r.prolongable {
            assert!(len9 > len8 && len8 >= 9, "{f}");
        }
    }
}

#[test]
fn mortal_letters_die_within_two_steps() {
    for f in enumerate_morphisms(3) {
        for x in f.mortal_letters() {
            let word = Word::from_letters(&OrderedAlphabet::binary(), vec![x]).unwrap();
            assert!(f.iterate(&word, 2).is_empty(), "{f}");
        }
    }
}

fn small_morphism() -> impl Strategy<Value = Morphism> {
    let image = || proptest::collection::vec(0u8..2, 0..=4);
    (image(), image()).prop_map(|(a, b)| {
        let bin = OrderedAlphabet::binary();
        Morphism::new(
            Word::from_letters(&bin, a).unwrap(),
            Word::from_letters(&bin, b).unwrap(),
        )
        .unwrap()
    })
}

fn short_word() -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u8..2, 0..=8)
        .prop_map(|l| Word::from_letters(&OrderedAlphabet::binary(), l).unwrap())
}

proptest! {
    #[test]
    fn apply_is_a_homomorphism(f in small_morphism(), u in short_word(), v in short_word()) {
        let uv = u.concat(&v).unwrap();
        prop_assert_eq!(f.apply(&uv), f.apply(&u).concat(&f.apply(&v)).unwrap());
    }

    #[test]
    fn order_preserving_morphisms_preserve_order(
        f in small_morphism(),
        u in short_word(),
        v in short_word(),
    ) {
        if f.preserves_order() && lex_compare(&u, &v).unwrap() == Ordering::Less {
            prop_assert_eq!(lex_compare(&f.apply(&u), &f.apply(&v)).unwrap(), Ordering::Less);
        }
    }

    #[test]
    fn spec_text_round_trips(f in small_morphism()) {
        prop_assert_eq!(f.to_string().parse::<Morphism>().unwrap(), f);
    }
}
