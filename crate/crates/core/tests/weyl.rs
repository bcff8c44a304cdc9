use std::collections::BTreeSet;

use affweyl::{TypeLetter, Weyl};
use proptest::prelude::*;

fn words(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=rank, 0..14)
}

proptest! {
    #[test]
    fn reduced_words_round_trip(word in words(4)) {
        let weyl = Weyl::of_type(TypeLetter::D, 4).unwrap();
        let w = weyl.from_word(&word).unwrap();
        let reduced = weyl.reduced_word(&w);
        prop_assert_eq!(reduced.len(), weyl.length(&w));
        prop_assert!(reduced.len() <= word.len());
        prop_assert_eq!(reduced.len() % 2, word.len() % 2);
        prop_assert_eq!(weyl.from_word(&reduced).unwrap(), w);
        prop_assert_eq!(weyl.length(&w.inverse()), weyl.length(&w));
    }

    #[test]
    fn reflection_length_is_bounded_by_length(word in words(3)) {
        let weyl = Weyl::of_type(TypeLetter::B, 3).unwrap();
        let w = weyl.from_word(&word).unwrap();
        let lr = weyl.reflection_length(&w);
        prop_assert!(lr <= weyl.length(&w));
        prop_assert_eq!(lr % 2, weyl.length(&w) % 2);
        prop_assert!(lr <= 3);
    }

    #[test]
    fn descents_lower_length(word in words(4)) {
        let weyl = Weyl::of_type(TypeLetter::A, 4).unwrap();
        let w = weyl.from_word(&word).unwrap();
        for i in 1..=4 {
            let ws = w.mul(&weyl.generator(i));
            let expected = if w.has_right_descent(i) { weyl.length(&w) - 1 } else { weyl.length(&w) + 1 };
            prop_assert_eq!(weyl.length(&ws), expected);
        }
    }
}

#[test]
fn longest_elements() {
    let weyl = Weyl::of_type(TypeLetter::E, 6).unwrap();
    let w0 = weyl.longest_element();
    assert_eq!(weyl.length(&w0), 36);
    assert!(w0.mul(&w0).is_identity());
    let j: Vec<usize> = (2..=6).collect();
    let w_j = weyl.longest_parabolic(&j);
    // the parabolic of type D5 has 20 positive roots
    assert_eq!(weyl.length(&w_j), 20);
    let zeta = weyl.zeta(1).unwrap();
    assert_eq!(weyl.length(&zeta), 16);
}

#[test]
fn coxeter_elements_of_subsets() {
    let weyl = Weyl::of_type(TypeLetter::A, 5).unwrap();
    let w = weyl.from_word(&[1, 3, 5]).unwrap();
    let j: BTreeSet<usize> = [1, 3, 5].into_iter().collect();
    assert!(weyl.is_coxeter_of(&w, &j));
    let v = weyl.from_word(&[1, 2, 1]).unwrap();
    let k: BTreeSet<usize> = [1, 2].into_iter().collect();
    assert!(!weyl.is_coxeter_of(&v, &k));
    assert_eq!(weyl.reflection_length(&v), 1);
}

#[test]
fn twisted_class_of_identity_under_flip() {
    let weyl = Weyl::of_type(TypeLetter::A, 3).unwrap();
    let flip = affweyl::DiagramAutomorphism::flip(&weyl.root_system().datum).unwrap();
    let class = weyl.twisted_class(&weyl.identity(), &flip, 1000).unwrap();
    assert_eq!(class.min_length, 0);
    // |W| / |W^sigma| with W^sigma of type B2
    assert_eq!(class.len(), 24 / 8);
}

#[test]
fn caps_are_reported() {
    let weyl = Weyl::of_type(TypeLetter::E, 7).unwrap();
    let err = weyl.enumerate(51_840).unwrap_err();
    assert!(matches!(err, affweyl::Error::CapExceeded { .. }), "{err}");
}
