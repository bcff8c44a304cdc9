use affweyl::affine::describe;
use affweyl::{AffineElement, AffineWeyl, DiagramAutomorphism, FrobeniusDatum, TypeLetter};
use proptest::prelude::*;

fn element(aff: &AffineWeyl, lambda: &[i64], word: &[usize], omega: usize) -> AffineElement {
    let w = aff.weyl().from_word(word).unwrap();
    let (_, o) = aff.omega()[omega % aff.omega().len()];
    aff.mul(&AffineElement::new(lambda, w), &o)
}

fn a2_elements() -> impl Strategy<Value = (Vec<i64>, Vec<usize>, usize)> {
    (
        prop::collection::vec(-3i64..=3, 2),
        prop::collection::vec(1..=2usize, 0..4),
        0..3usize,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn demazure_is_associative_on_a2(a in a2_elements(), b in a2_elements(), c in a2_elements()) {
        let aff = AffineWeyl::of_type(TypeLetter::A, 2).unwrap();
        let a = element(&aff, &a.0, &a.1, a.2);
        let b = element(&aff, &b.0, &b.1, b.2);
        let c = element(&aff, &c.0, &c.1, c.2);
        let lhs = aff.demazure(&aff.demazure(&a, &b), &c);
        let rhs = aff.demazure(&a, &aff.demazure(&b, &c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn simple_reflections_obey_the_demazure_rule(a in a2_elements(), k in 0..=2usize) {
        let aff = AffineWeyl::of_type(TypeLetter::A, 2).unwrap();
        let a = element(&aff, &a.0, &a.1, a.2);
        let s = aff.simple_reflection(k);
        let product = aff.mul(&a, &s);
        let expected = if aff.length(&product) > aff.length(&a) { product } else { a };
        prop_assert_eq!(aff.demazure(&a, &s), expected);
    }

    #[test]
    fn frobenius_preserves_length(a in a2_elements(), tau in 1..=2usize, twisted: bool) {
        let aff = AffineWeyl::of_type(TypeLetter::A, 2).unwrap();
        let rs = aff.root_system();
        let s = if twisted {
            DiagramAutomorphism::flip(&rs.datum).unwrap()
        } else {
            DiagramAutomorphism::identity(2)
        };
        let datum = FrobeniusDatum::new(rs, Some(tau), s).unwrap();
        let a = element(&aff, &a.0, &a.1, a.2);
        prop_assert_eq!(aff.length(&aff.sigma(&datum, &a)), aff.length(&a));
    }
}

#[test]
fn tau_elements_have_length_zero() {
    for (l, n) in [(TypeLetter::A, 4), (TypeLetter::D, 5), (TypeLetter::E, 6), (TypeLetter::C, 3)] {
        let aff = AffineWeyl::of_type(l, n).unwrap();
        for (i, t) in aff.omega() {
            assert_eq!(aff.length(&t), 0, "{l}{n} tau{i}");
            assert_eq!(aff.omega_index(&t), Some(i));
        }
    }
}

#[test]
fn translation_lengths() {
    let aff = AffineWeyl::of_type(TypeLetter::B, 3).unwrap();
    let rs = aff.root_system();
    // l(t^lambda) = <2rho, lambda^+>
    for lambda in [[1i64, 0, 0], [-1, 2, -1], [0, 0, 3]] {
        let t = aff.translation(&lambda);
        let dom = aff.dominant_pairings(&lambda);
        let expected: i64 = dom.iter().zip(&rs.two_rho).map(|(a, b)| a * b).sum();
        assert_eq!(aff.length(&t) as i64, expected, "{lambda:?}");
    }
    assert_eq!(aff.length(&aff.simple_reflection(0)), 1);
}

#[test]
fn affine_words_multiply_out() {
    let aff = AffineWeyl::of_type(TypeLetter::A, 2).unwrap();
    let a = aff.from_affine_word(&[0, 1, 2, 0]).unwrap();
    assert_eq!(aff.length(&a), 4);
    let (word, omega) = aff.left_decomposition(&a);
    assert_eq!(word.len(), 4);
    assert_eq!(aff.omega_index(&omega), Some(0));
    assert!(!describe(&aff, &a).is_empty());
}

#[test]
fn generic_newton_point_of_dominant_translation() {
    let aff = AffineWeyl::of_type(TypeLetter::C, 3).unwrap();
    let rs = aff.root_system();
    let datum = FrobeniusDatum::split(rs, None).unwrap();
    let mu = [2i64, 1, 3];
    let gn = aff.generic_newton_point(&datum, &aff.translation(&mu)).unwrap();
    assert_eq!(gn.nu, rs.coweight_from_pairings(&mu));
}
