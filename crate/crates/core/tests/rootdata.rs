use affweyl::linalg::qi;
use affweyl::rootdata::all_types;
use affweyl::{CoweightVector, RootSystem, TypeLetter, Weyl};

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Group orders from the product of the degrees, written out per type.
fn expected_order(l: TypeLetter, n: usize) -> usize {
    match l {
        TypeLetter::A => factorial(n + 1),
        TypeLetter::B | TypeLetter::C => (1..=n).map(|k| 2 * k).product(),
        TypeLetter::D => (1..n).map(|k| 2 * k).product::<usize>() * n,
        TypeLetter::E => [2usize, 5, 6, 8, 9, 12].iter().product(),
        TypeLetter::F => 2 * 6 * 8 * 12,
        TypeLetter::G => 2 * 6,
    }
}

fn expected_positive_roots(l: TypeLetter, n: usize) -> usize {
    match l {
        TypeLetter::A => n * (n + 1) / 2,
        TypeLetter::B | TypeLetter::C => n * n,
        TypeLetter::D => n * (n - 1),
        TypeLetter::E => [36, 63, 120][n - 6],
        TypeLetter::F => 24,
        TypeLetter::G => 6,
    }
}

#[test]
fn enumeration_matches_degree_products() {
    for (l, n) in all_types(6) {
        let weyl = Weyl::of_type(l, n).unwrap();
        let group = weyl.enumerate(60_000).unwrap();
        assert_eq!(group.len(), expected_order(l, n), "{l}{n}");
        assert_eq!(weyl.order(), group.len(), "{l}{n}");
        // the longest element has length N and is the last element reached
        let n_pos = expected_positive_roots(l, n);
        assert_eq!(group.length(group.len() - 1), n_pos, "{l}{n}");
    }
}

#[test]
fn positive_root_counts() {
    for (l, n) in all_types(8) {
        let rs = RootSystem::new(l, n).unwrap();
        assert_eq!(rs.num_positive_roots(), expected_positive_roots(l, n), "{l}{n}");
        let sum: Vec<i64> = (0..n)
            .map(|i| rs.positive_roots.iter().map(|r| r[i]).sum())
            .collect();
        assert_eq!(sum, rs.two_rho, "{l}{n}");
    }
}

#[test]
fn minuscule_coweights() {
    let cases: &[(TypeLetter, usize, &[usize])] = &[
        (TypeLetter::A, 4, &[1, 2, 3, 4]),
        (TypeLetter::B, 3, &[1]),
        (TypeLetter::C, 4, &[4]),
        (TypeLetter::D, 5, &[1, 4, 5]),
        (TypeLetter::E, 6, &[1, 6]),
        (TypeLetter::E, 7, &[7]),
        (TypeLetter::E, 8, &[]),
        (TypeLetter::F, 4, &[]),
        (TypeLetter::G, 2, &[]),
    ];
    for &(l, n, expected) in cases {
        let rs = RootSystem::new(l, n).unwrap();
        assert_eq!(rs.minuscule_coweight_indices(), expected, "{l}{n}");
    }
}

#[test]
fn fundamental_coweights_are_dual() {
    for (l, n) in all_types(8) {
        let rs = RootSystem::new(l, n).unwrap();
        for i in 1..=n {
            let w = rs.fundamental_coweight(i).unwrap();
            let p = rs.simple_pairings(&w);
            for (j, v) in p.iter().enumerate() {
                assert_eq!(*v, qi((j + 1 == i) as i64), "{l}{n} i={i} j={}", j + 1);
            }
        }
    }
}

#[test]
fn depth_of_rho_multiples() {
    let rs = RootSystem::new(TypeLetter::C, 3).unwrap();
    let two_rho = CoweightVector::from_ints(&rs.two_rho_check);
    assert_eq!(rs.depth(&two_rho), qi(2));
    assert!(rs.is_regular_dominant(&two_rho));
    assert!(rs.dominance_leq(&CoweightVector::zero(3), &two_rho));
    assert!(!rs.dominance_leq(&two_rho, &CoweightVector::zero(3)));
}

#[test]
fn invalid_types_are_rejected() {
    assert!(RootSystem::new(TypeLetter::D, 3).is_err());
    assert!(RootSystem::new(TypeLetter::E, 5).is_err());
    assert!(RootSystem::new(TypeLetter::A, 9).is_err());
    assert!("X".parse::<TypeLetter>().is_err());
}
