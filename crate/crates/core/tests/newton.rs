use affweyl::newton::{
    b_g_mu_membership, nu_b_max, value_rank, verify_key_lemma, xi_is_minimal, MembershipForm,
};
use affweyl::suites::CaseSpec;
use affweyl::{dim_x_mu_bmax, xi_sigma, Caps, Error, Strategy, TypeLetter};
use num_integer::gcd;

fn dims(spec: CaseSpec, strategy: Strategy) -> affweyl::DimensionReport {
    let (aff, datum) = spec.build().unwrap();
    dim_x_mu_bmax(&aff, &datum, strategy, &Caps::default(), None).unwrap()
}

#[test]
fn e6_tau1_by_rank() {
    let r = dims(CaseSpec::new(TypeLetter::E, 6, Some(1), "id"), Strategy::Rank);
    assert_eq!(r.value(), 4);
}

/// For split `A_n` with `tau_i` the answer is `n + 1 - gcd(n + 1, i)`.
#[test]
fn split_a_all_routes() {
    for n in 1..=5usize {
        for i in 1..=n {
            let r = dims(CaseSpec::new(TypeLetter::A, n, Some(i), "id"), Strategy::All);
            assert!(r.consistent(), "A{n} tau{i}: {r:?}");
            assert_eq!(r.value(), n + 1 - gcd(n + 1, i), "A{n} tau{i}");
        }
    }
}

#[test]
fn classical_values() {
    for n in 2..=5 {
        let b = dims(CaseSpec::new(TypeLetter::B, n, Some(1), "id"), Strategy::Class);
        assert_eq!(b.value_class, Some(1), "B{n}");
        let c = dims(CaseSpec::new(TypeLetter::C, n, Some(n), "id"), Strategy::Class);
        assert_eq!(c.value_class, Some((n + 1) / 2), "C{n}");
    }
    for n in 4..=6 {
        let d = dims(CaseSpec::new(TypeLetter::D, n, Some(1), "id"), Strategy::Class);
        assert_eq!(d.value_class, Some(2), "D{n}");
    }
}

#[test]
fn quasi_split_forms_give_zero() {
    for spec in [
        CaseSpec::new(TypeLetter::A, 4, Some(2), "flip"),
        CaseSpec::new(TypeLetter::D, 5, Some(1), "flip"),
        CaseSpec::new(TypeLetter::D, 4, Some(3), "triality"),
        CaseSpec::new(TypeLetter::E, 6, Some(6), "flip"),
        CaseSpec::new(TypeLetter::C, 3, None, "id"),
    ] {
        let r = dims(spec.clone(), Strategy::All);
        assert!(r.consistent(), "{spec:?}");
        assert_eq!(r.value(), 0, "{spec:?}");
        assert!(r.xi_sigma.coroots.iter().all(|p| p[0] == 0), "{spec:?}");
    }
}

#[test]
fn xi_values() {
    let show = |spec: CaseSpec| {
        let (aff, datum) = spec.build().unwrap();
        let xi = xi_sigma(aff.root_system(), &datum);
        assert!(xi_is_minimal(aff.root_system(), &datum, &xi));
        xi.display_coroots()
    };
    assert_eq!(show(CaseSpec::new(TypeLetter::B, 3, Some(1), "id")), "1/2 a3v");
    assert_eq!(show(CaseSpec::new(TypeLetter::C, 3, Some(3), "id")), "1/2 a1v + 1/2 a3v");
    assert_eq!(
        show(CaseSpec::new(TypeLetter::A, 2, Some(1), "id")),
        "1/3 a1v + 2/3 a2v"
    );
    assert_eq!(show(CaseSpec::new(TypeLetter::A, 3, Some(1), "flip")), "1/2 a2v");
    assert_eq!(
        show(CaseSpec::new(TypeLetter::E, 7, Some(7), "id")),
        "1/2 a2v + 1/2 a5v + 1/2 a7v"
    );
    assert_eq!(
        show(CaseSpec::new(TypeLetter::E, 6, Some(1), "id")),
        "2/3 a1v + 1/3 a3v + 2/3 a5v + 1/3 a6v"
    );
}

#[test]
fn b_max_requires_depth() {
    let (aff, datum) = CaseSpec::new(TypeLetter::A, 2, Some(1), "id").build().unwrap();
    let rs = aff.root_system();
    let shallow = rs.coweight_from_pairings(&[1, 3]);
    assert!(matches!(
        nu_b_max(rs, &datum, &shallow, 2),
        Err(Error::DepthTooSmall { .. })
    ));
    let mu = rs.coweight_from_pairings(&[2, 2]);
    let nu = nu_b_max(rs, &datum, &mu, 2).unwrap();
    assert!(nu.dominant && nu.regular);
    assert!(b_g_mu_membership(rs, &datum, &mu, &nu.nu, MembershipForm::Specialized).unwrap());
    // mu itself is not reachable when the group is not quasi-split
    assert!(!b_g_mu_membership(rs, &datum, &mu, &mu, MembershipForm::Specialized).unwrap());
    assert!(matches!(
        b_g_mu_membership(rs, &datum, &mu, &nu.nu, MembershipForm::General),
        Err(Error::Unimplemented(_))
    ));
    assert_eq!(
        rs.pair_two_rho(&mu.sub(&nu.nu)),
        affweyl::linalg::qi(value_rank(&aff, &datum).unwrap() as i64)
    );
}

#[test]
fn e7_class_needs_permission() {
    let (aff, datum) = CaseSpec::new(TypeLetter::E, 7, Some(7), "id").build().unwrap();
    let err = verify_key_lemma(&aff, &datum, &Caps::default()).unwrap_err();
    assert!(matches!(err, Error::CapExceeded { .. }));
    let caps = Caps {
        allow_large: true,
        ..Caps::default()
    };
    let k = verify_key_lemma(&aff, &datum, &caps).unwrap();
    assert!(k.passed);
    assert_eq!(k.j_sets, vec![vec![2, 5, 7]]);
}
