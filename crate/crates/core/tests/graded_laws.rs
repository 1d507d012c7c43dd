use num_bigint::BigUint;
use proptest::prelude::*;

use sebthom_core::atoms::{pham, pow, quad, AtomDef, AtomRegistry, PieceSpec};
use sebthom_core::graded::{char_poly, equal, join, suspend, total_rank, zeta};
use sebthom_core::oracle::{pham_enumerate, DEFAULT_ENUMERATION_BOUND};
use sebthom_core::{Error, RootOfUnity, VanishingData};

fn exponents() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(2i64..=9, 1..=3)
}

fn torsion_atom() -> impl Strategy<Value = VanishingData> {
    (-2i64..=4, 0usize..=2, prop::collection::vec(2u64..=12, 0..=2), 1u64..=6).prop_map(
        |(degree, rank, orders, den)| {
            // build a valid chain from arbitrary orders
            let chain = sebthom_core::FgAbGroup::from_orders(0, orders.into_iter().map(BigUint::from));
            let spec = PieceSpec {
                degree,
                free_rank: rank,
                torsion: chain.torsion().to_vec(),
                eigenvalues: (0..rank).map(|k| RootOfUnity::new(k as i64, den).to_string()).collect(),
            };
            AtomDef::from_specs("t", &[spec]).unwrap().data
        },
    )
}

fn data() -> impl Strategy<Value = VanishingData> {
    prop_oneof![exponents().prop_map(|l| pham(&l).unwrap()), torsion_atom()]
}

/// Rank at most 36, for laws with three operands.
fn small_data() -> impl Strategy<Value = VanishingData> {
    prop_oneof![
        prop::collection::vec(2i64..=7, 1..=2).prop_map(|l| pham(&l).unwrap()),
        torsion_atom()
    ]
}

proptest! {
    #[test]
    fn join_matches_enumeration(l in prop::collection::vec(2i64..=12, 1..=4)) {
        prop_assert_eq!(pham(&l).unwrap(), pham_enumerate(&l, DEFAULT_ENUMERATION_BOUND).unwrap());
    }

    #[test]
    fn pham_concatenation_is_join(a in exponents(), b in exponents()) {
        let both: Vec<i64> = a.iter().chain(&b).copied().collect();
        prop_assert_eq!(pham(&both).unwrap(), join(&pham(&a).unwrap(), &pham(&b).unwrap()));
    }

    #[test]
    fn join_commutes(v in data(), w in data()) {
        prop_assert_eq!(join(&v, &w), join(&w, &v));
    }

    #[test]
    fn join_associates(u in small_data(), v in small_data(), w in small_data()) {
        prop_assert_eq!(join(&join(&u, &v), &w), join(&u, &join(&v, &w)));
    }

    #[test]
    fn suspension_is_join_with_quadric(v in data(), m in 1i64..=4) {
        prop_assert!(equal(&suspend(&v, m).unwrap(), &join(&v, &quad(m).unwrap())));
    }

    #[test]
    fn suspensions_compose(v in data(), a in 1i64..=3, b in 1i64..=3) {
        prop_assert_eq!(suspend(&suspend(&v, a).unwrap(), b).unwrap(), suspend(&v, a + b).unwrap());
    }

    #[test]
    fn rank_is_multiplicative(v in data(), w in data()) {
        prop_assert_eq!(total_rank(&join(&v, &w)), total_rank(&v) * total_rank(&w));
    }

    #[test]
    fn pham_char_polys_are_integral(l in exponents()) {
        let v = pham(&l).unwrap();
        let degree = l.len() as i64;
        let c = char_poly(&v, degree);
        prop_assert!(c.is_integral());
        prop_assert_eq!(c.degree() as usize, total_rank(&v));
        let coeffs = c.expand().unwrap();
        prop_assert_eq!(coeffs.len(), total_rank(&v) + 1);
    }

    #[test]
    fn zeta_degree_is_minus_euler_characteristic(l in exponents()) {
        // deg num - deg den = -chi(F) = -1 + (-1)^n * mu
        let v = pham(&l).unwrap();
        let z = zeta(&v);
        let n = l.len() as i64;
        let mu = total_rank(&v) as i64;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(
            z.numerator.degree() as i64 - z.denominator.degree() as i64,
            -1 + sign * mu
        );
    }

    #[test]
    fn pham_ignores_exponent_order(mut l in prop::collection::vec(2i64..=9, 1..=4), k in 0usize..4) {
        let v = pham(&l).unwrap();
        let n = l.len();
        l.rotate_left(k % n);
        l.reverse();
        prop_assert_eq!(pham(&l).unwrap(), v);
    }

    #[test]
    fn double_suspension_only_shifts(v in data()) {
        let s = suspend(&v, 2).unwrap();
        let shifted: Vec<(i64, _)> = v.pieces().map(|(d, p)| (d + 2, p.clone())).collect();
        let got: Vec<(i64, _)> = s.pieces().map(|(d, p)| (d, p.clone())).collect();
        prop_assert_eq!(got, shifted);
    }

    #[test]
    fn galois_closed_joins_are_integral(l in exponents(), m in 1u64..=12, degree in 0i64..=3) {
        // all primitive m-th roots once each
        let roots: Vec<String> = (0..m)
            .filter(|k| num_integer::gcd(*k, m) == 1)
            .map(|k| RootOfUnity::new(k as i64, m).to_string())
            .collect();
        let spec = PieceSpec { degree, free_rank: roots.len(), eigenvalues: roots, ..Default::default() };
        let w = AtomDef::from_specs("g", &[spec]).unwrap().data;
        let j = join(&pham(&l).unwrap(), &w);
        for (d, _) in j.pieces() {
            prop_assert!(char_poly(&j, d).is_integral());
        }
    }

    #[test]
    fn root_strings_round_trip(k in -100i64..=100, m in 1u64..=60) {
        let r = RootOfUnity::new(k, m);
        prop_assert_eq!(r.to_string().parse::<RootOfUnity>().unwrap(), r);
        prop_assert!(r.numerator() < r.denominator());
    }

    #[test]
    fn specs_round_trip(v in data()) {
        let atom = AtomDef { name: "x".into(), data: v };
        prop_assert_eq!(AtomDef::from_specs("x", &atom.to_specs()).unwrap(), atom);
    }
}

#[test]
fn small_atoms_are_pham_special_cases() {
    for a in 2..=20 {
        assert_eq!(pow(a).unwrap(), pham(&[a]).unwrap());
    }
    for m in 1..=6 {
        assert_eq!(quad(m).unwrap(), pham(&vec![2; m as usize]).unwrap());
    }
    assert!(matches!(pow(1), Err(Error::Domain(_))));
    assert!(matches!(quad(0), Err(Error::Domain(_))));
    assert!(matches!(pham(&[]), Err(Error::Domain(_))));
    assert!(matches!(pham(&[3, 1]), Err(Error::Domain(_))));
}

#[test]
fn empty_data_absorbs_join() {
    let empty = VanishingData::empty();
    assert!(join(&empty, &pham(&[3, 4]).unwrap()).is_empty());
    // pow(2) is the unit up to a shift of one degree
    let v = pham(&[3, 5]).unwrap();
    assert_eq!(join(&pow(2).unwrap(), &v), suspend(&v, 1).unwrap());
}

#[test]
fn registry_resolves_by_name() {
    let mut reg = AtomRegistry::new();
    assert!(reg.is_empty());
    let atom = AtomDef { name: "cusp".into(), data: pham(&[2, 3]).unwrap() };
    assert!(reg.insert(atom.clone()).is_none());
    assert_eq!(reg.insert(atom.clone()), Some(atom.clone()));
    assert_eq!(reg.len(), 1);
    assert_eq!(reg.resolve("cusp").unwrap(), &atom.data);
    assert_eq!(reg.resolve("node"), Err(Error::UnknownAtom("node".into())));
}

#[test]
fn invalid_specs_name_degree_and_field() {
    let bad_chain = PieceSpec {
        degree: 3,
        torsion: vec![4u8.into(), 2u8.into()],
        ..Default::default()
    };
    match AtomDef::from_specs("b", &[bad_chain]) {
        Err(Error::Validation { degree: Some(3), field, .. }) => assert_eq!(field, "torsion"),
        other => panic!("{other:?}"),
    }
    let short = PieceSpec {
        degree: 1,
        free_rank: 2,
        eigenvalues: vec!["1/2".into()],
        ..Default::default()
    };
    match AtomDef::from_specs("s", &[short]) {
        Err(Error::Validation { degree: Some(1), field, .. }) => assert_eq!(field, "eigenvalues"),
        other => panic!("{other:?}"),
    }
    assert!(AtomDef::from_specs("", &[]).is_err());
}
