use std::collections::BTreeSet;

use proptest::prelude::*;
use xorclique_core::constructions::{
    affine_construction, big_n_construction, stacked_affine, weighted_pk_construction,
    weighted_pk_weights,
};
use xorclique_core::set_family::{blow_up, embed, trivial_construction, WeightFunction};
use xorclique_core::{
    verify_semiintersecting, Error, FamilyParams, MemberSet, SetFamily, Violation,
};

type Sides = (BTreeSet<usize>, BTreeSet<usize>);

/// Members as explicit point sets, checked pairwise with set operations.
fn oracle_valid(k: usize, n: usize, members: &[Sides]) -> bool {
    members.iter().all(|(a, b)| {
        a.len() == k && b.len() == k && a.iter().all(|&p| p < n) && b.iter().all(|&p| p >= n)
    }) && members.iter().enumerate().all(|(i, (a1, b1))| {
        members[i + 1..].iter().all(|(a2, b2)| {
            let ma = a1.intersection(a2).next().is_some();
            let mb = b1.intersection(b2).next().is_some();
            ma != mb
        })
    })
}

fn family_strategy() -> impl Strategy<Value = (usize, usize, Vec<Sides>)> {
    (1usize..4, 0usize..4).prop_flat_map(|(k, extra)| {
        let n = k + extra + 1;
        let side = |lo: usize| proptest::collection::btree_set(lo..lo + n, 0..=k + 1);
        let member = (side(0), side(n));
        (Just(k), Just(n), proptest::collection::vec(member, 0..7))
    })
}

fn build(n: usize, k: usize, members: &[Sides]) -> SetFamily {
    let ms = members
        .iter()
        .map(|(a, b)| {
            MemberSet::new(
                n,
                &a.iter().copied().collect::<Vec<_>>(),
                &b.iter().copied().collect::<Vec<_>>(),
            )
            .unwrap()
        })
        .collect();
    SetFamily::new(FamilyParams::new(k, n).unwrap(), ms, "random")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn verifier_matches_set_oracle((k, n, members) in family_strategy()) {
        let fam = build(n, k, &members);
        let rep = verify_semiintersecting(&fam);
        prop_assert_eq!(rep.valid, oracle_valid(k, n, &members));
        prop_assert_eq!(rep.valid, rep.violations.is_empty());
        prop_assert_eq!(rep.members, members.len());
    }

    #[test]
    fn verifier_matches_oracle_near_valid(
        keep in proptest::collection::vec(any::<bool>(), 12),
        flip in proptest::option::of((0usize..12, any::<bool>(), 0usize..12)),
    ) {
        // Start from a valid family, drop members, optionally move one point.
        let base = stacked_affine(2, 3).unwrap();
        let n = base.params().n;
        let mut members: Vec<Sides> = base
            .members()
            .iter()
            .zip(&keep)
            .filter(|(_, &k)| k)
            .map(|(m, _)| (m.a_points().into_iter().collect(), m.b_points().into_iter().collect()))
            .collect();
        if let (Some((i, side_a, to)), false) = (flip, members.is_empty()) {
            let i = i % members.len();
            let side = if side_a { &mut members[i].0 } else { &mut members[i].1 };
            let from = *side.iter().next().unwrap();
            side.remove(&from);
            side.insert(if side_a { to } else { n + to });
        }
        let fam = build(n, 2, &members);
        prop_assert_eq!(verify_semiintersecting(&fam).valid, oracle_valid(2, n, &members));
    }

    #[test]
    fn json_round_trip((k, n, members) in family_strategy()) {
        let fam = build(n, k, &members);
        let back = SetFamily::from_json(&fam.to_json()).unwrap();
        prop_assert_eq!(back.members(), fam.members());
        prop_assert_eq!(back.params(), fam.params());
    }

    #[test]
    fn constant_blow_up_keeps_validity(p_idx in 0usize..4, d in 1usize..4) {
        let p = [2, 3, 4, 5][p_idx];
        let fam = affine_construction(p).unwrap();
        let g = WeightFunction::constant(p * p, d).unwrap();
        let big = blow_up(&fam, &g).unwrap();
        prop_assert_eq!(big.params(), FamilyParams::new(p * d, p * p * d).unwrap());
        prop_assert_eq!(big.len(), fam.len());
        prop_assert!(verify_semiintersecting(&big).valid);
    }

    #[test]
    fn embedding_keeps_validity(p_idx in 0usize..3, grow in 0usize..20) {
        let p = [2, 3, 4][p_idx];
        let fam = affine_construction(p).unwrap();
        let big = embed(&fam, p * p + grow).unwrap();
        prop_assert_eq!(big.len(), fam.len());
        prop_assert!(verify_semiintersecting(&big).valid);
    }
}

#[test]
fn violation_listing_on_corruption() {
    let fam = affine_construction(2).unwrap();
    let mut text: serde_json::Value = serde_json::from_str(&fam.to_json()).unwrap();
    text["sets"][2]["A"].as_array_mut().unwrap().pop();
    let bad = SetFamily::from_json(&text.to_string()).unwrap();
    let rep = verify_semiintersecting(&bad);
    assert!(!rep.valid);
    assert!(matches!(
        rep.violations[0],
        Violation::SizeViolation {
            member: 2,
            a_size: 1,
            b_size: 2
        }
    ));
}

#[test]
fn empty_family_is_valid() {
    let fam = SetFamily::from_json(r#"{"k":3,"N":5,"sets":[]}"#).unwrap();
    assert!(verify_semiintersecting(&fam).valid);
}

#[test]
fn malformed_json_rejected() {
    for bad in [
        "",
        "[]",
        r#"{"k":0,"N":5,"sets":[]}"#,
        r#"{"k":2,"N":4,"sets":[{"A":[0,0],"B":[4,5]}]}"#,
        r#"{"k":2,"N":4,"sets":[{"A":[0,9],"B":[4,5]}]}"#,
        r#"{"k":2,"N":4,"sets":[{"A":[0,1],"B":[1,5]}]}"#,
    ] {
        assert!(
            matches!(SetFamily::from_json(bad), Err(Error::Malformed(_))),
            "{bad:?}"
        );
    }
}

#[test]
fn trivial_family_sizes() {
    for k in 1..=6 {
        for n in k..=30 {
            let fam = trivial_construction(FamilyParams::new(k, n).unwrap());
            assert_eq!(fam.len(), n / k);
            assert!(verify_semiintersecting(&fam).valid);
        }
    }
}

#[test]
fn affine_families() {
    for p in [2, 3, 4, 5, 7, 8, 9] {
        let fam = affine_construction(p).unwrap();
        assert_eq!(fam.params(), FamilyParams::new(p, p * p).unwrap());
        assert_eq!(fam.len(), p * p);
        assert!(verify_semiintersecting(&fam).valid, "p={p}");
    }
    assert_eq!(affine_construction(6).unwrap_err(), Error::NotPrimePower(6));
}

#[test]
fn stacked_families() {
    for p in [2, 3, 4, 5] {
        for l in 1..=p + 1 {
            let fam = stacked_affine(p, l).unwrap();
            assert_eq!(fam.params(), FamilyParams::new(p, l * p * p).unwrap());
            assert_eq!(fam.len(), l * p * p);
            assert!(verify_semiintersecting(&fam).valid, "p={p} l={l}");
        }
        assert!(matches!(
            stacked_affine(p, p + 2),
            Err(Error::TooManyCopies { .. })
        ));
    }
}

#[test]
fn big_n_families() {
    for p in [2, 3] {
        for n in p * p * p..=p * p * p + 3 * p + 1 {
            let fam = big_n_construction(p, n).unwrap();
            assert_eq!(fam.len(), n / p - p * p + p * p * p, "p={p} N={n}");
            assert!(verify_semiintersecting(&fam).valid, "p={p} N={n}");
        }
    }
    assert!(matches!(
        big_n_construction(2, 7),
        Err(Error::NTooSmall { n: 7, min: 8 })
    ));
}

#[test]
fn weighted_families() {
    for k in 1..=8 {
        for p in [2, 3, 4, 5, 7, 8].into_iter().filter(|&p| p <= k) {
            let fam = weighted_pk_construction(k, p).unwrap();
            assert_eq!(fam.params(), FamilyParams::new(k, p * k).unwrap());
            assert_eq!(fam.len(), p * p);
            assert!(verify_semiintersecting(&fam).valid, "k={k} p={p}");
            let w = weighted_pk_weights(k, p).unwrap();
            assert_eq!(w.weights().iter().sum::<usize>(), 2 * p * k);
        }
    }
    assert!(matches!(
        weighted_pk_construction(2, 3),
        Err(Error::PTooLarge { p: 3, k: 2 })
    ));
}

#[test]
fn unbalanced_weights_rejected() {
    let fam = affine_construction(2).unwrap();
    let mut w = vec![1; 8];
    w[0] = 2;
    assert!(matches!(
        blow_up(&fam, &WeightFunction::new(w).unwrap()),
        Err(Error::UnbalancedWeights(_))
    ));
    assert!(matches!(
        embed(&fam, 3),
        Err(Error::ShrinkNotAllowed { from: 4, to: 3 })
    ));
}
