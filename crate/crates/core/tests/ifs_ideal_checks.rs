//! The eight IF ideal deciders: fixture witnesses, definitional identities,
//! the dual-path agreement between the scan and composition routes, and the
//! level-cut transfer property.

use gamma_ag::fixtures;
use gamma_ag::*;
use proptest::prelude::*;

fn e(i: usize) -> Element {
    Element(i - 1)
}

fn g(p: u32, q: u32) -> Grade {
    Grade::new(p, q).unwrap()
}

#[test]
fn a_cut_fails_if_right_at_2_1() {
    let f2 = fixtures::f2();
    let v = is_if(&f2, &fixtures::a_cut(), IfsKind::Right).unwrap();
    assert!(!v.holds);
    match v.witness.unwrap() {
        IfsWitness::Pointwise {
            elements,
            gammas,
            side,
            actual,
            bound,
        } => {
            assert_eq!(elements, vec![e(2), e(1)]);
            assert_eq!(gammas, vec![GammaIndex(0)]);
            assert_eq!(side, GradeSide::Mu);
            assert_eq!(actual, g(2, 5));
            assert_eq!(bound, g(4, 5));
        }
        other => panic!("expected pointwise witness, got {other:?}"),
    }
}

#[test]
fn a_ex_fails_if_left_at_1_3_on_nu() {
    let f2 = fixtures::f2();
    let v = is_if(&f2, &fixtures::a_ex(), IfsKind::Left).unwrap();
    assert!(!v.holds);
    match v.witness.unwrap() {
        IfsWitness::Pointwise {
            elements,
            gammas,
            side,
            actual,
            bound,
        } => {
            assert_eq!(elements, vec![e(1), e(3)]);
            assert_eq!(gammas, vec![GammaIndex(0)]);
            assert_eq!(side, GradeSide::Nu);
            assert_eq!(actual, g(3, 10));
            assert_eq!(bound, g(1, 5));
        }
        other => panic!("expected pointwise witness, got {other:?}"),
    }
    // the subgroupoid claim about the same assignment does hold
    assert!(is_if(&f2, &fixtures::a_ex(), IfsKind::Subgroupoid).unwrap().holds);
    assert!(!is_if(&f2, &fixtures::a_ex(), IfsKind::TwoSided).unwrap().holds);
}

#[test]
fn delta_passes_every_kind() {
    for gpd in [fixtures::f1(), fixtures::f1_gamma(), fixtures::f2(), fixtures::f3()] {
        let d = Ifs::delta(gpd.carrier_size());
        for kind in IfsKind::ALL {
            assert!(is_if(&gpd, &d, kind).unwrap().holds, "delta must pass {kind}");
        }
    }
}

#[test]
fn constants_pass_the_pointwise_kinds() {
    let f2 = fixtures::f2();
    let c = Ifs::constant(5, g(1, 2), g(1, 2)).unwrap();
    for kind in [
        IfsKind::Subgroupoid,
        IfsKind::Left,
        IfsKind::Right,
        IfsKind::TwoSided,
        IfsKind::GeneralizedBi,
        IfsKind::Bi,
        IfsKind::Interior,
    ] {
        assert!(is_if(&f2, &c, kind).unwrap().holds, "constant must pass {kind}");
    }
    // on an intra-regular carrier the constant passes quasi as well
    assert!(is_if(&f2, &c, IfsKind::Quasi).unwrap().holds);
}

#[test]
fn two_sided_and_bi_are_conjunctions() {
    let f2 = fixtures::f2();
    for seed in 0..300u64 {
        let a = random_ifs(5, 4, seed);
        let holds = |k: IfsKind| is_if(&f2, &a, k).unwrap().holds;
        assert_eq!(holds(IfsKind::TwoSided), holds(IfsKind::Left) && holds(IfsKind::Right));
        assert_eq!(holds(IfsKind::Bi), holds(IfsKind::Subgroupoid) && holds(IfsKind::GeneralizedBi));
        if holds(IfsKind::Left) || holds(IfsKind::Right) {
            assert!(holds(IfsKind::Quasi), "one-sided ideal must be quasi (seed {seed})");
        }
    }
}

#[test]
fn dual_path_agreement_on_fixture_assignments() {
    let f2 = fixtures::f2();
    for a in [
        fixtures::a_ex(),
        fixtures::a_cut(),
        Ifs::delta(5),
        Ifs::constant(5, g(2, 5), g(1, 5)).unwrap(),
    ] {
        for kind in [IfsKind::Subgroupoid, IfsKind::Left, IfsKind::Right] {
            let direct = is_if(&f2, &a, kind).unwrap();
            let via = characterize_by_composition(&f2, &a, kind).unwrap();
            assert_eq!(direct.holds, via.holds, "routes disagree on {kind}");
        }
    }
    // delta on f2 via composition: compose(delta, delta) = delta ⊆ delta
    assert!(characterize_by_composition(&f2, &Ifs::delta(5), IfsKind::Left).unwrap().holds);
}

#[test]
fn characterization_rejects_non_composable_kinds() {
    let f2 = fixtures::f2();
    assert!(matches!(
        characterize_by_composition(&f2, &Ifs::delta(5), IfsKind::Quasi),
        Err(Error::UnsupportedKind { .. })
    ));
}

#[test]
fn dual_path_agreement_on_enumerated_carriers() {
    // every left-invertive table up to n=3, ten sampled assignments each
    for n in 1..=3usize {
        for (idx, gpd) in enumerate_groupoids(n, 1, &[LawId::LeftInvertive], usize::MAX)
            .unwrap()
            .enumerate()
        {
            for s in 0..10u64 {
                let a = random_ifs(n, 4, derive_seed(11, idx as u64, s));
                for kind in [IfsKind::Subgroupoid, IfsKind::Left, IfsKind::Right] {
                    let direct = is_if(&gpd, &a, kind).unwrap();
                    let via = characterize_by_composition(&gpd, &a, kind).unwrap();
                    assert_eq!(direct.holds, via.holds, "n={n} table {idx} kind {kind}");
                }
            }
        }
    }
}

#[test]
fn pointwise_witnesses_embed_strict_violations() {
    let f2 = fixtures::f2();
    for seed in 0..500u64 {
        let a = random_ifs(5, 5, seed);
        for kind in IfsKind::ALL {
            let v = is_if(&f2, &a, kind).unwrap();
            let Some(w) = v.witness else { continue };
            match w {
                IfsWitness::Pointwise {
                    elements,
                    gammas,
                    side,
                    actual,
                    bound,
                } => {
                    // recompute the product and the grades from scratch
                    let p = match (elements.len(), gammas.len()) {
                        (2, 1) => product(&f2, elements[0], gammas[0], elements[1]),
                        (3, 2) => {
                            let inner = product(&f2, elements[0], gammas[0], elements[1]);
                            product(&f2, inner, gammas[1], elements[2])
                        }
                        other => panic!("unexpected arity {other:?}"),
                    };
                    match side {
                        GradeSide::Mu => {
                            assert_eq!(a.mu(p), actual);
                            assert!(actual < bound);
                        }
                        GradeSide::Nu => {
                            assert_eq!(a.nu(p), actual);
                            assert!(actual > bound);
                        }
                    }
                }
                IfsWitness::Quasi {
                    element,
                    side,
                    a_delta,
                    delta_a,
                    bound,
                } => {
                    let d = Ifs::delta(5);
                    let ad = compose(&f2, &a, &d).unwrap();
                    let da = compose(&f2, &d, &a).unwrap();
                    match side {
                        GradeSide::Mu => {
                            assert_eq!((ad.mu(element), da.mu(element)), (a_delta, delta_a));
                            assert!(a_delta.min(delta_a) > bound);
                            assert_eq!(a.mu(element), bound);
                        }
                        GradeSide::Nu => {
                            assert_eq!((ad.nu(element), da.nu(element)), (a_delta, delta_a));
                            assert!(a_delta.max(delta_a) < bound);
                            assert_eq!(a.nu(element), bound);
                        }
                    }
                }
                IfsWitness::Containment { .. } => panic!("is_if does not emit containment witnesses"),
            }
        }
    }
}

fn arb_ifs(n: usize, d: u32) -> impl Strategy<Value = Ifs> {
    proptest::collection::vec(0..((d + 1) * (d + 2) / 2), n).prop_map(move |codes| {
        let mut mu = Vec::with_capacity(codes.len());
        let mut nu = Vec::with_capacity(codes.len());
        for code in codes {
            let mut idx = code;
            let mut p = 0;
            loop {
                let row = d - p + 1;
                if idx < row {
                    break;
                }
                idx -= row;
                p += 1;
            }
            mu.push(Grade::new(p, d).unwrap());
            nu.push(Grade::new(idx, d).unwrap());
        }
        Ifs::new(mu, nu).expect("sampled on the admissible grid")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dual_path_agreement_is_universal(a in arb_ifs(5, 8)) {
        for gpd in [fixtures::f2(), fixtures::f3()] {
            for kind in [IfsKind::Subgroupoid, IfsKind::Left, IfsKind::Right] {
                let direct = is_if(&gpd, &a, kind).unwrap();
                let via = characterize_by_composition(&gpd, &a, kind).unwrap();
                prop_assert_eq!(direct.holds, via.holds);
            }
        }
    }

    #[test]
    fn level_cuts_of_if_ideals_are_crisp_ideals(a in arb_ifs(5, 10)) {
        let f2 = fixtures::f2();
        let pairs = [
            (IfsKind::Right, CrispKind::RightIdeal),
            (IfsKind::Left, CrispKind::LeftIdeal),
            (IfsKind::Bi, CrispKind::Bi),
            (IfsKind::GeneralizedBi, CrispKind::GeneralizedBi),
        ];
        for (ifk, ck) in pairs {
            if is_if(&f2, &a, ifk).unwrap().holds {
                for k in 1..=10u32 {
                    let alpha = Grade::new(k, 10).unwrap();
                    let cut = level_cut(&a, alpha).unwrap();
                    prop_assert!(is_crisp(&f2, &cut, ck).unwrap().holds);
                }
            }
        }
    }
}
