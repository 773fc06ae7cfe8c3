//! IFS construction, lattice operations, and the sup-min composition,
//! with property tests for the ordering and monotonicity contracts.

use gamma_ag::fixtures;
use gamma_ag::*;
use proptest::prelude::*;

fn g(p: u32, q: u32) -> Grade {
    Grade::new(p, q).unwrap()
}

fn e(i: usize) -> Element {
    Element(i - 1)
}

#[test]
fn make_ifs_validates() {
    let ok = Ifs::new(vec![g(1, 2), g(0, 1)], vec![g(1, 2), g(1, 1)]).unwrap();
    assert!(ok.is_valid());

    let err = Ifs::new(vec![g(7, 10)], vec![g(2, 5)]).unwrap_err();
    assert_eq!(
        err,
        Error::SumExceedsOne {
            element: 0,
            mu: g(7, 10),
            nu: g(2, 5)
        }
    );

    assert!(matches!(
        Ifs::new(vec![g(1, 2)], vec![g(1, 2), g(0, 1)]),
        Err(Error::LengthMismatch { .. })
    ));
}

#[test]
fn published_fixture_grades_are_reproduced() {
    let a_ex = fixtures::a_ex();
    assert_eq!(a_ex.mu(e(1)), Grade::one());
    assert_eq!(a_ex.nu(e(1)), g(3, 10));
    assert_eq!(a_ex.nu(e(2)), g(2, 5));
    assert_eq!(a_ex.nu(e(5)), g(1, 5));
    // element 1 breaks the sum constraint: 1 + 3/10
    assert!(!a_ex.is_valid());

    let a_cut = fixtures::a_cut();
    assert_eq!(a_cut.mu(e(2)), g(4, 5));
    assert_eq!(a_cut.nu(e(5)), Grade::one());
    assert!(!a_cut.is_valid());
}

#[test]
fn delta_is_the_constant_top() {
    let d = Ifs::delta(5);
    assert!(d.is_valid());
    assert!(d.is_delta());
    for x in (0..5).map(Element) {
        assert!(d.mu(x).is_one());
        assert!(d.nu(x).is_zero());
    }
    assert_eq!(Ifs::delta(1).carrier_size(), 1);
}

#[test]
fn compose_delta_with_itself_on_intra_regular_carrier() {
    let f2 = fixtures::f2();
    let d = Ifs::delta(5);
    assert!(equals(&compose(&f2, &d, &d).unwrap(), &d).unwrap());
    assert!(is_idempotent(&f2, &d).unwrap());
}

#[test]
fn compose_uses_the_empty_factorization_convention() {
    // constant table: every product lands on the first element, so the
    // second has no factorization and gets (0, 1)
    let table = vec![vec![0, 0], vec![0, 0]];
    let g2 = validate_groupoid(2, 1, &[table]).unwrap();
    let d = Ifs::delta(2);
    let c = compose(&g2, &d, &d).unwrap();
    assert!(c.mu(Element(0)).is_one());
    assert!(c.nu(Element(0)).is_zero());
    assert!(c.mu(Element(1)).is_zero());
    assert!(c.nu(Element(1)).is_one());
}

#[test]
fn compose_delta_with_a_ex_enumerates_factorizations() {
    // frozen from the factorization scan: element 2 factors 7 ways in the
    // 5-element table, all with right factor in {2,3,4,5}
    let f2 = fixtures::f2();
    let c = compose(&f2, &Ifs::delta(5), &fixtures::a_ex()).unwrap();
    assert!(c.mu(e(2)).is_zero());
    assert_eq!(c.nu(e(2)), g(1, 5));
    let factorizations = (0..5)
        .flat_map(|x| (0..5).map(move |y| (x, y)))
        .filter(|&(x, y)| product(&f2, Element(x), GammaIndex(0), Element(y)) == e(2))
        .count();
    assert_eq!(factorizations, 7);
}

#[test]
fn intersect_and_union_examples() {
    let a = fixtures::a_fgh();
    let b = fixtures::b_fgh();
    let cap = intersect(&a, &b).unwrap();
    let expected_mu = [g(3, 10), g(3, 10), g(3, 10), g(1, 10), g(2, 5)];
    let expected_nu = [g(3, 10), g(2, 5), g(1, 2), g(3, 5), g(3, 10)];
    for i in 1..=5 {
        assert_eq!(cap.mu(e(i)), expected_mu[i - 1]);
        assert_eq!(cap.nu(e(i)), expected_nu[i - 1]);
    }

    assert!(equals(&intersect(&a, &a).unwrap(), &a).unwrap());
    let d = Ifs::delta(5);
    assert!(equals(&intersect(&a, &d).unwrap(), &a).unwrap());
    assert!(equals(&union(&a, &d).unwrap(), &d).unwrap());
}

#[test]
fn contains_examples() {
    let a_ex = fixtures::a_ex();
    let d = Ifs::delta(5);
    assert!(contains(&a_ex, &d).unwrap());
    assert!(!contains(&d, &a_ex).unwrap());
    assert!(contains(&a_ex, &a_ex).unwrap());
    assert!(matches!(
        contains(&a_ex, &Ifs::delta(4)),
        Err(Error::SizeMismatch { .. })
    ));
}

#[test]
fn random_ifs_is_deterministic_and_valid() {
    let a = random_ifs(5, 10, 42);
    let b = random_ifs(5, 10, 42);
    assert_eq!(a, b);
    assert!(a.is_valid());
    assert_ne!(a, random_ifs(5, 10, 43));

    // D=1 stays on the {0,1} grid
    for seed in 0..50 {
        let s = random_ifs(4, 1, seed);
        assert!(s.is_valid());
        for x in (0..4).map(Element) {
            assert!(s.mu(x).is_zero() || s.mu(x).is_one());
            assert!(s.nu(x).is_zero() || s.nu(x).is_one());
        }
    }
}

fn arb_ifs(n: usize, d: u32) -> impl Strategy<Value = Ifs> {
    proptest::collection::vec(0..((d + 1) * (d + 2) / 2), n).prop_map(move |codes| {
        // decode each code into (p, q) with p + q <= d
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
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn contains_is_a_partial_order(a in arb_ifs(5, 6), b in arb_ifs(5, 6), c in arb_ifs(5, 6)) {
        prop_assert!(contains(&a, &a).unwrap());
        if contains(&a, &b).unwrap() && contains(&b, &a).unwrap() {
            prop_assert!(equals(&a, &b).unwrap());
        }
        if contains(&a, &b).unwrap() && contains(&b, &c).unwrap() {
            prop_assert!(contains(&a, &c).unwrap());
        }
    }

    #[test]
    fn compose_is_monotone(a in arb_ifs(5, 4), b in arb_ifs(5, 4), c in arb_ifs(5, 4)) {
        let f2 = fixtures::f2();
        let small = intersect(&a, &b).unwrap();
        // small ⊆ a, so small∘c ⊆ a∘c and c∘small ⊆ c∘a
        prop_assert!(contains(&compose(&f2, &small, &c).unwrap(), &compose(&f2, &a, &c).unwrap()).unwrap());
        prop_assert!(contains(&compose(&f2, &c, &small).unwrap(), &compose(&f2, &c, &a).unwrap()).unwrap());
    }

    #[test]
    fn compose_output_is_valid(a in arb_ifs(5, 6), b in arb_ifs(5, 6)) {
        for g in [fixtures::f2(), fixtures::f3()] {
            prop_assert!(compose(&g, &a, &b).unwrap().is_valid());
        }
    }

    #[test]
    fn lattice_ops_stay_valid(a in arb_ifs(5, 6), b in arb_ifs(5, 6)) {
        prop_assert!(intersect(&a, &b).unwrap().is_valid());
        prop_assert!(union(&a, &b).unwrap().is_valid());
        prop_assert!(contains(&intersect(&a, &b).unwrap(), &a).unwrap());
        prop_assert!(contains(&a, &union(&a, &b).unwrap()).unwrap());
    }
}
