// Scratch probe used to freeze expected values for the test suite.

use gamma_ag::*;

fn law_line(g: &GammaGroupoid, law: LawId) -> String {
    let r = check_law(g, law);
    match r.witness {
        Some(w) => format!(
            "{law}: fails elems={:?} gammas={:?} lhs={} rhs={}",
            w.elements.iter().map(|e| e.display_index()).collect::<Vec<_>>(),
            w.gammas.iter().map(|o| o.display_index()).collect::<Vec<_>>(),
            w.lhs.display_index(),
            w.rhs.display_index()
        ),
        None => format!("{law}: holds"),
    }
}

fn main() {
    let f1 = fixtures::f1();
    let f1g = fixtures::f1_gamma();
    let f2 = fixtures::f2();
    let f3 = fixtures::f3();

    println!("== F1 ==");
    for law in LawId::ALL {
        println!("  {}", law_line(&f1, law));
    }
    println!("== F1-gamma ==");
    for law in LawId::ALL {
        println!("  {}", law_line(&f1g, law));
    }
    // paper tuples
    let e = |i: usize| Element(i - 1);
    let a = GammaIndex(0);
    let b = GammaIndex(1);
    println!(
        "  9a1={} 1a9={}",
        product(&f1g, e(9), a, e(1)).display_index(),
        product(&f1g, e(1), a, e(9)).display_index()
    );
    let t1 = product(&f1g, product(&f1g, e(6), a, e(7)), b, e(8));
    let t2 = product(&f1g, e(6), a, product(&f1g, e(7), b, e(8)));
    println!("  (6a7)b8={} 6a(7b8)={}", t1.display_index(), t2.display_index());

    println!("== F2 ==");
    for law in LawId::ALL {
        println!("  {}", law_line(&f2, law));
    }
    let intra2 = intra_regularity(&f2);
    println!("  regular={}", intra2.regular());
    for (el, w) in &intra2.witnesses {
        println!(
            "  a={} x={} y={} ops=({},{},{}) reeval={}",
            el.display_index(),
            w.x.display_index(),
            w.y.display_index(),
            w.alpha.display_index(),
            w.beta.display_index(),
            w.gamma.display_index(),
            w.reevaluate(&f2).display_index()
        );
    }

    println!("== F3 ==");
    for law in LawId::ALL {
        println!("  {}", law_line(&f3, law));
    }
    let intra3 = intra_regularity(&f3);
    println!(
        "  regular={} failures={:?}",
        intra3.regular(),
        intra3.failures.iter().map(|e| e.display_index()).collect::<Vec<_>>()
    );

    println!("== duo ==");
    for (name, g) in [("F2", &f2), ("F3", &f3)] {
        for side in [IdealSide::Left, IdealSide::Right] {
            let v = is_duo(g, side).unwrap();
            println!(
                "  {name} {:?}: holds={} witness={:?}",
                side,
                v.holds,
                v.witness.map(|s| s.to_string())
            );
        }
    }

    println!("== compose(delta, A-ex) on F2 ==");
    let aex = fixtures::a_ex();
    let delta = Ifs::delta(5);
    let c = compose(&f2, &delta, &aex).unwrap();
    for i in 0..5 {
        println!("  elem {}: mu={} nu={}", i + 1, c.mu(Element(i)), c.nu(Element(i)));
    }
    let mut fact2 = 0;
    for x in 0..5 {
        for y in 0..5 {
            if product(&f2, Element(x), GammaIndex(0), Element(y)) == Element(1) {
                fact2 += 1;
            }
        }
    }
    println!("  factorizations of element 2: {fact2}");

    println!("== is_if witnesses ==");
    let acut = fixtures::a_cut();
    println!("  A-cut IF right: {:?}", is_if(&f2, &acut, IfsKind::Right).unwrap());
    println!("  A-ex IF left: {:?}", is_if(&f2, &aex, IfsKind::Left).unwrap());
    println!("  A-ex IF two-sided: {:?}", is_if(&f2, &aex, IfsKind::TwoSided).unwrap().holds);
    println!("  A-ex IF subgroupoid: {:?}", is_if(&f2, &aex, IfsKind::Subgroupoid).unwrap().holds);

    println!("== level cut ==");
    let cut = level_cut(&acut, Grade::new(2, 5).unwrap()).unwrap();
    println!("  A-cut at 2/5: {cut}");

    println!("== prod-cap on F3 ==");
    let afgh = fixtures::a_fgh();
    let bfgh = fixtures::b_fgh();
    println!(
        "  A two-sided: {} B two-sided: {}",
        is_if(&f3, &afgh, IfsKind::TwoSided).unwrap().holds,
        is_if(&f3, &bfgh, IfsKind::TwoSided).unwrap().holds
    );
    let comp = compose(&f3, &afgh, &bfgh).unwrap();
    let cap = intersect(&afgh, &bfgh).unwrap();
    println!("  compose == intersect: {}", equals(&comp, &cap).unwrap());
    for i in 0..5 {
        println!(
            "  elem {}: comp=({},{}) cap=({},{})",
            i + 1,
            comp.mu(Element(i)),
            comp.nu(Element(i)),
            cap.mu(Element(i)),
            cap.nu(Element(i))
        );
    }

    println!("== enumeration counts ==");
    for (n, laws) in [
        (1, vec![LawId::LeftInvertive]),
        (2, vec![LawId::LeftInvertive]),
        (3, vec![LawId::LeftInvertive]),
        (3, vec![LawId::LeftInvertive, LawId::AgStarStar]),
    ] {
        let count = enumerate_groupoids(n, 1, &laws, usize::MAX).unwrap().count();
        println!("  n={n} laws={laws:?}: {count}");
    }
    // brute force check for n=2, n=3
    for n in [2usize, 3] {
        let total = n.pow((n * n) as u32);
        let mut cnt = 0;
        for code in 0..total {
            let mut k = code;
            let mut rows = vec![vec![0usize; n]; n];
            for r in 0..n {
                for c in 0..n {
                    rows[r][c] = k % n;
                    k /= n;
                }
            }
            let g = validate_groupoid(n, 1, &[rows]).unwrap();
            if check_law(&g, LawId::LeftInvertive).holds {
                cnt += 1;
            }
        }
        println!("  brute n={n}: {cnt}");
    }

    println!("== hunt absorb on F2, D=1 ==");
    let cfg = HuntConfig {
        source: GroupoidSource::Fixed(f2.clone()),
        denominator: 1,
        samples: 10_000,
        seed: 1,
        relax_hypotheses: true,
    };
    let rep = hunt(TheoremId::Absorb, &cfg).unwrap();
    println!(
        "  relaxed: tried={} held={} cex at {:?}",
        rep.tried,
        rep.hypotheses_held,
        rep.counterexample.as_ref().map(|c| c.sample_index)
    );
    let cfg2 = HuntConfig {
        relax_hypotheses: false,
        ..cfg
    };
    let rep2 = hunt(TheoremId::Absorb, &cfg2).unwrap();
    println!(
        "  enforced: tried={} held={} cex={:?}",
        rep2.tried,
        rep2.hypotheses_held,
        rep2.counterexample.as_ref().map(|c| c.sample_index)
    );

    println!("== two-sided survivors on F2, D=5, seed=3, 10^4 ==");
    let mut survivors = Vec::new();
    for k in 0..10_000u64 {
        let a = random_ifs(5, 5, derive_seed(3, k, 0));
        if is_if(&f2, &a, IfsKind::TwoSided).unwrap().holds && !survivors.contains(&a) {
            survivors.push(a);
        }
    }
    println!("  distinct survivors: {}", survivors.len());

    println!("== semilattice on F2 ==");
    let mut ideals = vec![
        Ifs::delta(5),
        Ifs::constant(5, Grade::new(1, 2).unwrap(), Grade::new(1, 2).unwrap()).unwrap(),
        Ifs::constant(5, Grade::new(1, 5).unwrap(), Grade::new(3, 10).unwrap()).unwrap(),
    ];
    ideals.extend(survivors.iter().take(20).cloned());
    match semilattice_check(&f2, &ideals) {
        Ok(v) => {
            let c = v.conclusion.unwrap();
            println!("  holds={} parts:", c.holds);
            for p in c.parts {
                println!("    {}: {}", p.name, p.outcome);
            }
        }
        Err(e) => println!("  error: {e}"),
    }
}
