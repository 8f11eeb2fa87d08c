//! End-to-end acceptance gate. Each test prints one pass line; run with
//! `cargo test -p sgtrace --test acceptance -- --nocapture` to see them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgtrace::oracle::Oracle;
use sgtrace::{
    check_duality, classify, intermediate_ideals, run_battery, semigroups_up_to_genus,
    trace_ideals, GorensteinSmall, NumericalSemigroup, RelativeIdeal, DEFAULT_SEED,
};

fn sg(gens: &[i64]) -> NumericalSemigroup {
    NumericalSemigroup::from_generators(gens).unwrap()
}

fn ideal<'h>(h: &'h NumericalSemigroup, gens: &[i64]) -> RelativeIdeal<'h> {
    RelativeIdeal::new(h, gens).unwrap()
}

#[test]
fn acceptance_1_golden_examples() {
    let h = sg(&[3, 4]);
    let e = ideal(&h, &[3, 8]);
    assert_eq!(e.trace().min_gens(), &[3, 4]);
    assert_eq!(e.subtrace().unwrap().min_gens(), &[6, 7, 8]);

    let h = sg(&[5, 6, 7]);
    let e = ideal(&h, &[6, 10, 14]);
    assert_eq!(h.conductor_ideal().min_gens(), &[10, 11, 12, 13, 14]);
    assert_eq!(e.trace().min_gens(), &[6, 7, 10]);
    assert!(!e.is_trace());
    // E is not a translate of an ideal inside H by any nonzero member
    for a in [5, 6, 7] {
        assert!(!e.shift(-a).in_ambient());
    }

    let h = sg(&[7, 10]);
    let e = ideal(&h, &[14, 50]);
    let d1 = e.dual();
    assert_eq!(d1.min_gens(), &[0, 6]);
    let d2 = d1.product(&d1).unwrap();
    assert_eq!(d2.min_gens(), &[0, 6, 12]);
    let d3 = d2.product(&d1).unwrap();
    assert_eq!(d3.min_gens(), &[0, 6, 12, 18]);
    assert_eq!(d3.product(&d1).unwrap(), d3);
    assert_eq!(e.trace().min_gens(), &[14, 20]);
    assert_eq!(e.subtrace().unwrap().min_gens(), &[38, 42, 44, 50]);

    let h = sg(&[14, 15, 20, 21, 25]);
    let e = ideal(&h, &[21, 28, 29, 30, 34]);
    assert!(e.is_trace());
    assert!(!e.is_reflexive());
    assert_eq!(
        e.reflexive_hull().min_gens(),
        &[21, 28, 29, 30, 34, 39, 40]
    );

    println!("acceptance 1: PASS (four golden ideal pipelines match frozen values)");
}

#[test]
fn acceptance_2_classification() {
    for a in (3..=21).step_by(2) {
        let v = classify(&sg(&[2, a]));
        assert_eq!(v.gorenstein_small, GorensteinSmall::Small, "a = {}", a);
        assert!(v.finite_overrings);
    }
    for gens in [&[3i64, 4][..], &[3, 5]] {
        let v = classify(&sg(gens));
        assert_eq!(v.gorenstein_small, GorensteinSmall::Small);
        assert!(v.finite_overrings);
    }
    for gens in [&[3i64, 4, 5][..], &[3, 5, 7]] {
        let h = sg(gens);
        let v = classify(&h);
        assert!(v.finite_overrings);
        assert!(!h.is_symmetric());
        assert_eq!(v.gorenstein_small, GorensteinSmall::NotApplicable);
    }
    let v = classify(&sg(&[4, 5]));
    assert_eq!(v.gorenstein_small, GorensteinSmall::NotSmall);
    assert!(!v.finite_overrings);
    let v = classify(&sg(&[5, 6, 7]));
    assert_ne!(v.gorenstein_small, GorensteinSmall::Small);
    assert!(!v.finite_overrings);

    println!("acceptance 2: PASS (classification verdicts for all listed semigroups)");
}

#[test]
fn acceptance_3_counting() {
    let mut small_list: Vec<Vec<i64>> = vec![vec![1], vec![3, 4], vec![3, 5]];
    for a in (3..=15).step_by(2) {
        small_list.push(vec![2, a]);
    }
    for gens in &small_list {
        let h = sg(gens);
        let ideals = trace_ideals(&h).unwrap();
        assert_eq!(
            ideals.len() as i64,
            h.genus() + 1,
            "H = {:?}",
            h.generators()
        );
        for e in &ideals {
            assert!(e.is_integrally_closed().unwrap(), "H = {:?}", h.generators());
        }
    }
    let mut swept = 0;
    for h in semigroups_up_to_genus(8).unwrap() {
        let count = trace_ideals(&h).unwrap().len();
        assert!(
            count > h.small_elements().len(),
            "H = {:?}",
            h.generators()
        );
        swept += 1;
    }
    assert_eq!(swept, 156);

    println!(
        "acceptance 3: PASS (g+1 closed trace ideals on the small list, n+1 lower bound over {} semigroups)",
        swept
    );
}

#[test]
fn acceptance_4_duality() {
    let mut symmetric = 0;
    for h in semigroups_up_to_genus(8).unwrap() {
        if !h.is_symmetric() {
            continue;
        }
        let r = check_duality(&h).unwrap();
        assert!(r.bijective, "H = {:?}", h.generators());
        symmetric += 1;
    }

    let h = sg(&[3, 4]);
    let r = check_duality(&h).unwrap();
    let traces: Vec<&[i64]> = r.trace_ideals.iter().map(|e| e.min_gens()).collect();
    assert_eq!(traces, [&[0][..], &[3, 4], &[4, 6], &[6, 7, 8]]);
    let overs: Vec<&[i64]> = r.oversemigroups.iter().map(|t| t.generators()).collect();
    assert_eq!(overs, [&[1][..], &[2, 3], &[3, 4], &[3, 4, 5]]);
    assert_eq!(r.pairing, [Some(2), Some(3), Some(1), Some(0)]);

    println!(
        "acceptance 4: PASS (duality bijective for all {} symmetric semigroups of genus <= 8, explicit pairing checked)",
        symmetric
    );
}

#[test]
fn acceptance_5_property_battery() {
    let r = run_battery(8, 500, DEFAULT_SEED).unwrap();
    for c in &r.checks {
        assert!(c.cases > 0, "check never ran: {}", c.name);
        assert_eq!(c.failed, 0, "{} failed on {:?}", c.name, c.examples);
    }
    println!(
        "acceptance 5: PASS (battery: {} checks, {} cases, 0 failures over {} semigroups; star distribution holds as inclusion, strictness witnessed over [4, 6, 7])",
        r.checks.len(),
        r.total_cases(),
        r.semigroups
    );
}

fn random_semigroup(rng: &mut ChaCha8Rng) -> NumericalSemigroup {
    loop {
        let k = rng.random_range(2..=4);
        let gens: Vec<i64> = (0..k).map(|_| rng.random_range(2..=30)).collect();
        if let Ok(h) = NumericalSemigroup::from_generators(&gens) {
            if h.genus() <= 12 {
                return h;
            }
        }
    }
}

fn random_relative<'h>(
    h: &'h NumericalSemigroup,
    rng: &mut ChaCha8Rng,
) -> RelativeIdeal<'h> {
    let c = h.conductor();
    let k = rng.random_range(1..=3);
    let gens: Vec<i64> = (0..k)
        .map(|_| rng.random_range(-(c + 5)..=2 * c + 5))
        .collect();
    RelativeIdeal::new(h, &gens).unwrap()
}

#[test]
fn acceptance_6_oracle_equivalence() {
    let agree = |o: &Oracle, w: &sgtrace::oracle::WindowSet, e: &RelativeIdeal<'_>| {
        o.minimal_generators(w) == e.min_gens()
    };

    let mut grid_cases = 0u64;
    for h in semigroups_up_to_genus(6).unwrap() {
        let o = Oracle::new(h.generators()).unwrap();
        assert_eq!(o.conductor(), h.conductor());
        assert_eq!(o.multiplicity(), h.multiplicity());
        assert_eq!(o.small_elements(), h.small_elements());
        for x in 0..=4 * h.conductor().max(1) {
            assert_eq!(o.semigroup_member(x), h.contains(x));
        }
        assert!(agree(&o, &o.canonical_window(), &h.canonical_ideal()));
        assert!(agree(&o, &o.conductor_window(), &h.conductor_ideal()));

        let ideals = intermediate_ideals(&h).unwrap();
        let windows: Vec<_> = ideals.iter().map(|e| o.span(e.min_gens())).collect();
        for (e, w) in ideals.iter().zip(&windows) {
            assert!(agree(&o, &o.dual(w), &e.dual()), "dual H = {:?}", h.generators());
            assert!(agree(&o, &o.trace(w), &e.trace()), "trace");
            assert_eq!(o.is_trace(w), e.is_trace(), "is_trace");
            assert!(agree(&o, &o.reflexive_hull(w), &e.reflexive_hull()), "hull");
            assert!(agree(&o, &o.end_semigroup(w), &e.end_semigroup()), "end");
            assert!(
                agree(&o, &o.integral_closure(w), &e.integral_closure().unwrap()),
                "closure"
            );
            assert!(
                agree(&o, &o.subtrace(w).unwrap(), &e.subtrace().unwrap()),
                "subtrace H = {:?}, E = {:?}",
                h.generators(),
                e.min_gens()
            );
            grid_cases += 7;
        }
        for (a, wa) in ideals.iter().zip(&windows) {
            for (b, wb) in ideals.iter().zip(&windows) {
                assert!(agree(&o, &o.sum(wa, wb), &a.sum(b).unwrap()), "sum");
                assert!(agree(&o, &o.product(wa, wb), &a.product(b).unwrap()), "product");
                assert!(
                    agree(&o, &o.intersect(wa, wb), &a.intersect(b).unwrap()),
                    "intersect"
                );
                assert!(agree(&o, &o.colon(wa, wb), &a.colon(b).unwrap()), "colon");
                assert!(agree(&o, &o.star(wa, wb), &a.star(b).unwrap()), "star");
                grid_cases += 5;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut random_cases = 0u64;
    while random_cases < 10_000 {
        let h = random_semigroup(&mut rng);
        let o = Oracle::new(h.generators()).unwrap();
        let pool = intermediate_ideals(&h).unwrap();
        for step in 0..20 {
            let pick = |rng: &mut ChaCha8Rng| rng.random_range(0..pool.len());
            match step % 10 {
                0 => {
                    let e = random_relative(&h, &mut rng);
                    assert!(agree(&o, &o.dual(&o.span(e.min_gens())), &e.dual()));
                }
                1 => {
                    let e = random_relative(&h, &mut rng);
                    assert!(agree(&o, &o.trace(&o.span(e.min_gens())), &e.trace()));
                }
                2 => {
                    let e = random_relative(&h, &mut rng);
                    assert!(agree(
                        &o,
                        &o.reflexive_hull(&o.span(e.min_gens())),
                        &e.reflexive_hull()
                    ));
                }
                3 => {
                    let e = &pool[pick(&mut rng)];
                    assert!(agree(
                        &o,
                        &o.integral_closure(&o.span(e.min_gens())),
                        &e.integral_closure().unwrap()
                    ));
                }
                4 => {
                    let e = &pool[pick(&mut rng)];
                    assert!(agree(
                        &o,
                        &o.end_semigroup(&o.span(e.min_gens())),
                        &e.end_semigroup()
                    ));
                }
                5 => {
                    let e = &pool[pick(&mut rng)];
                    assert!(agree(
                        &o,
                        &o.subtrace(&o.span(e.min_gens())).unwrap(),
                        &e.subtrace().unwrap()
                    ));
                }
                6 => {
                    let a = random_relative(&h, &mut rng);
                    let b = random_relative(&h, &mut rng);
                    assert!(agree(
                        &o,
                        &o.sum(&o.span(a.min_gens()), &o.span(b.min_gens())),
                        &a.sum(&b).unwrap()
                    ));
                }
                7 => {
                    let a = random_relative(&h, &mut rng);
                    let b = random_relative(&h, &mut rng);
                    assert!(agree(
                        &o,
                        &o.product(&o.span(a.min_gens()), &o.span(b.min_gens())),
                        &a.product(&b).unwrap()
                    ));
                }
                8 => {
                    let a = random_relative(&h, &mut rng);
                    let b = random_relative(&h, &mut rng);
                    assert!(agree(
                        &o,
                        &o.colon(&o.span(a.min_gens()), &o.span(b.min_gens())),
                        &a.colon(&b).unwrap()
                    ));
                }
                _ => {
                    let a = &pool[pick(&mut rng)];
                    let b = &pool[pick(&mut rng)];
                    assert!(agree(
                        &o,
                        &o.star(&o.span(a.min_gens()), &o.span(b.min_gens())),
                        &a.star(b).unwrap()
                    ));
                }
            }
            random_cases += 1;
        }
    }

    println!(
        "acceptance 6: PASS (oracle agreement: {} grid cases at genus <= 6, {} random cases at genus <= 12)",
        grid_cases, random_cases
    );
}
