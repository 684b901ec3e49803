mod common;

use std::sync::Arc;

use common::substitute_curve;
use serde_json::json;
use sympow::ideal::Ideal;
use sympow::lab::fixtures::{
    ci_pairs, coplanar_lines, regular_case_pairs, theorem_pairs, transverse_coordinate_pair, ungraded_ci_pair,
};
use sympow::lab::{
    affine_vanishing_report, check_hypotheses, monomial_curve_prime, verify_ci_product, verify_multi,
    verify_regular_case, verify_sp1, verify_sp2, GRADED_BRIDGE_NOTE,
};
use sympow::local::PrimeWitness;
use sympow::poly::{PolyRing, Polynomial};
use sympow::report::{Outcome, VerificationReport};
use sympow::Error;

fn xyz() -> Arc<PolyRing> {
    PolyRing::rationals(&["x", "y", "z"]).unwrap()
}

fn poly(r: &Arc<PolyRing>, s: &str) -> Polynomial {
    Polynomial::parse(s, r).unwrap()
}

fn prime(r: &Arc<PolyRing>, gens: &[&str]) -> PrimeWitness {
    PrimeWitness::new(Ideal::parse(r, gens).unwrap(), None, None).unwrap()
}

fn curve345() -> PrimeWitness {
    monomial_curve_prime(&[3, 4, 5], &xyz()).unwrap()
}

/// Recomputes the intersection of symbolic powers and checks that the
/// reported witness lies in it without vanishing to the target order.
fn replay_containment_witness(primes: &[&PrimeWitness], exponents: &[u32], report: &VerificationReport) {
    let w = report.witness.as_ref().expect("failing report carries a witness");
    for (p, &n) in primes.iter().zip(exponents) {
        assert!(p.symbolic_power(n).unwrap().ideal.contains(w).unwrap());
    }
    let target: u64 = exponents.iter().map(|&n| n as u64).sum();
    assert!(w.order_at_origin().unwrap() < target);
    assert!(!Ideal::maximal(w.ring())
        .power(target as u32)
        .unwrap()
        .contains(w)
        .unwrap());
}

#[test]
fn hypothesis_examples() {
    let c = coplanar_lines().unwrap();
    let h = check_hypotheses(&c.p, &c.q).unwrap();
    assert!(h.radical_sum_is_maximal);
    assert_eq!((h.dim_p(), h.dim_q()), (1, 1));
    assert!(!h.dims_sum_to_d);

    for d in 2..=4 {
        for i in 1..d {
            let t = transverse_coordinate_pair(d, i).unwrap();
            assert!(check_hypotheses(&t.p, &t.q).unwrap().all_hold());
        }
    }

    let r = xyz();
    let h = check_hypotheses(&prime(&r, &["x"]), &prime(&r, &["x"])).unwrap();
    assert!(!h.radical_sum_is_maximal);

    let other = PolyRing::rationals(&["u", "v", "w"]).unwrap();
    assert_eq!(
        check_hypotheses(&prime(&r, &["x"]), &prime(&other, &["u"])).unwrap_err(),
        Error::RingMismatch
    );
}

#[test]
fn coplanar_lines_fail_only_as_inapplicable() {
    let c = coplanar_lines().unwrap();
    let rep = verify_sp2(&c.p, &c.q, 1, 1).unwrap();
    assert!(!rep.holds);
    assert!(!rep.applicable);
    assert_eq!(rep.outcome(), Outcome::Inapplicable);
    assert!(!rep.outcome().is_failure());
    let r = c.p.ideal().ring().clone();
    assert_eq!(rep.witness, Some(poly(&r, "x2")));
    assert_eq!(rep.details["min_order"], json!(1));
    replay_containment_witness(&[&c.p, &c.q], &[1, 1], &rep);

    let one = verify_sp1(&c.p, &c.q, 1).unwrap();
    assert_eq!(one.witness, Some(poly(&r, "x2")));
}

#[test]
fn transverse_coordinate_pairs_hold_sharply() {
    for d in 2..=4 {
        for i in 1..d {
            let t = transverse_coordinate_pair(d, i).unwrap();
            for m in 1..=3 {
                for n in 1..=3 {
                    let rep = verify_sp2(&t.p, &t.q, m, n).unwrap();
                    assert_eq!(rep.outcome(), Outcome::Holds, "{} m={m} n={n}", t.name);
                    assert!(rep.certified);
                    assert_eq!(rep.details["sharp"], json!(true));
                    let pq =
                        t.p.ideal()
                            .power(m)
                            .unwrap()
                            .product(&t.q.ideal().power(n).unwrap())
                            .unwrap();
                    let meet =
                        t.p.symbolic_power(m)
                            .unwrap()
                            .ideal
                            .intersection(&t.q.symbolic_power(n).unwrap().ideal)
                            .unwrap();
                    assert!(meet.equals(&pq).unwrap());
                }
            }
            let rep = verify_sp1(&t.p, &t.q, 3).unwrap();
            assert_eq!(rep.outcome(), Outcome::Holds);
        }
    }
}

#[test]
fn curve_against_coordinate_plane() {
    let p = curve345();
    let r = p.ideal().ring().clone();
    for v in ["x", "y", "z"] {
        let q = prime(&r, &[v]);
        let rep = verify_sp2(&p, &q, 2, 2).unwrap();
        assert_eq!(rep.outcome(), Outcome::Holds, "plane {v}");
        assert!(rep.certified);
        assert!(!rep.notes.iter().any(|n| n == GRADED_BRIDGE_NOTE));

        // independent check: generators of the intersection lie in m^4
        let meet = p
            .symbolic_power(2)
            .unwrap()
            .ideal
            .intersection(&q.symbolic_power(2).unwrap().ideal)
            .unwrap();
        let m4 = Ideal::maximal(&r).power(4).unwrap();
        assert!(m4.contains_ideal(&meet).unwrap());

        assert_eq!(verify_sp1(&p, &q, 2).unwrap().outcome(), Outcome::Holds);
    }
}

#[test]
fn sp1_equals_sp2_with_second_exponent_one() {
    let mut pairs = theorem_pairs().unwrap();
    pairs.push(coplanar_lines().unwrap());
    for pr in pairs {
        for m in 1..=2 {
            assert_eq!(
                verify_sp1(&pr.p, &pr.q, m).unwrap(),
                verify_sp2(&pr.p, &pr.q, m, 1).unwrap(),
                "{}",
                pr.name
            );
        }
    }
}

#[test]
fn multi_examples() {
    let r = xyz();
    let axes = [prime(&r, &["x"]), prime(&r, &["y"]), prime(&r, &["z"])];
    let rep = verify_multi(&axes, &[1, 1, 1]).unwrap();
    assert_eq!(rep.outcome(), Outcome::Holds);
    assert_eq!(rep.details["min_order"], json!(3));
    let meet = axes[0]
        .ideal()
        .intersection(axes[1].ideal())
        .unwrap()
        .intersection(axes[2].ideal())
        .unwrap();
    assert!(meet.equals(&Ideal::parse(&r, &["x*y*z"]).unwrap()).unwrap());

    let x4 = PolyRing::indexed("x", 4).unwrap();
    let planes = [prime(&x4, &["x1", "x2"]), prime(&x4, &["x3", "x4"])];
    let rep = verify_multi(&planes, &[2, 1]).unwrap();
    assert_eq!(rep.outcome(), Outcome::Holds);
    let pieces = planes[0]
        .ideal()
        .power(2)
        .unwrap()
        .intersection(planes[1].ideal())
        .unwrap();
    assert!(Ideal::maximal(&x4).power(3).unwrap().contains_ideal(&pieces).unwrap());

    for pr in theorem_pairs().unwrap().into_iter().chain([coplanar_lines().unwrap()]) {
        let two = [pr.p.clone(), pr.q.clone()];
        assert_eq!(
            verify_multi(&two, &[2, 1]).unwrap(),
            verify_sp2(&pr.p, &pr.q, 2, 1).unwrap(),
            "{}",
            pr.name
        );
    }

    assert!(verify_multi(&axes, &[1, 1]).is_err());
    assert!(verify_multi(&axes, &[1, 0, 1]).is_err());
    assert!(verify_multi(&[], &[]).is_err());
}

#[test]
fn multi_with_dimension_excess_is_inapplicable() {
    let r = xyz();
    let rep = verify_multi(
        &[prime(&r, &["x"]), prime(&r, &["y"]), prime(&r, &["x", "z"])],
        &[1, 1, 1],
    )
    .unwrap();
    assert!(!rep.applicable);
    if !rep.holds {
        replay_containment_witness(
            &[&prime(&r, &["x"]), &prime(&r, &["y"]), &prime(&r, &["x", "z"])],
            &[1, 1, 1],
            &rep,
        );
    }
}

#[test]
fn monotone_in_the_first_exponent() {
    for pr in theorem_pairs().unwrap() {
        for m in 1..=2 {
            for n in 1..=2 {
                if verify_sp2(&pr.p, &pr.q, m, n).unwrap().holds {
                    let lower =
                        pr.p.symbolic_power(m)
                            .unwrap()
                            .ideal
                            .intersection(&pr.q.symbolic_power(n).unwrap().ideal)
                            .unwrap();
                    let upper =
                        pr.p.symbolic_power(m + 1)
                            .unwrap()
                            .ideal
                            .intersection(&pr.q.symbolic_power(n).unwrap().ideal)
                            .unwrap();
                    assert!(lower.contains_ideal(&upper).unwrap(), "{} m={m} n={n}", pr.name);
                }
            }
        }
    }
}

#[test]
fn curated_pairs_hold_with_certified_powers() {
    let pairs = theorem_pairs().unwrap();
    assert!(pairs.len() >= 10);
    for pr in pairs {
        assert!(
            pr.p.symbolic_powers_certified() && pr.q.symbolic_powers_certified(),
            "{}",
            pr.name
        );
        for (m, n) in [(1, 1), (2, 1), (1, 2)] {
            let rep = verify_sp2(&pr.p, &pr.q, m, n).unwrap();
            assert_eq!(rep.outcome(), Outcome::Holds, "{} m={m} n={n}", pr.name);
            assert!(rep.certified);
        }
    }
}

#[test]
fn monomial_curves_match_parametrizations() {
    let r = xyz();
    let twisted = monomial_curve_prime(&[1, 2, 3], &r).unwrap();
    assert!(twisted
        .ideal()
        .equals(&Ideal::parse(&r, &["y - x^2", "z - x^3"]).unwrap())
        .unwrap());

    let c = curve345();
    assert!(c
        .ideal()
        .equals(&Ideal::parse(&r, &["y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"]).unwrap())
        .unwrap());
    assert!(c.ideal().contains(&poly(&r, "y^2 - x*z")).unwrap());
    assert_eq!(c.claimed_dim(), 1);
    assert_eq!(c.witness(), Some(&poly(&r, "x")));
    for g in c.ideal().gb().unwrap().elements() {
        assert!(substitute_curve(g, &[3, 4, 5]).is_empty());
    }
    // nothing of low degree off the ideal is killed by the parametrization
    assert!(!substitute_curve(&poly(&r, "y^2 - x*z + x"), &[3, 4, 5]).is_empty());

    let xy = PolyRing::rationals(&["x", "y"]).unwrap();
    let cusp = monomial_curve_prime(&[2, 3], &xy).unwrap();
    assert!(cusp
        .ideal()
        .equals(&Ideal::parse(&xy, &["y^2 - x^3"]).unwrap())
        .unwrap());

    assert!(monomial_curve_prime(&[2, 4, 6], &r).is_err());
    assert!(monomial_curve_prime(&[1, 0, 3], &r).is_err());
    assert!(monomial_curve_prime(&[1, 2], &r).is_err());
}

#[test]
fn affine_examples() {
    let x = PolyRing::indexed("x", 3).unwrap();
    let p = prime(&x, &["x1", "x2"]);
    let q = prime(&x, &["x3"]);
    let rep = affine_vanishing_report(&poly(&x, "x1*x3"), &p, &q).unwrap();
    assert_eq!(rep.outcome(), Outcome::Holds);
    assert_eq!(
        (
            rep.details["ord_p"].clone(),
            rep.details["ord_q"].clone(),
            rep.details["ord_origin"].clone()
        ),
        (json!(1), json!(1), json!(2))
    );

    let c = coplanar_lines().unwrap();
    let rep = affine_vanishing_report(&poly(&x, "x2"), &c.p, &c.q).unwrap();
    assert!(rep.holds && !rep.applicable);
    assert_eq!(rep.details["ord_origin"], json!(1));
    assert_eq!(rep.details["bound_met"], json!(false));
    assert!(rep.witness.is_none());

    let curve = curve345();
    let r = curve.ideal().ring().clone();
    let plane = prime(&r, &["z"]);
    let sq = curve.ideal().power(2).unwrap();
    for g in curve.symbolic_power(2).unwrap().ideal.gb().unwrap().elements() {
        let f = if plane.ideal().contains(g).unwrap() {
            g.clone()
        } else {
            g.multiply(&poly(&r, "z")).unwrap()
        };
        let rep = affine_vanishing_report(&f, &curve, &plane).unwrap();
        assert_eq!(rep.outcome(), Outcome::Holds, "{f}");
        let ord_p = rep.details["ord_p"].as_u64().unwrap();
        let ord_q = rep.details["ord_q"].as_u64().unwrap();
        assert!(ord_p >= 2 || sq.contains(g).unwrap());
        assert!(rep.details["ord_origin"].as_u64().unwrap() >= ord_p + ord_q);
    }

    assert_eq!(
        affine_vanishing_report(&poly(&x, "x1"), &p, &q).unwrap_err(),
        Error::NotInIntersection
    );
    assert_eq!(
        affine_vanishing_report(&Polynomial::zero(&x), &p, &q).unwrap_err(),
        Error::ZeroPolynomial
    );
}

#[test]
fn regular_case_examples() {
    let r = xyz();
    let cases = [
        (&["x", "y"][..], &["z"][..], 2, 1),
        (&["x"][..], &["y", "z"][..], 2, 2),
        (&["x", "y"][..], &["x*y - z^2"][..], 2, 1),
    ];
    for (p, q, m, n) in cases {
        let (p, q) = (prime(&r, p), prime(&r, q));
        let rep = verify_regular_case(&p, &q, m, n).unwrap();
        assert_eq!(rep.outcome(), Outcome::Holds);
        assert_eq!(rep.details["contained_in_max_power"], json!(true));
    }

    // a second line through the origin: dimensions fall short and the
    // stronger containment really fails
    let (p, q) = (prime(&r, &["x", "y"]), prime(&r, &["x - z", "y"]));
    let rep = verify_regular_case(&p, &q, 2, 1).unwrap();
    assert_eq!(rep.outcome(), Outcome::Inapplicable);
    let w = rep.witness.unwrap();
    assert!(!p
        .ideal()
        .power(2)
        .unwrap()
        .product(&Ideal::maximal(&r))
        .unwrap()
        .contains(&w)
        .unwrap());

    let pq = [prime(&r, &["x"]), prime(&r, &["y", "z"])];
    let meet = pq[0]
        .ideal()
        .power(2)
        .unwrap()
        .intersection(&pq[1].ideal().power(2).unwrap())
        .unwrap();
    let expect = pq[0]
        .ideal()
        .power(2)
        .unwrap()
        .product(&pq[1].ideal().power(2).unwrap())
        .unwrap();
    assert!(meet.equals(&expect).unwrap());

    for pr in regular_case_pairs().unwrap() {
        assert_eq!(
            verify_regular_case(&pr.p, &pr.q, 2, 2).unwrap().outcome(),
            Outcome::Holds,
            "{}",
            pr.name
        );
    }

    let c = coplanar_lines().unwrap();
    let rep = verify_regular_case(&c.p, &c.q, 1, 1).unwrap();
    assert_eq!(rep.outcome(), Outcome::Inapplicable);
    let w = rep.witness.unwrap();
    let target = c.p.ideal().product(&Ideal::maximal(w.ring())).unwrap();
    assert!(!target.contains(&w).unwrap());
    assert!(c.p.ideal().contains(&w).unwrap() && c.q.ideal().contains(&w).unwrap());

    assert_eq!(
        verify_regular_case(&curve345(), &prime(&r, &["x"]), 1, 1).unwrap_err(),
        Error::NotCoordinatePrime
    );
}

#[test]
fn ci_examples() {
    let r = xyz();
    let i = |g: &[&str]| Ideal::parse(&r, g).unwrap();
    for (a, b, m, n) in [(&["x"][..], &["y", "z"][..], 2, 1), (&["x", "y"][..], &["z"][..], 2, 2)] {
        let rep = verify_ci_product(&i(a), &i(b), m, n).unwrap();
        assert_eq!(rep.outcome(), Outcome::Holds);
        assert!(!rep.notes.iter().any(|s| s == GRADED_BRIDGE_NOTE));
    }

    let u = ungraded_ci_pair().unwrap();
    let rep = verify_ci_product(&u.i, &u.j, 2, 3).unwrap();
    assert_eq!(rep.outcome(), Outcome::Holds);
    assert!(rep.notes.iter().any(|s| s == GRADED_BRIDGE_NOTE));

    for pr in ci_pairs().unwrap() {
        let rep = verify_ci_product(&pr.i, &pr.j, 2, 2).unwrap();
        assert_eq!(rep.outcome(), Outcome::Holds, "{}", pr.name);
        assert_eq!(rep.details["product_in_max_power"], json!(true));
    }

    let rep = verify_ci_product(&i(&["x"]), &i(&["x"]), 1, 1).unwrap();
    assert_eq!(rep.outcome(), Outcome::Inapplicable);
    let w = rep.witness.unwrap();
    assert!(!i(&["x^2"]).contains(&w).unwrap());

    assert!(matches!(
        verify_ci_product(&i(&["x", "x*y"]), &i(&["z"]), 1, 1),
        Err(Error::NotRegularSequence(_))
    ));
    assert!(matches!(
        verify_ci_product(&i(&["x + 1"]), &i(&["y"]), 1, 1),
        Err(Error::NotRegularSequence(_))
    ));
    assert!(verify_ci_product(&i(&["x"]), &i(&["y"]), 0, 1).is_err());
}

#[test]
fn failing_reports_replay() {
    // every non-holding containment report across the fixtures replays
    let mut pairs = theorem_pairs().unwrap();
    pairs.push(coplanar_lines().unwrap());
    let r = xyz();
    pairs.push(sympow::lab::fixtures::PrimePair {
        name: "same_line_twice".into(),
        p: prime(&r, &["x", "y"]),
        q: prime(&r, &["x", "y"]),
    });
    let mut replayed = 0;
    for pr in pairs {
        for (m, n) in [(1, 1), (2, 1)] {
            let rep = verify_sp2(&pr.p, &pr.q, m, n).unwrap();
            if !rep.holds {
                replay_containment_witness(&[&pr.p, &pr.q], &[m, n], &rep);
                replayed += 1;
            }
        }
    }
    assert!(replayed >= 3);
}
