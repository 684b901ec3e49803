mod common;

use std::sync::Arc;

use common::{dense, dense_add, min_degree, q, schoolbook_mul, Dense};
use num::BigRational;
use proptest::prelude::*;
use sympow::poly::{CoefficientField, Monomial, PolyRing, Polynomial};
use sympow::Error;

fn ring() -> Arc<PolyRing> {
    PolyRing::rationals(&["x", "y", "z"]).unwrap()
}

fn gf7() -> Arc<PolyRing> {
    PolyRing::new(CoefficientField::prime(7).unwrap(), &["x", "y"]).unwrap()
}

fn term() -> impl Strategy<Value = ([u32; 3], i64, i64)> {
    ([0u32..4, 0u32..4, 0u32..4], -9i64..10, 1i64..5)
}

prop_compose! {
    fn poly()(terms in prop::collection::vec(term(), 0..6)) -> Polynomial {
        let r = ring();
        Polynomial::from_terms(
            &r,
            terms.into_iter().map(|(e, n, d)| (Monomial::from_exponents(&e), BigRational::new(n.into(), d.into()))),
        )
        .unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_matches_schoolbook(a in poly(), b in poly()) {
        let got = dense(&a.multiply(&b).unwrap());
        prop_assert_eq!(got, schoolbook_mul(&dense(&a), &dense(&b)));
    }

    #[test]
    fn sum_matches_termwise(a in poly(), b in poly()) {
        prop_assert_eq!(dense(&a.checked_add(&b).unwrap()), dense_add(&dense(&a), &dense(&b)));
    }

    #[test]
    fn render_then_parse_is_identity(a in poly()) {
        let back = Polynomial::parse(&a.to_string(), a.ring()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        let r = a.ring().clone();
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &Polynomial::one(&r), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn order_at_origin_is_additive(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let ab = a.multiply(&b).unwrap();
        prop_assert_eq!(ab.order_at_origin(), Some(a.order_at_origin().unwrap() + b.order_at_origin().unwrap()));
        prop_assert_eq!(a.order_at_origin().map(|k| k as u32), min_degree(&dense(&a)));
    }

    #[test]
    fn prime_field_coefficients_stay_reduced(n in -100i64..100, m in -100i64..100) {
        let r = gf7();
        let a = Polynomial::parse(&format!("{n}*x + {m}"), &r).unwrap();
        for (_, c) in a.terms() {
            prop_assert!(c.is_integer() && *c >= q(0) && *c < q(7));
        }
        let sq = a.multiply(&a).unwrap();
        let expect: Dense = schoolbook_mul(&dense(&a), &dense(&a))
            .into_iter()
            .map(|(e, c)| (e, BigRational::from_integer(c.to_integer().rem_euclid_big(7))))
            .filter(|(_, c)| *c != q(0))
            .collect();
        prop_assert_eq!(dense(&sq), expect);
    }
}

trait RemEuclid {
    fn rem_euclid_big(&self, p: i64) -> num::BigInt;
}

impl RemEuclid for num::BigInt {
    fn rem_euclid_big(&self, p: i64) -> num::BigInt {
        let p = num::BigInt::from(p);
        ((self % &p) + &p) % &p
    }
}

#[test]
fn rendering_conventions() {
    let r = ring();
    let cases = [
        ("y^2 - x*z", "y^2 - x*z"),
        ("-2 + 3/4*x^2*y", "3/4*x^2*y - 2"),
        ("1 - x", "-x + 1"),
        ("x - x", "0"),
        ("(x + y)^2", "x^2 + 2*x*y + y^2"),
    ];
    for (input, shown) in cases {
        assert_eq!(Polynomial::parse(input, &r).unwrap().to_string(), shown);
    }
}

#[test]
fn parse_errors_carry_positions() {
    let r = ring();
    assert!(matches!(
        Polynomial::parse("x^y", &r),
        Err(Error::BadExponent { pos: 2 })
    ));
    assert!(matches!(Polynomial::parse("x + w", &r), Err(Error::UnknownVariable(v)) if v == "w"));
    assert!(matches!(Polynomial::parse("x +", &r), Err(Error::Syntax { .. })));
    assert!(matches!(Polynomial::parse("x/0", &r), Err(Error::DivisionByZero)));
    assert!(Polynomial::parse("x/y", &r).is_err());
}

#[test]
fn term_cap_is_enforced() {
    let r = ring().with_term_cap(20);
    let f = Polynomial::parse("x + y + z + 1", &r).unwrap();
    assert!(f.pow(2).is_ok());
    let err = f.pow(4).unwrap_err();
    assert!(err.is_resource_cap());
}

#[test]
fn substitution_and_derivatives() {
    let r = ring();
    let f = Polynomial::parse("x^2*y - z", &r).unwrap();
    assert_eq!(f.derivative(0).to_string(), "2*x*y");
    let mut sub = std::collections::BTreeMap::new();
    sub.insert("x".to_string(), Polynomial::parse("y + 1", &r).unwrap());
    assert_eq!(
        f.substitute_in_place(&sub).unwrap(),
        Polynomial::parse("(y + 1)^2*y - z", &r).unwrap()
    );
}
