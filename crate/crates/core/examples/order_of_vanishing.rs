//! Orders of vanishing along a prime and at the origin, and the affine
//! bound for elements of `p ∩ q`.

use sympow::ideal::Ideal;
use sympow::lab::{affine_vanishing_report, monomial_curve_prime};
use sympow::local::PrimeWitness;
use sympow::poly::{PolyRing, Polynomial};

fn main() -> sympow::Result<()> {
    let r = PolyRing::rationals(&["x", "y", "z"])?;
    let curve = monomial_curve_prime(&[3, 4, 5], &r)?;
    let plane = PrimeWitness::new(Ideal::parse(&r, &["z"])?, None, None)?;
    for s in [
        "y^2 - x*z",
        "x^5 + x*y^3 - 3*x^2*y*z + z^3",
        "(y^2 - x*z)^3",
        "z*(x^3 - y*z)",
    ] {
        let f = Polynomial::parse(s, &r)?;
        println!(
            "{s}: ord along curve {}, order at origin {}",
            curve.ord_along(&f)?,
            f.order_at_origin().unwrap_or(0)
        );
    }
    let f = Polynomial::parse("z*(x^5 + x*y^3 - 3*x^2*y*z + z^3)", &r)?;
    let rep = affine_vanishing_report(&f, &curve, &plane)?;
    println!(
        "{}: ord_p={} ord_q={} ord_origin={}",
        rep.outcome(),
        rep.details["ord_p"],
        rep.details["ord_q"],
        rep.details["ord_origin"]
    );
    Ok(())
}
