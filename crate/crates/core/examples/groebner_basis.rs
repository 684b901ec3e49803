//! Reduced Gröbner bases of the (3,4,5) curve ideal under the three
//! monomial orders, with division remainders.

use sympow::groebner::buchberger;
use sympow::poly::{MonomialOrder, PolyRing, Polynomial};

fn main() -> sympow::Result<()> {
    let r = PolyRing::rationals(&["x", "y", "z"])?;
    let gens: Vec<Polynomial> = ["y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"]
        .iter()
        .map(|s| Polynomial::parse(s, &r))
        .collect::<sympow::Result<_>>()?;
    let f = Polynomial::parse("x^4*y + z^3", &r)?;
    for order in [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GrevLex] {
        let gb = buchberger(&gens, &order)?;
        println!(
            "{order:?}: {} elements, certificate {}",
            gb.len(),
            gb.verify_certificate()?
        );
        for g in gb.elements() {
            println!("  {g}");
        }
        println!("  remainder of {f}: {}", gb.normal_form(&f)?);
    }
    Ok(())
}
