//! Hilbert series and multiplicities, and the associativity check on a few
//! monomial ideals.

use sympow::ideal::Ideal;
use sympow::local::{affine_degree, associativity_check, hilbert_data, multiplicity_graded};
use sympow::poly::PolyRing;

fn main() -> sympow::Result<()> {
    let r = PolyRing::rationals(&["x", "y", "z"])?;
    for gens in [
        &["x*y - z^2"][..],
        &["x^2", "x*y"],
        &["x^3", "y^2"],
        &["x*y", "y*z", "x*z"],
    ] {
        let i = Ideal::parse(&r, gens)?;
        let h = hilbert_data(&i)?;
        println!(
            "{i}: numerator {:?}, dimension {}, multiplicity {}",
            h.numerator,
            h.dimension,
            multiplicity_graded(&i)?
        );
    }
    let curve = Ideal::parse(&r, &["y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"])?;
    println!("affine degree of the (3,4,5) curve: {}", affine_degree(&curve)?);

    for gens in [&["x^2*y^3"][..], &["x^2", "x*y"], &["x^2*y", "y^2*z", "z^3"]] {
        let rep = associativity_check(&Ideal::parse(&r, gens)?)?;
        println!(
            "{:?}: {} multiplicity {} components {}",
            gens,
            rep.outcome(),
            rep.details["multiplicity"],
            rep.details["components"]
        );
    }
    Ok(())
}
