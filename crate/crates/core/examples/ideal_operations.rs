//! Sums, products, intersections, colons, saturations, radical membership,
//! dimension and elimination on small ideals.

use sympow::ideal::Ideal;
use sympow::poly::{PolyRing, Polynomial};

fn main() -> sympow::Result<()> {
    let r = PolyRing::rationals(&["x", "y", "z"])?;
    let p = Ideal::parse(&r, &["x", "y"])?;
    let q = Ideal::parse(&r, &["y", "z"])?;
    let z = Polynomial::parse("z", &r)?;

    println!("p + q = {}", p.sum(&q)?);
    println!("p * q = {}", p.product(&q)?);
    println!("p^2 ∩ q = {}", p.power(2)?.intersection(&q)?);
    println!("(p^2 ∩ q) : z = {}", p.power(2)?.intersection(&q)?.colon_by(&z)?);
    let (sat, steps) = p.power(2)?.intersection(&q)?.saturation(&z)?;
    println!("(p^2 ∩ q) : z^∞ = {sat} after {steps} steps");
    println!("z in √(p + q): {}", p.sum(&q)?.radical_contains(&z)?);
    println!(
        "dim R/p = {}, dim R/(p ∩ q) = {}",
        p.krull_dimension()?,
        p.intersection(&q)?.krull_dimension()?
    );

    let t = PolyRing::rationals(&["t", "x", "y"])?;
    let cusp = Ideal::parse(&t, &["x - t^2", "y - t^3"])?.eliminate(&["t"])?;
    println!("eliminating t from (x - t^2, y - t^3): {cusp}");
    Ok(())
}
