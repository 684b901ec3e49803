//! Symbolic powers of the (3,4,5) monomial curve prime against its
//! ordinary powers.

use sympow::lab::monomial_curve_prime;
use sympow::poly::PolyRing;

fn main() -> sympow::Result<()> {
    let r = PolyRing::rationals(&["x", "y", "z"])?;
    let p = monomial_curve_prime(&[3, 4, 5], &r)?;
    println!("p = {}", p.ideal());
    println!("isolated singularity certified: {}", p.isolated_singularity_certified());
    for m in 1..=3 {
        let sp = p.symbolic_power(m)?;
        let ordinary = p.ideal().power(m)?;
        println!(
            "m={m}: {} basis elements, saturation index {}, equals p^{m}: {}",
            sp.ideal.gb()?.len(),
            sp.saturation_index,
            sp.ideal.equals(&ordinary)?
        );
        for g in sp.ideal.gb()?.elements() {
            if !ordinary.contains(g)? {
                println!("  not in p^{m}: {g}");
            }
        }
    }
    Ok(())
}
