//! `I^m ∩ J^n = I^m J^n` for complete intersections meeting at the origin.

use sympow::lab::{fixtures, verify_ci_product};

fn main() -> sympow::Result<()> {
    let mut pairs = fixtures::ci_pairs()?;
    pairs.push(fixtures::ungraded_ci_pair()?);
    for pr in pairs {
        for (m, n) in [(1, 1), (2, 1), (2, 3)] {
            let rep = verify_ci_product(&pr.i, &pr.j, m, n)?;
            println!(
                "{:<24} m={m} n={n} {} basis_size={}{}",
                pr.name,
                rep.outcome(),
                rep.details["basis_size"],
                if rep.notes.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", rep.notes.join("; "))
                }
            );
        }
    }
    Ok(())
}
