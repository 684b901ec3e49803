//! Runs the intersection containment `p^(m) ∩ q^(n) ⊆ m^(m+n)` over the
//! bundled prime pairs and prints one line per case.

use std::time::Instant;

use sympow::lab::{self, fixtures};

fn main() -> sympow::Result<()> {
    let lines = fixtures::coplanar_lines()?;
    let r = lab::verify_sp2(&lines.p, &lines.q, 1, 1)?;
    println!(
        "{}: {} (witness {})",
        lines.name,
        r.outcome(),
        r.witness.map(|w| w.to_string()).unwrap_or_default()
    );

    let max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2u32);
    for pr in fixtures::theorem_pairs()? {
        for m in 1..=max {
            for n in 1..=max {
                let start = Instant::now();
                let r = lab::verify_sp2(&pr.p, &pr.q, m, n)?;
                println!(
                    "{:<36} m={m} n={n} {:<12} certified={} min_order={} {:.2?}",
                    pr.name,
                    r.outcome().to_string(),
                    r.certified,
                    r.details["min_order"],
                    start.elapsed()
                );
            }
        }
    }
    Ok(())
}
