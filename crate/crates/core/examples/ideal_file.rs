//! Reads an ideal file, lists its entries and runs the containment check on
//! the first two primes.

use sympow::ideal_file::IdealFile;
use sympow::lab::verify_sp2;

fn main() -> sympow::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/curve345.txt").to_string());
    let file = IdealFile::read(&path, None)?;
    print!("{file}");
    let primes = file
        .entries
        .iter()
        .take(2)
        .map(|e| e.prime())
        .collect::<sympow::Result<Vec<_>>>()?;
    if let [p, q] = &primes[..] {
        let rep = verify_sp2(p, q, 2, 2)?;
        println!(
            "{} vs {}: {}",
            file.entries[0].name,
            file.entries[1].name,
            rep.outcome()
        );
    }
    Ok(())
}
