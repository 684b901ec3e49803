use serde_json::json;

use super::hilbert::multiplicity_graded;
use crate::error::{Error, Result};
use crate::ideal::{independent_sets, monomial_dimension, Ideal};
use crate::poly::{minimalize, Monomial};
use crate::report::{Stopwatch, VerificationReport};

/// Length of `R_P / I_P` for a monomial ideal `I` and a coordinate prime
/// `P` that is a top-dimensional minimal prime of `I`.
///
/// Inverting the variables outside `P` amounts to setting them to 1; what
/// remains is an Artinian monomial ideal in the variables of `P`, whose
/// standard monomials are counted directly.
pub fn local_length_at_monomial_prime(ideal: &Ideal, prime: &Ideal) -> Result<u64> {
    let gens = ideal
        .monomial_generators()
        .ok_or_else(|| Error::InvalidInput(format!("{ideal} is not a monomial ideal")))?;
    let vars = prime.coordinate_variables()?.ok_or(Error::NotCoordinatePrime)?;
    let nvars = ideal.ring().nvars();
    let names: Vec<&str> = vars.iter().map(|&v| ideal.ring().variables()[v].as_str()).collect();
    let not_minimal = || Error::NotMinimalPrime(format!("({})", names.join(", ")));

    if gens.iter().any(|g| g.support().all(|v| !vars.contains(&v))) {
        return Err(not_minimal());
    }
    if nvars - vars.len() != monomial_dimension(&gens, nvars) {
        return Err(not_minimal());
    }

    let local: Vec<Monomial> = minimalize(
        &gens
            .iter()
            .map(|g| {
                let e: Vec<u32> = vars.iter().map(|&v| g.exponents()[v]).collect();
                Monomial::from_exponents(&e)
            })
            .collect::<Vec<_>>(),
    );
    // each variable of P needs a pure power in the localized ideal
    let mut bounds = Vec::with_capacity(vars.len());
    for i in 0..vars.len() {
        let pure = local
            .iter()
            .filter(|g| g.support().all(|v| v == i))
            .map(|g| g.exponents()[i])
            .min();
        match pure {
            Some(b) => bounds.push(b),
            None => return Err(not_minimal()),
        }
    }
    Ok(count_standard(&local, &bounds))
}

/// Standard monomials inside the box `∏ [0, bounds_i)`.
fn count_standard(gens: &[Monomial], bounds: &[u32]) -> u64 {
    let k = bounds.len();
    let mut exps = vec![0u32; k];
    let mut count = 0;
    loop {
        let mono = Monomial::from_exponents(&exps);
        if !gens.iter().any(|g| g.divides(&mono)) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == k {
                return count;
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// Compares the graded multiplicity of `R/I` with
/// `Σ_P ℓ(R_P/I_P) · e(R/P)` over the top-dimensional coordinate primes
/// `P` minimal over `I` (where `e(R/P) = 1`).
pub fn associativity_check(ideal: &Ideal) -> Result<VerificationReport> {
    let gens = ideal
        .monomial_generators()
        .ok_or_else(|| Error::InvalidInput(format!("{ideal} is not a monomial ideal")))?;
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal("associativity check"));
    }
    let ring = ideal.ring();
    let nvars = ring.nvars();
    let mut clock = Stopwatch::start();
    let lhs = multiplicity_graded(ideal)?;
    clock.lap("multiplicity");

    let dim = monomial_dimension(&gens, nvars);
    let mut components = Vec::new();
    let mut rhs: u64 = 0;
    for free in independent_sets(&gens, nvars, dim) {
        let vars: Vec<usize> = (0..nvars).filter(|v| free & (1 << v) == 0).collect();
        let prime = Ideal::coordinate(ring, &vars);
        let len = local_length_at_monomial_prime(ideal, &prime)?;
        rhs += len;
        components.push(json!({ "prime": prime.to_string(), "length": len }));
    }
    clock.lap("lengths");

    let mut report = VerificationReport::new("associativity-formula");
    report.holds = lhs >= 0 && lhs as u64 == rhs;
    report.detail("ideal", ideal.to_string());
    report.detail("multiplicity", lhs);
    report.detail("length_sum", rhs);
    report.detail("dimension", dim);
    report.detail("components", components);
    if !report.holds {
        report
            .notes
            .push("mismatch between multiplicity and summed lengths".into());
    }
    report.timings = clock.laps;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;
    use std::sync::Arc;

    fn ring() -> Arc<PolyRing> {
        PolyRing::rationals(&["x", "y"]).unwrap()
    }

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::parse(&ring(), gens).unwrap()
    }

    #[test]
    fn lengths() {
        assert_eq!(
            local_length_at_monomial_prime(&ideal(&["x^2"]), &ideal(&["x"])).unwrap(),
            2
        );
        assert_eq!(
            local_length_at_monomial_prime(&ideal(&["x^2", "x*y"]), &ideal(&["x"])).unwrap(),
            1
        );
        assert_eq!(
            local_length_at_monomial_prime(&ideal(&["x^2*y^3"]), &ideal(&["y"])).unwrap(),
            3
        );
    }

    #[test]
    fn non_minimal_primes_are_rejected() {
        // (x, y) contains (x^2, xy) but is embedded, not top-dimensional
        assert!(matches!(
            local_length_at_monomial_prime(&ideal(&["x^2", "x*y"]), &ideal(&["x", "y"])),
            Err(Error::NotMinimalPrime(_))
        ));
        assert!(matches!(
            local_length_at_monomial_prime(&ideal(&["x^2"]), &ideal(&["y"])),
            Err(Error::NotMinimalPrime(_))
        ));
        assert_eq!(
            local_length_at_monomial_prime(&ideal(&["x^2"]), &ideal(&["x + y"])).unwrap_err(),
            Error::NotCoordinatePrime
        );
    }

    #[test]
    fn formula_examples() {
        let r = associativity_check(&ideal(&["x^2*y^3"])).unwrap();
        assert!(r.holds);
        assert_eq!(r.details["multiplicity"], json!(5));
        assert_eq!(r.details["length_sum"], json!(5));
        let r = associativity_check(&ideal(&["x^2", "x*y"])).unwrap();
        assert!(r.holds);
        assert_eq!(r.details["multiplicity"], json!(1));
        let r = associativity_check(&ideal(&["x"])).unwrap();
        assert!(r.holds);
        assert_eq!(r.details["length_sum"], json!(1));
    }
}
