//! Executable checks of intersection containments for symbolic powers,
//! with hypothesis reports and failure witnesses.
//!
//! All checks run in the polynomial ring. For primes that are homogeneous
//! for some positive grading every ideal involved is graded, so a
//! containment in `(x_1, ..., x_d)^k` in the polynomial ring is the same
//! as the containment in the local ring at the origin. Reports for
//! ungraded inputs carry a note saying the bridge is unverified.

pub mod fixtures;

use std::sync::Arc;

use num::integer::gcd;
use serde_json::json;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::local::{PrimeKind, PrimeWitness};
use crate::poly::{PolyRing, Polynomial};
use crate::report::{HypothesisReport, Stopwatch, VerificationReport};

pub use crate::report::Outcome;

pub const GRADED_BRIDGE_NOTE: &str = "graded bridge unverified: inputs are not homogeneous";

fn same_ring(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.ring() == b.ring() {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// `√(I_1 + ... + I_t)` equals the ideal of all variables.
fn radical_sum_is_maximal(ideals: &[&Ideal]) -> Result<bool> {
    let ring = ideals[0].ring().clone();
    let mut sum = Ideal::zero(&ring);
    for i in ideals {
        sum = sum.sum(i)?;
    }
    if sum.is_unit()? {
        return Ok(false);
    }
    for v in 0..ring.nvars() {
        if !sum.radical_contains(&Polynomial::variable(&ring, v))? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn hypotheses_for(primes: &[&PrimeWitness]) -> Result<HypothesisReport> {
    let ideals: Vec<&Ideal> = primes.iter().map(|p| p.ideal()).collect();
    for w in ideals.windows(2) {
        same_ring(w[0], w[1])?;
    }
    let d = ideals[0].ring().nvars();
    let radical = radical_sum_is_maximal(&ideals)?;
    let dims = primes.iter().map(|p| p.claimed_dim()).collect();
    let mut h = HypothesisReport::new(radical, dims, d);
    if !h.radical_sum_is_maximal {
        h.notes.push("the primes do not meet only at the origin".into());
    }
    if !h.dims_sum_to_d {
        h.notes
            .push("codimensions do not add up to the number of variables".into());
    }
    Ok(h)
}

/// Checks `√(p + q) = m` and `dim(R/p) + dim(R/q) = d`.
pub fn check_hypotheses(p: &PrimeWitness, q: &PrimeWitness) -> Result<HypothesisReport> {
    hypotheses_for(&[p, q])
}

/// `p_1^(n_1) ∩ ... ∩ p_t^(n_t) ⊆ m^(n_1 + ... + n_t)`, decided by the
/// orders at the origin of the grevlex basis of the intersection.
fn containment_report(primes: &[&PrimeWitness], exponents: &[u32]) -> Result<VerificationReport> {
    if primes.is_empty() || primes.len() != exponents.len() {
        return Err(Error::InvalidInput(
            "need one positive exponent per prime and at least one prime".into(),
        ));
    }
    if exponents.contains(&0) {
        return Err(Error::InvalidInput("exponents must be positive".into()));
    }
    let mut clock = Stopwatch::start();
    let hyp = hypotheses_for(primes)?;
    clock.lap("hypotheses");

    let mut report = VerificationReport::new("symbolic-intersection-containment");
    let mut meet: Option<Ideal> = None;
    let mut sat_indices = Vec::new();
    for (p, &n) in primes.iter().zip(exponents) {
        let sp = p.symbolic_power_unchecked(n)?;
        report.certified &= sp.certified;
        report.notes.extend(sp.violations.iter().cloned());
        sat_indices.push(sp.saturation_index);
        meet = Some(match meet {
            None => sp.ideal.clone(),
            Some(acc) => acc.intersection(&sp.ideal)?,
        });
    }
    clock.lap("symbolic powers and intersection");
    let meet = meet.expect("at least one prime");
    let target: u64 = exponents.iter().map(|&n| n as u64).sum();
    let gb = meet.gb()?;
    let orders: Vec<u64> = gb
        .elements()
        .iter()
        .map(|g| g.order_at_origin().expect("basis elements are nonzero"))
        .collect();
    let min_order = orders.iter().copied().min();
    report.witness = gb.elements().iter().find(|g| !g.vanishes_to_order(target)).cloned();
    report.holds = report.witness.is_none();
    clock.lap("orders");

    report.applicable = hyp.all_hold();
    if !primes.iter().all(|p| p.is_graded()) {
        report.notes.push(GRADED_BRIDGE_NOTE.into());
    }
    report.detail("exponents", exponents);
    report.detail("target_order", target);
    report.detail("min_order", min_order);
    report.detail("sharp", min_order == Some(target));
    report.detail("basis_size", gb.len());
    report.detail("saturation_indices", sat_indices);
    report.hypotheses = Some(hyp);
    report.timings = clock.laps;
    Ok(report)
}

/// `p^(m) ∩ q^(n) ⊆ m^(m+n)`.
pub fn verify_sp2(p: &PrimeWitness, q: &PrimeWitness, m: u32, n: u32) -> Result<VerificationReport> {
    containment_report(&[p, q], &[m, n])
}

/// `p^(m) ∩ q ⊆ m^(m+1)`.
pub fn verify_sp1(p: &PrimeWitness, q: &PrimeWitness, m: u32) -> Result<VerificationReport> {
    verify_sp2(p, q, m, 1)
}

/// `p_1^(n_1) ∩ ... ∩ p_t^(n_t) ⊆ m^(Σ n_i)` when the origin is a minimal
/// prime of the sum and the heights add up.
pub fn verify_multi(primes: &[PrimeWitness], exponents: &[u32]) -> Result<VerificationReport> {
    let refs: Vec<&PrimeWitness> = primes.iter().collect();
    containment_report(&refs, exponents)
}

/// Orders of vanishing of `f` along `p`, along `q`, and at the origin.
/// Holds iff the origin order is at least the sum of the other two
/// whenever the hypotheses hold.
pub fn affine_vanishing_report(f: &Polynomial, p: &PrimeWitness, q: &PrimeWitness) -> Result<VerificationReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.ring() != p.ideal().ring() {
        return Err(Error::RingMismatch);
    }
    if !p.ideal().contains(f)? || !q.ideal().contains(f)? {
        return Err(Error::NotInIntersection);
    }
    let mut clock = Stopwatch::start();
    let hyp = check_hypotheses(p, q)?;
    clock.lap("hypotheses");
    let m = p.ord_along(f)?;
    let n = q.ord_along(f)?;
    let k = f.order_at_origin().expect("nonzero");
    clock.lap("orders");

    let mut report = VerificationReport::new("order-of-vanishing-bound");
    report.applicable = hyp.all_hold();
    report.certified = p.symbolic_powers_certified() && q.symbolic_powers_certified();
    let bound = k >= (m + n) as u64;
    report.holds = !report.applicable || bound;
    if !report.holds {
        report.witness = Some(f.clone());
    }
    if !report.applicable {
        report.notes.push("hypotheses fail; bound not asserted".into());
    }
    if !(p.is_graded() && q.is_graded()) {
        report.notes.push(GRADED_BRIDGE_NOTE.into());
    }
    report.detail("f", f.to_string());
    report.detail("ord_p", m);
    report.detail("ord_q", n);
    report.detail("ord_origin", k);
    report.detail("bound_met", bound);
    report.hypotheses = Some(hyp);
    report.timings = clock.laps;
    Ok(report)
}

/// For a coordinate prime `p`: `p^(m) ∩ q^(n) ⊆ p^m · m^n`.
pub fn verify_regular_case(p: &PrimeWitness, q: &PrimeWitness, m: u32, n: u32) -> Result<VerificationReport> {
    if !matches!(p.kind(), PrimeKind::Coordinate(_)) {
        return Err(Error::NotCoordinatePrime);
    }
    if m == 0 || n == 0 {
        return Err(Error::InvalidInput("exponents must be positive".into()));
    }
    let mut clock = Stopwatch::start();
    let hyp = check_hypotheses(p, q)?;
    clock.lap("hypotheses");
    let sp = p.symbolic_power_unchecked(m)?;
    let sq = q.symbolic_power_unchecked(n)?;
    let meet = sp.ideal.intersection(&sq.ideal)?;
    clock.lap("symbolic powers and intersection");
    let ring = p.ideal().ring();
    let target = sp.ideal.product(&Ideal::maximal(ring).power(n)?)?;
    let target_gb = target.gb()?;
    let mut report = VerificationReport::new("regular-quotient-containment");
    for g in meet.gb()?.elements() {
        if !target_gb.contains(g)? {
            report.witness = Some(g.clone());
            break;
        }
    }
    report.holds = report.witness.is_none();
    clock.lap("containment");
    let weak = meet
        .gb()?
        .elements()
        .iter()
        .all(|g| g.vanishes_to_order((m + n) as u64));

    report.applicable = hyp.all_hold();
    report.certified = sp.certified && sq.certified;
    report.notes.extend(sp.violations.iter().cloned());
    report.notes.extend(sq.violations.iter().cloned());
    if !(p.is_graded() && q.is_graded()) {
        report.notes.push(GRADED_BRIDGE_NOTE.into());
    }
    report.detail("exponents", [m, n]);
    report.detail("contained_in_max_power", weak);
    report.hypotheses = Some(hyp);
    report.timings = clock.laps;
    Ok(report)
}

/// Regular-sequence proxy: every generator vanishes at the origin and the
/// height equals the number of generators.
fn check_regular_sequence(name: &str, ideal: &Ideal) -> Result<usize> {
    if ideal.is_zero_ideal() {
        return Err(Error::NotRegularSequence(format!("{name} is the zero ideal")));
    }
    if let Some(g) = ideal.generators().iter().find(|g| !g.vanishes_to_order(1)) {
        return Err(Error::NotRegularSequence(format!(
            "generator {g} of {name} does not vanish at the origin"
        )));
    }
    let height = ideal.height()?;
    if height != ideal.generators().len() {
        return Err(Error::NotRegularSequence(format!(
            "{name} has height {height} but {} generators",
            ideal.generators().len()
        )));
    }
    ideal.krull_dimension()
}

/// For ideals generated by regular sequences: `I^m ∩ J^n = I^m · J^n`.
pub fn verify_ci_product(i: &Ideal, j: &Ideal, m: u32, n: u32) -> Result<VerificationReport> {
    same_ring(i, j)?;
    if m == 0 || n == 0 {
        return Err(Error::InvalidInput("exponents must be positive".into()));
    }
    let mut clock = Stopwatch::start();
    let dim_i = check_regular_sequence("I", i)?;
    let dim_j = check_regular_sequence("J", j)?;
    let d = i.ring().nvars();
    let mut hyp = HypothesisReport::new(radical_sum_is_maximal(&[i, j])?, vec![dim_i, dim_j], d);
    if !hyp.radical_sum_is_maximal {
        hyp.notes.push("the ideals do not meet only at the origin".into());
    }
    clock.lap("hypotheses");

    let im = i.power(m)?;
    let jn = j.power(n)?;
    let meet = im.intersection(&jn)?;
    let prod = im.product(&jn)?;
    clock.lap("powers, intersection, product");
    let prod_gb = prod.gb()?;
    let mut report = VerificationReport::new("complete-intersection-product");
    for g in meet.gb()?.elements() {
        if !prod_gb.contains(g)? {
            report.witness = Some(g.clone());
            break;
        }
    }
    report.holds = report.witness.is_none() && meet.equals(&prod)?;
    clock.lap("equality");
    let in_max_power = prod_gb.elements().iter().all(|g| g.vanishes_to_order((m + n) as u64));

    report.applicable = hyp.all_hold();
    if !(i.is_homogeneous()? && j.is_homogeneous()?) {
        report.notes.push(GRADED_BRIDGE_NOTE.into());
    }
    report.detail("exponents", [m, n]);
    report.detail("product_in_max_power", in_max_power);
    report.detail("basis_size", meet.gb()?.len());
    report.hypotheses = Some(hyp);
    report.timings = clock.laps;
    Ok(report)
}

/// Prime of the monomial curve `t ↦ (t^a_1, ..., t^a_d)`, obtained by
/// eliminating `t` from `(x_i - t^a_i)`. The result is homogeneous for the
/// weights `a_i`, has dimension 1 and uses the first variable as witness.
pub fn monomial_curve_prime(exponents: &[u32], ring: &Arc<PolyRing>) -> Result<PrimeWitness> {
    if exponents.len() != ring.nvars() {
        return Err(Error::InvalidInput(format!(
            "{} exponents for a ring with {} variables",
            exponents.len(),
            ring.nvars()
        )));
    }
    if exponents.contains(&0) {
        return Err(Error::InvalidInput("curve exponents must be positive".into()));
    }
    if exponents.iter().fold(0, |g, &a| gcd(g, a)) != 1 {
        return Err(Error::InvalidInput("curve exponents must be coprime".into()));
    }
    let ext = ring.with_leading_variable("t");
    let t = Polynomial::variable(&ext, 0);
    let mut gens = Vec::with_capacity(exponents.len());
    for (i, &a) in exponents.iter().enumerate() {
        gens.push(Polynomial::variable(&ext, i + 1).checked_sub(&t.pow(a)?)?);
    }
    let eliminated = Ideal::new(&ext, gens)?.eliminate_indices(&[0])?;
    let contracted: Vec<Polynomial> = eliminated
        .gb()?
        .elements()
        .iter()
        .map(|g| g.contract_leading(ring).expect("t was eliminated"))
        .collect();
    let ideal = Ideal::new(ring, contracted)?;
    PrimeWitness::with_weights(ideal, Some(1), Some(Polynomial::variable(ring, 0)), exponents.to_vec())
}

/// Summary counts for a batch of reports.
pub fn summarize(reports: &[VerificationReport]) -> serde_json::Value {
    let count = |o: Outcome| reports.iter().filter(|r| r.outcome() == o).count();
    json!({
        "total": reports.len(),
        "holds": count(Outcome::Holds),
        "inapplicable": count(Outcome::Inapplicable),
        "inconclusive": count(Outcome::Inconclusive),
        "fails": count(Outcome::Fails),
    })
}
