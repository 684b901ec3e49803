use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;

/// Default bound on the order searched by [`PrimeWitness::ord_along`].
pub const DEFAULT_ORDER_CAP: u32 = 32;

/// Shape of a prime, as far as symbolic powers are concerned.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeKind {
    /// Generated by the listed variables.
    Coordinate(Vec<usize>),
    Principal,
    General,
}

/// An ideal asserted to be prime, with its dimension and a saturation
/// witness `u ∉ p` vanishing at the origin.
///
/// The witness realizes localization at `p`: `p^(m)` is computed as
/// `p^m : u^∞`. This is exact when every embedded prime of `p^m` is the
/// ideal of all variables, which [`PrimeWitness::verify_isolated_singularity`]
/// certifies through the Jacobian criterion.
pub struct PrimeWitness {
    ideal: Ideal,
    claimed_dim: usize,
    witness: Option<Polynomial>,
    weights: Vec<u32>,
    kind: PrimeKind,
    isolated_singularity_certified: bool,
    symbolic: RwLock<BTreeMap<u32, Arc<SymbolicPower>>>,
}

impl Clone for PrimeWitness {
    fn clone(&self) -> Self {
        PrimeWitness {
            ideal: self.ideal.clone(),
            claimed_dim: self.claimed_dim,
            witness: self.witness.clone(),
            weights: self.weights.clone(),
            kind: self.kind.clone(),
            isolated_singularity_certified: self.isolated_singularity_certified,
            symbolic: RwLock::new(self.symbolic.read().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for PrimeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrimeWitness")
            .field("ideal", &self.ideal.to_string())
            .field("claimed_dim", &self.claimed_dim)
            .field("witness", &self.witness.as_ref().map(|w| w.to_string()))
            .field("kind", &self.kind)
            .field("certified", &self.isolated_singularity_certified)
            .finish()
    }
}

/// Result of a symbolic power computation.
#[derive(Debug, Clone)]
pub struct SymbolicPower {
    pub ideal: Ideal,
    pub exponent: u32,
    /// True when the computation is backed by a structural argument
    /// (coordinate or principal prime) or by the isolated-singularity
    /// certificate.
    pub certified: bool,
    /// Number of colon steps until the saturation chain stabilized.
    pub saturation_index: usize,
    /// Post-condition checks that failed; empty on success.
    pub violations: Vec<String>,
}

impl PrimeWitness {
    /// Builds a witness with standard grading. `claimed_dim` defaults to the
    /// computed dimension and `witness` to the first variable outside `p`.
    pub fn new(ideal: Ideal, claimed_dim: Option<usize>, witness: Option<Polynomial>) -> Result<Self> {
        let weights = vec![1; ideal.ring().nvars()];
        Self::with_weights(ideal, claimed_dim, witness, weights)
    }

    /// As [`PrimeWitness::new`], with a positive grading under which the
    /// generators are homogeneous.
    pub fn with_weights(
        ideal: Ideal,
        claimed_dim: Option<usize>,
        witness: Option<Polynomial>,
        weights: Vec<u32>,
    ) -> Result<Self> {
        let ring = ideal.ring().clone();
        if weights.len() != ring.nvars() || weights.contains(&0) {
            return Err(Error::InvalidInput(format!(
                "weights must be {} positive integers",
                ring.nvars()
            )));
        }
        if ideal.is_unit()? {
            return Err(Error::UnitIdeal("prime witness"));
        }
        let computed = ideal.krull_dimension()?;
        if let Some(claimed) = claimed_dim {
            if claimed != computed {
                return Err(Error::DimensionMismatch { claimed, computed });
            }
        }
        let witness = match witness {
            Some(w) => {
                if w.ring() != &ring {
                    return Err(Error::RingMismatch);
                }
                if ideal.contains(&w)? {
                    return Err(Error::InvalidWitness(format!("{w} lies in the prime")));
                }
                if w.order_at_origin().unwrap_or(0) < 1 {
                    return Err(Error::InvalidWitness(format!("{w} does not vanish at the origin")));
                }
                Some(w)
            }
            None => {
                let mut found = None;
                for i in 0..ring.nvars() {
                    let v = Polynomial::variable(&ring, i);
                    if !ideal.contains(&v)? {
                        found = Some(v);
                        break;
                    }
                }
                found
            }
        };
        let kind = if let Some(vars) = ideal.coordinate_variables()? {
            PrimeKind::Coordinate(vars)
        } else if ideal.is_principal()? {
            PrimeKind::Principal
        } else {
            PrimeKind::General
        };
        let mut pw = PrimeWitness {
            ideal,
            claimed_dim: computed,
            witness,
            weights,
            kind,
            isolated_singularity_certified: false,
            symbolic: RwLock::new(BTreeMap::new()),
        };
        pw.isolated_singularity_certified = pw.verify_isolated_singularity().unwrap_or(false);
        Ok(pw)
    }

    /// Prime generated by the listed variables.
    pub fn coordinate(ring: &Arc<crate::poly::PolyRing>, vars: &[usize]) -> Result<Self> {
        Self::new(Ideal::coordinate(ring, vars), None, None)
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn claimed_dim(&self) -> usize {
        self.claimed_dim
    }

    pub fn witness(&self) -> Option<&Polynomial> {
        self.witness.as_ref()
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn kind(&self) -> &PrimeKind {
        &self.kind
    }

    pub fn isolated_singularity_certified(&self) -> bool {
        self.isolated_singularity_certified
    }

    /// Whether the prime is graded for its weights, so that containments in
    /// the polynomial ring agree with those in the local ring at the origin.
    pub fn is_graded(&self) -> bool {
        self.ideal.is_weighted_homogeneous(&self.weights).unwrap_or(false)
    }

    /// Whether symbolic powers of this prime are certified.
    pub fn symbolic_powers_certified(&self) -> bool {
        self.isolated_singularity_certified || matches!(self.kind, PrimeKind::Coordinate(_) | PrimeKind::Principal)
    }

    /// Jacobian criterion: with `h = d - dim(R/p)`, the `h × h` minors of
    /// the Jacobian of the generators together with `p` cut out at most the
    /// origin. Then `p` is smooth away from the origin and every embedded
    /// prime of `p^m` is the ideal of all variables.
    pub fn verify_isolated_singularity(&self) -> Result<bool> {
        let ring = self.ideal.ring();
        if ring.field().characteristic() != 0 {
            return Err(Error::Unsupported(
                "the Jacobian criterion is only used in characteristic 0".into(),
            ));
        }
        if !self.ideal.is_weighted_homogeneous(&self.weights)? {
            return Err(Error::NonHomogeneous(format!(
                "{} is not homogeneous for weights {:?}",
                self.ideal, self.weights
            )));
        }
        let d = ring.nvars();
        let h = d - self.claimed_dim;
        if h == 0 {
            return Ok(true);
        }
        let gens = self.ideal.generators();
        let jac: Vec<Vec<Polynomial>> = gens.iter().map(|g| (0..d).map(|v| g.derivative(v)).collect()).collect();
        let mut sing = gens.to_vec();
        for rows in combinations(gens.len(), h) {
            for cols in combinations(d, h) {
                let minor: Vec<Vec<Polynomial>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| jac[r][c].clone()).collect())
                    .collect();
                let det = determinant(&minor)?;
                if !det.is_zero() {
                    sing.push(det);
                }
            }
        }
        let sing = Ideal::new(ring, sing)?;
        for v in 0..d {
            if !sing.radical_contains(&Polynomial::variable(ring, v))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `p^(m)` with its post-condition checks, without failing on
    /// violations. Results are memoized per exponent.
    pub fn symbolic_power_unchecked(&self, m: u32) -> Result<Arc<SymbolicPower>> {
        if m == 0 {
            return Err(Error::InvalidInput("symbolic powers start at exponent 1".into()));
        }
        if let Some(sp) = self.symbolic.read().expect("cache lock").get(&m) {
            return Ok(sp.clone());
        }
        let power = self.ideal.power(m)?;
        let sp = match &self.witness {
            // the ideal of all variables: every power is primary already
            None => SymbolicPower {
                ideal: power,
                exponent: m,
                certified: true,
                saturation_index: 0,
                violations: Vec::new(),
            },
            Some(w) => {
                let (sat, index) = power.saturation(w)?;
                let violations = self.check_contract(&power, &sat, w)?;
                SymbolicPower {
                    ideal: sat,
                    exponent: m,
                    certified: self.symbolic_powers_certified() && violations.is_empty(),
                    saturation_index: index,
                    violations,
                }
            }
        };
        let sp = Arc::new(sp);
        let mut cache = self.symbolic.write().expect("cache lock");
        Ok(cache.entry(m).or_insert(sp).clone())
    }

    /// `p^(m) = p^m : u^∞`, failing when a post-condition does not hold.
    pub fn symbolic_power(&self, m: u32) -> Result<Arc<SymbolicPower>> {
        let sp = self.symbolic_power_unchecked(m)?;
        if !sp.violations.is_empty() {
            return Err(Error::UncertifiedSymbolicPower(sp.violations.join("; ")));
        }
        Ok(sp)
    }

    fn check_contract(&self, power: &Ideal, sat: &Ideal, witness: &Polynomial) -> Result<Vec<String>> {
        let ring = self.ideal.ring();
        let mut violations = Vec::new();
        if !sat.contains_ideal(power)? {
            violations.push("result does not contain the ordinary power".to_string());
        }
        if !self.ideal.contains_ideal(sat)? {
            violations.push("result is not contained in the prime".to_string());
        }
        for v in 0..ring.nvars() {
            let probe = Polynomial::variable(ring, v);
            if &probe == witness || self.ideal.contains(&probe)? {
                continue;
            }
            if !sat.colon_by(&probe)?.equals(sat)? {
                violations.push(format!("{} is a zero divisor modulo the result", ring.variables()[v]));
            }
        }
        for g in self.ideal.generators() {
            if !sat.radical_contains(g)? {
                violations.push(format!("{g} is not in the radical of the result"));
            }
        }
        Ok(violations)
    }

    /// Largest `m` with `f ∈ p^(m)`; 0 when `f ∉ p`.
    pub fn ord_along(&self, f: &Polynomial) -> Result<u32> {
        self.ord_along_capped(f, DEFAULT_ORDER_CAP)
    }

    pub fn ord_along_capped(&self, f: &Polynomial, cap: u32) -> Result<u32> {
        if f.ring() != self.ideal.ring() {
            return Err(Error::RingMismatch);
        }
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        for m in 1..=cap {
            if !self.symbolic_power(m)?.ideal.contains(f)? {
                return Ok(m - 1);
            }
        }
        Err(Error::OrderCapExceeded { cap })
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Laplace expansion along the first row.
fn determinant(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = m.len();
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let ring = m[0][0].ring().clone();
    let mut acc = Polynomial::zero(&ring);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let sub: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].multiply(&determinant(&sub)?)?;
        acc = if j % 2 == 0 {
            acc.checked_add(&term)?
        } else {
            acc.checked_sub(&term)?
        };
    }
    Ok(acc)
}
