//! Structured outcomes of verification runs.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use crate::poly::Polynomial;

/// Hypotheses of the intersection containment for a family of primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    /// `√(p_1 + ... + p_t)` is the ideal of all variables.
    pub radical_sum_is_maximal: bool,
    /// `dim(R/p_i)` for each prime, in input order.
    pub dims: Vec<usize>,
    /// Number of variables `d`.
    pub ambient_dim: usize,
    /// `Σ (d - dim_i) = d`; for two primes this is `dim_p + dim_q = d`.
    pub dims_sum_to_d: bool,
    pub notes: Vec<String>,
}

impl HypothesisReport {
    pub fn new(radical_sum_is_maximal: bool, dims: Vec<usize>, ambient_dim: usize) -> Self {
        let heights: usize = dims.iter().map(|&k| ambient_dim.saturating_sub(k)).sum();
        HypothesisReport {
            radical_sum_is_maximal,
            dims_sum_to_d: heights == ambient_dim,
            dims,
            ambient_dim,
            notes: Vec::new(),
        }
    }

    pub fn dim_p(&self) -> usize {
        self.dims[0]
    }

    pub fn dim_q(&self) -> usize {
        self.dims[1]
    }

    pub fn all_hold(&self) -> bool {
        self.radical_sum_is_maximal && self.dims_sum_to_d
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "radical_sum_is_maximal": self.radical_sum_is_maximal,
            "dims": self.dims,
            "ambient_dim": self.ambient_dim,
            "dims_sum_to_d": self.dims_sum_to_d,
            "notes": self.notes,
        });
        if self.dims.len() == 2 {
            v["dim_p"] = json!(self.dims[0]);
            v["dim_q"] = json!(self.dims[1]);
        }
        v
    }
}

/// Classification of a verification result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    /// Hypotheses hold and the claim was confirmed.
    Holds,
    /// Hypotheses fail; nothing is asserted.
    Inapplicable,
    /// Claim failed but a symbolic power involved was not certified.
    Inconclusive,
    /// Hypotheses hold, inputs certified, claim false.
    Fails,
}

impl Outcome {
    pub fn is_failure(self) -> bool {
        matches!(self, Outcome::Fails | Outcome::Inconclusive)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Outcome::Holds => "holds",
            Outcome::Inapplicable => "inapplicable",
            Outcome::Inconclusive => "inconclusive",
            Outcome::Fails => "fails",
        };
        f.write_str(s)
    }
}

/// Outcome of one theorem check.
///
/// When `holds` is false, `witness` carries an element that violates the
/// checked containment (except for reports whose claim has no polynomial
/// witness, which say so in `notes`).
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub claim: String,
    pub hypotheses: Option<HypothesisReport>,
    pub holds: bool,
    pub applicable: bool,
    pub certified: bool,
    pub witness: Option<Polynomial>,
    pub details: BTreeMap<String, Value>,
    pub notes: Vec<String>,
    pub timings: Vec<(String, Duration)>,
}

impl PartialEq for VerificationReport {
    /// Equality ignores timings.
    fn eq(&self, other: &Self) -> bool {
        self.claim == other.claim
            && self.hypotheses == other.hypotheses
            && self.holds == other.holds
            && self.applicable == other.applicable
            && self.certified == other.certified
            && self.witness == other.witness
            && self.details == other.details
            && self.notes == other.notes
    }
}

impl VerificationReport {
    pub fn new(claim: impl Into<String>) -> Self {
        VerificationReport {
            claim: claim.into(),
            hypotheses: None,
            holds: false,
            applicable: true,
            certified: true,
            witness: None,
            details: BTreeMap::new(),
            notes: Vec::new(),
            timings: Vec::new(),
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        self.details.insert(
            key.to_string(),
            serde_json::to_value(value).expect("serializable detail"),
        );
    }

    pub fn outcome(&self) -> Outcome {
        if !self.applicable {
            Outcome::Inapplicable
        } else if self.holds {
            Outcome::Holds
        } else if !self.certified {
            Outcome::Inconclusive
        } else {
            Outcome::Fails
        }
    }

    pub fn to_json(&self, with_timings: bool) -> Value {
        let mut v = json!({
            "claim": self.claim,
            "outcome": self.outcome(),
            "holds": self.holds,
            "applicable": self.applicable,
            "certified": self.certified,
            "witness": self.witness.as_ref().map(|w| w.to_string()),
            "hypotheses": self.hypotheses.as_ref().map(HypothesisReport::to_json),
            "details": self.details,
            "notes": self.notes,
        });
        if with_timings {
            let t: BTreeMap<&str, f64> = self
                .timings
                .iter()
                .map(|(k, d)| (k.as_str(), d.as_secs_f64()))
                .collect();
            v["timings"] = json!(t);
        }
        v
    }
}

/// Collects named step durations.
pub(crate) struct Stopwatch {
    last: Instant,
    pub(crate) laps: Vec<(String, Duration)>,
}

impl Stopwatch {
    pub(crate) fn start() -> Self {
        Stopwatch {
            last: Instant::now(),
            laps: Vec::new(),
        }
    }

    pub(crate) fn lap(&mut self, label: &str) {
        let now = Instant::now();
        self.laps.push((label.to_string(), now - self.last));
        self.last = now;
    }
}
