use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// Term order on monomials. Variable index 0 is the largest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    #[default]
    GrevLex,
    /// Elimination order: monomials are compared on the `elim` variables
    /// first (using `inner`) and only then on the remaining variables.
    Block {
        elim: Vec<usize>,
        inner: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn block(elim: &[usize], inner: MonomialOrder) -> Self {
        let mut elim = elim.to_vec();
        elim.sort_unstable();
        elim.dedup();
        MonomialOrder::Block {
            elim,
            inner: Box::new(inner),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_on(a.exponents(), b.exponents(), &|_| true)
    }

    fn cmp_on(&self, a: &[u32], b: &[u32], keep: &dyn Fn(usize) -> bool) -> Ordering {
        match self {
            MonomialOrder::Lex => lex(a, b, keep),
            MonomialOrder::GrLex => degree(a, keep).cmp(&degree(b, keep)).then_with(|| lex(a, b, keep)),
            MonomialOrder::GrevLex => degree(a, keep).cmp(&degree(b, keep)).then_with(|| revlex(a, b, keep)),
            MonomialOrder::Block { elim, inner } => {
                let first = inner.cmp_on(a, b, &|i| keep(i) && elim.contains(&i));
                first.then_with(|| inner.cmp_on(a, b, &|i| keep(i) && !elim.contains(&i)))
            }
        }
    }

    /// Parses `lex`, `grlex` or `grevlex`.
    pub fn parse(name: &str) -> Result<Self> {
        match name.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" | "deglex" => Ok(MonomialOrder::GrLex),
            "grevlex" | "degrevlex" => Ok(MonomialOrder::GrevLex),
            other => Err(Error::InvalidInput(format!("unknown monomial order `{other}`"))),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrLex => write!(f, "grlex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Block { elim, inner } => write!(f, "block({elim:?};{inner})"),
        }
    }
}

fn degree(a: &[u32], keep: &dyn Fn(usize) -> bool) -> u64 {
    a.iter()
        .enumerate()
        .filter(|(i, _)| keep(*i))
        .map(|(_, &e)| e as u64)
        .sum()
}

fn lex(a: &[u32], b: &[u32], keep: &dyn Fn(usize) -> bool) -> Ordering {
    for i in 0..a.len() {
        if keep(i) && a[i] != b[i] {
            return a[i].cmp(&b[i]);
        }
    }
    Ordering::Equal
}

fn revlex(a: &[u32], b: &[u32], keep: &dyn Fn(usize) -> bool) -> Ordering {
    for i in (0..a.len()).rev() {
        if keep(i) && a[i] != b[i] {
            // smaller exponent in the last differing variable wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}
