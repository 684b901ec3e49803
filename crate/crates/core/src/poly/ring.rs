use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;

use super::field::CoefficientField;
use crate::error::{Error, Result};

/// Default cap on the number of terms any single polynomial may carry.
pub const DEFAULT_TERM_CAP: usize = 1_000_000;

/// Environment variable consulted by [`PolyRing::default_term_cap`].
pub const TERM_CAP_ENV: &str = "SYMPOW_TERM_CAP";

static TERM_CAP_OVERRIDE: AtomicUsize = AtomicUsize::new(0);

/// A polynomial ring `k[x_1, ..., x_d]` with named variables.
///
/// Variables are ordered: index 0 is the largest variable for lex-like
/// orders. The term cap is a resource guard and does not take part in ring
/// equality.
#[derive(Debug, Clone)]
pub struct PolyRing {
    field: CoefficientField,
    variables: Vec<String>,
    term_cap: usize,
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.variables == other.variables
    }
}

impl Eq for PolyRing {}

impl PolyRing {
    pub fn new<S: AsRef<str>>(field: CoefficientField, variables: &[S]) -> Result<Arc<Self>> {
        if variables.is_empty() {
            return Err(Error::InvalidRing("a ring needs at least one variable".into()));
        }
        let mut names: Vec<String> = Vec::with_capacity(variables.len());
        for v in variables {
            let v = v.as_ref().trim();
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if names.iter().any(|n| n == v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
            names.push(v.to_string());
        }
        Ok(Arc::new(PolyRing {
            field,
            variables: names,
            term_cap: Self::default_term_cap(),
        }))
    }

    /// `Q[x_1, ..., x_d]` with the given variable names.
    pub fn rationals<S: AsRef<str>>(variables: &[S]) -> Result<Arc<Self>> {
        Self::new(CoefficientField::Rationals, variables)
    }

    /// `Q[prefix1, ..., prefixd]`.
    pub fn indexed(prefix: &str, d: usize) -> Result<Arc<Self>> {
        let names: Vec<String> = (1..=d).map(|i| format!("{prefix}{i}")).collect();
        Self::rationals(&names)
    }

    /// Parses a header such as `Q[x,y,z]` or `GF(7)[a,b]`.
    pub fn parse(text: &str) -> Result<Arc<Self>> {
        let text = text.trim();
        let open = text
            .find('[')
            .ok_or_else(|| Error::InvalidRing(format!("expected `K[vars]`, got `{text}`")))?;
        if !text.ends_with(']') {
            return Err(Error::InvalidRing(format!("missing `]` in `{text}`")));
        }
        let field = match text[..open].trim() {
            "Q" | "QQ" => CoefficientField::Rationals,
            f => {
                let p = f
                    .strip_prefix("GF(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|p| p.trim().parse::<u64>().ok())
                    .ok_or_else(|| Error::InvalidRing(format!("unknown coefficient field `{f}`")))?;
                CoefficientField::prime(p)?
            }
        };
        let vars: Vec<&str> = text[open + 1..text.len() - 1].split(',').collect();
        Self::new(field, &vars)
    }

    /// Process-wide override of the default term cap; `None` restores the
    /// environment/default lookup. Rings already built keep their cap.
    pub fn set_default_term_cap(cap: Option<usize>) {
        TERM_CAP_OVERRIDE.store(cap.unwrap_or(0), Ordering::Relaxed);
    }

    pub fn default_term_cap() -> usize {
        let o = TERM_CAP_OVERRIDE.load(Ordering::Relaxed);
        if o > 0 {
            return o;
        }
        std::env::var(TERM_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&c| c > 0)
            .unwrap_or(DEFAULT_TERM_CAP)
    }

    pub fn with_term_cap(&self, cap: usize) -> Arc<Self> {
        Arc::new(PolyRing {
            term_cap: cap.max(1),
            ..self.clone()
        })
    }

    pub fn field(&self) -> &CoefficientField {
        &self.field
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn term_cap(&self) -> usize {
        self.term_cap
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn var_index(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// A copy of this ring with a fresh variable prepended at index 0.
    ///
    /// The new name is derived from `hint` and never collides with an
    /// existing variable.
    pub(crate) fn with_leading_variable(&self, hint: &str) -> Arc<Self> {
        let mut name = hint.to_string();
        let mut k = 0;
        while self.index_of(&name).is_some() {
            k += 1;
            name = format!("{hint}{k}");
        }
        let mut variables = Vec::with_capacity(self.nvars() + 1);
        variables.push(name);
        variables.extend(self.variables.iter().cloned());
        Arc::new(PolyRing {
            field: self.field.clone(),
            variables,
            term_cap: self.term_cap,
        })
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.variables.join(","))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_headers() {
        let r = PolyRing::parse("Q[x, y, z]").unwrap();
        assert_eq!(r.nvars(), 3);
        assert_eq!(r.to_string(), "Q[x,y,z]");
        let r = PolyRing::parse("GF(7)[a,b]").unwrap();
        assert_eq!(r.field().characteristic(), 7);
        assert!(PolyRing::parse("GF(8)[a]").is_err());
        assert!(PolyRing::parse("Q[x,x]").is_err());
        assert!(PolyRing::parse("Q[1x]").is_err());
        assert!(PolyRing::parse("Q[]").is_err());
        assert!(PolyRing::parse("R[x]").is_err());
    }

    #[test]
    fn leading_variable_is_fresh() {
        let r = PolyRing::rationals(&["t", "x"]).unwrap();
        let e = r.with_leading_variable("t");
        assert_eq!(e.variables(), &["t1", "t", "x"]);
    }
}
