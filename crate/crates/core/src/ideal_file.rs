//! Text format for a ring and a set of named ideals.
//!
//! ```text
//! # the (3,4,5) monomial curve
//! ring Q[x,y,z]
//! ideal p = y^2 - x*z, x^3 - y*z, z^2 - x^2*y  witness=x dim=1 weights=3,4,5
//! ideal q = z
//! ```
//!
//! Attributes are trailing whitespace-separated `key=value` tokens; the
//! known keys are `witness`, `dim` and `weights`.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::local::PrimeWitness;
use crate::poly::{PolyRing, Polynomial};

#[derive(Debug, Clone)]
pub struct IdealEntry {
    pub name: String,
    pub ideal: Ideal,
    pub witness: Option<Polynomial>,
    pub dim: Option<usize>,
    pub weights: Option<Vec<u32>>,
    pub line: usize,
}

impl IdealEntry {
    /// Interprets the entry as a prime, honouring its attributes.
    pub fn prime(&self) -> Result<PrimeWitness> {
        let weights = self
            .weights
            .clone()
            .unwrap_or_else(|| vec![1; self.ideal.ring().nvars()]);
        PrimeWitness::with_weights(self.ideal.clone(), self.dim, self.witness.clone(), weights)
            .map_err(|e| e.at_line(self.line))
    }
}

#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ring: Arc<PolyRing>,
    pub entries: Vec<IdealEntry>,
}

impl IdealFile {
    pub fn read(path: impl AsRef<Path>, term_cap: Option<usize>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        Self::parse_with_term_cap(&text, term_cap)
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with_term_cap(text, None)
    }

    /// Parses with the given term cap on the ring instead of the default.
    pub fn parse_with_term_cap(text: &str, term_cap: Option<usize>) -> Result<Self> {
        let mut ring: Option<Arc<PolyRing>> = None;
        let mut entries: Vec<IdealEntry> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (keyword, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
            match keyword {
                "ring" => {
                    if ring.is_some() {
                        return Err(Error::InvalidInput("second ring header".into()).at_line(line));
                    }
                    let r = PolyRing::parse(rest.trim()).map_err(|e| e.at_line(line))?;
                    ring = Some(match term_cap {
                        Some(cap) => r.with_term_cap(cap),
                        None => r,
                    });
                }
                "ideal" => {
                    let r = ring
                        .as_ref()
                        .ok_or_else(|| Error::InvalidInput("ideal before ring header".into()).at_line(line))?;
                    let entry = parse_entry(r, rest, line).map_err(|e| match e {
                        Error::AtLine { .. } => e,
                        other => other.at_line(line),
                    })?;
                    if entries.iter().any(|e| e.name == entry.name) {
                        return Err(Error::InvalidInput(format!("duplicate ideal `{}`", entry.name)).at_line(line));
                    }
                    entries.push(entry);
                }
                other => {
                    return Err(Error::InvalidInput(format!("unknown directive `{other}`")).at_line(line));
                }
            }
        }
        let ring = ring.ok_or_else(|| Error::InvalidInput("missing `ring` header".into()))?;
        Ok(IdealFile { ring, entries })
    }

    pub fn get(&self, name: &str) -> Result<&IdealEntry> {
        self.entries
            .iter()
            .find(|e| e.name == name)
            .ok_or_else(|| Error::InvalidInput(format!("no ideal named `{name}`")))
    }
}

fn parse_entry(ring: &Arc<PolyRing>, rest: &str, line: usize) -> Result<IdealEntry> {
    let (name, body) = rest
        .split_once('=')
        .ok_or_else(|| Error::InvalidInput("expected `ideal <name> = <generators>`".into()))?;
    let name = name.trim();
    if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
        return Err(Error::InvalidInput(format!("bad ideal name `{name}`")));
    }
    let mut tokens: Vec<&str> = body.split_whitespace().collect();
    let mut attrs = Vec::new();
    while let Some(t) = tokens.last() {
        if t.contains('=') {
            attrs.push(tokens.pop().expect("nonempty"));
        } else {
            break;
        }
    }
    let gens_text = tokens.join(" ");
    let mut gens = Vec::new();
    for g in gens_text.split(',') {
        let g = g.trim();
        if g.is_empty() {
            return Err(Error::InvalidInput(format!("empty generator in `{name}`")));
        }
        gens.push(Polynomial::parse(g, ring)?);
    }
    let mut entry = IdealEntry {
        name: name.to_string(),
        ideal: Ideal::new(ring, gens)?,
        witness: None,
        dim: None,
        weights: None,
        line,
    };
    for a in attrs.into_iter().rev() {
        let (k, v) = a.split_once('=').expect("token contains =");
        match k {
            "witness" => entry.witness = Some(Polynomial::parse(v, ring)?),
            "dim" => entry.dim = Some(v.parse().map_err(|_| Error::InvalidInput(format!("bad dim `{v}`")))?),
            "weights" => {
                let w = v
                    .split(',')
                    .map(|s| s.parse::<u32>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| Error::InvalidInput(format!("bad weights `{v}`")))?;
                entry.weights = Some(w);
            }
            other => return Err(Error::InvalidInput(format!("unknown attribute `{other}`"))),
        }
    }
    Ok(entry)
}

impl fmt::Display for IdealFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {}", self.ring)?;
        for e in &self.entries {
            let gens: Vec<String> = e.ideal.generators().iter().map(|g| g.to_string()).collect();
            write!(f, "ideal {} = {}", e.name, gens.join(", "))?;
            if let Some(w) = &e.witness {
                write!(f, " witness={}", w.to_string().replace(' ', ""))?;
            }
            if let Some(d) = e.dim {
                write!(f, " dim={d}")?;
            }
            if let Some(w) = &e.weights {
                let w: Vec<String> = w.iter().map(u32::to_string).collect();
                write!(f, " weights={}", w.join(","))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CURVE: &str = "# curve\nring Q[x,y,z]\n\nideal p = y^2 - x*z, x^3 - y*z, z^2 - x^2*y  witness=x dim=1 weights=3,4,5\nideal q = z # plane\n";

    #[test]
    fn parses_entries_and_attributes() {
        let f = IdealFile::parse(CURVE).unwrap();
        assert_eq!(f.ring.nvars(), 3);
        let p = f.get("p").unwrap();
        assert_eq!(p.ideal.generators().len(), 3);
        assert_eq!(p.dim, Some(1));
        assert_eq!(p.weights.as_deref(), Some(&[3, 4, 5][..]));
        assert_eq!(p.witness.as_ref().unwrap().to_string(), "x");
        assert!(p.prime().unwrap().is_graded());
        assert_eq!(f.get("q").unwrap().line, 5);
    }

    #[test]
    fn round_trips_through_display() {
        let f = IdealFile::parse(CURVE).unwrap();
        let g = IdealFile::parse(&f.to_string()).unwrap();
        assert_eq!(f.to_string(), g.to_string());
    }

    #[test]
    fn reports_line_numbers() {
        let err = IdealFile::parse("ring Q[x]\nideal p = x  colour=red\n").unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 2, .. }), "{err}");
        let err = IdealFile::parse("ideal p = x\n").unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 1, .. }));
        let err = IdealFile::parse("ring Q[x]\nideal p = x +\n").unwrap_err();
        assert!(matches!(err, Error::AtLine { line: 2, .. }));
        assert!(IdealFile::parse("ring Q[x]\n").unwrap().get("p").is_err());
    }
}
