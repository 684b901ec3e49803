//! Ideals of a polynomial ring and the operations on them.
//!
//! Every ideal-theoretic question is answered through a reduced Gröbner
//! basis, computed on demand and cached per monomial order.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, RwLock};

use num::One;

use crate::error::{Error, Result};
use crate::groebner::{buchberger_in, leading_term_ideal, GroebnerBasis};
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

/// A finitely generated ideal with a populate-once Gröbner basis cache.
pub struct Ideal {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    cache: RwLock<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self} in {}", self.ring)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl Ideal {
    /// Ideal generated by `generators`; zeros and duplicates are dropped.
    pub fn new(ring: &Arc<PolyRing>, generators: Vec<Polynomial>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut gens = Vec::with_capacity(generators.len());
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() && seen.insert(g.clone()) {
                gens.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: gens,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &Arc<PolyRing>, generators: &[S]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|g| Polynomial::parse(g.as_ref(), ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Self::new(ring, Vec::new()).expect("empty generator list")
    }

    pub fn unit(ring: &Arc<PolyRing>) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    /// The ideal generated by the variables with the given indices.
    pub fn coordinate(ring: &Arc<PolyRing>, vars: &[usize]) -> Self {
        let gens = vars.iter().map(|&i| Polynomial::variable(ring, i)).collect();
        Self::new(ring, gens).expect("same ring")
    }

    /// The ideal of all variables (the origin).
    pub fn maximal(ring: &Arc<PolyRing>) -> Self {
        let all: Vec<usize> = (0..ring.nvars()).collect();
        Self::coordinate(ring, &all)
    }

    /// Ideal whose reduced Gröbner basis under `order` is already known.
    pub(crate) fn from_basis(ring: &Arc<PolyRing>, basis: GroebnerBasis) -> Self {
        let ideal = Self::new(ring, basis.elements().to_vec()).expect("same ring");
        ideal
            .cache
            .write()
            .expect("cache lock")
            .insert(basis.order().clone(), Arc::new(basis));
        ideal
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn check_poly(&self, f: &Polynomial) -> Result<()> {
        if f.ring() == &self.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Reduced Gröbner basis under `order`, computed once and cached.
    pub fn groebner(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.read().expect("cache lock").get(order) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger_in(&self.ring, &self.generators, order)?);
        // a racing thread may have filled the slot; both results are identical
        let mut cache = self.cache.write().expect("cache lock");
        Ok(cache.entry(order.clone()).or_insert(gb).clone())
    }

    /// Reduced grevlex basis.
    pub fn gb(&self) -> Result<Arc<GroebnerBasis>> {
        self.groebner(&MonomialOrder::GrevLex)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit())
    }

    pub fn is_proper(&self) -> Result<bool> {
        Ok(!self.is_unit()?)
    }

    /// Membership test by zero normal form.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        self.gb()?.contains(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        let gb = self.gb()?;
        for g in &other.generators {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Ideal equality via uniqueness of the reduced grevlex basis.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gb()?.elements() == other.gb()?.elements())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.generators.len() * other.generators.len());
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f.multiply(g)?);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I^k`, generated by the products over multisets of `k` generators;
    /// `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> Result<Ideal> {
        if k == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        let n = self.generators.len();
        // products over non-decreasing index sequences, grown one factor at a time
        let mut layer: Vec<(usize, Polynomial)> = (0..n).map(|i| (i, self.generators[i].clone())).collect();
        for _ in 1..k {
            let mut next = Vec::new();
            for (last, p) in &layer {
                for j in *last..n {
                    next.push((j, p.multiply(&self.generators[j])?));
                }
            }
            layer = next;
        }
        Ideal::new(&self.ring, layer.into_iter().map(|(_, p)| p).collect())
    }

    /// `I ∩ J` by elimination of an auxiliary variable `t` from
    /// `t·I + (1 - t)·J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        let ext = self.ring.with_leading_variable("t");
        let t = Polynomial::variable(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).checked_sub(&t)?;
        let mut gens = Vec::with_capacity(self.generators.len() + other.generators.len());
        for f in &self.generators {
            gens.push(t.multiply(&f.embed_leading(&ext))?);
        }
        for g in &other.generators {
            gens.push(one_minus_t.multiply(&g.embed_leading(&ext))?);
        }
        let order = MonomialOrder::block(&[0], MonomialOrder::GrevLex);
        let gb = buchberger_in(&ext, &gens, &order)?;
        let kept: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter_map(|g| g.contract_leading(&self.ring))
            .collect();
        let basis = GroebnerBasis::from_reduced(&self.ring, &MonomialOrder::GrevLex, kept);
        Ok(Ideal::from_basis(&self.ring, basis))
    }

    /// `I : f = { g : g·f ∈ I }`, computed from `I ∩ (f)`.
    pub fn colon_by(&self, f: &Polynomial) -> Result<Ideal> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let principal = Ideal::new(&self.ring, vec![f.clone()])?;
        let meet = self.intersection(&principal)?;
        let mut gens = Vec::with_capacity(meet.generators.len());
        for g in meet.gb()?.elements() {
            let q = g.div_exact(f)?.expect("every element of I ∩ (f) is divisible by f");
            gens.push(q);
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I : J`, the intersection of `I : g` over the generators `g` of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.same_ring(other)?;
        let mut acc: Option<Ideal> = None;
        for g in &other.generators {
            let q = self.colon_by(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `I : f^∞` by iterated colon until the chain stabilizes. Also returns
    /// the saturation index, the least `k` with `I : f^k = I : f^∞`.
    pub fn saturation(&self, f: &Polynomial) -> Result<(Ideal, usize)> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let mut current = self.clone();
        let mut index = 0;
        loop {
            let next = current.colon_by(f)?;
            if next.equals(&current)? {
                return Ok((current, index));
            }
            current = next;
            index += 1;
        }
    }

    /// Whether some power of `f` lies in `I`: `1 ∈ I + (1 - y·f)` in the
    /// ring extended by `y`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        self.check_poly(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        let ext = self.ring.with_leading_variable("y");
        let y = Polynomial::variable(&ext, 0);
        let mut gens: Vec<Polynomial> = self.generators.iter().map(|g| g.embed_leading(&ext)).collect();
        gens.push(Polynomial::one(&ext).checked_sub(&y.multiply(&f.embed_leading(&ext))?)?);
        Ok(buchberger_in(&ext, &gens, &MonomialOrder::GrevLex)?.is_unit())
    }

    /// `dim(R/I)`: the largest set of variables that no leading monomial
    /// of the grevlex basis is supported on.
    pub fn krull_dimension(&self) -> Result<usize> {
        let gb = self.gb()?;
        if gb.is_unit() {
            return Err(Error::UnitIdeal("Krull dimension"));
        }
        Ok(monomial_dimension(&leading_term_ideal(&gb), self.ring.nvars()))
    }

    /// Height of `I`, i.e. `d - dim(R/I)`.
    pub fn height(&self) -> Result<usize> {
        Ok(self.ring.nvars() - self.krull_dimension()?)
    }

    /// `I ∩ k[remaining variables]`, returned as an ideal of the same ring.
    pub fn eliminate<S: AsRef<str>>(&self, vars: &[S]) -> Result<Ideal> {
        let idx = vars
            .iter()
            .map(|v| self.ring.var_index(v.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        self.eliminate_indices(&idx)
    }

    pub fn eliminate_indices(&self, vars: &[usize]) -> Result<Ideal> {
        if vars.iter().any(|&i| i >= self.ring.nvars()) {
            return Err(Error::InvalidInput("variable index out of range".into()));
        }
        let order = MonomialOrder::block(vars, MonomialOrder::GrevLex);
        let gb = self.groebner(&order)?;
        let kept: Vec<Polynomial> = gb
            .elements()
            .iter()
            .filter(|g| g.support().iter().all(|v| !vars.contains(v)))
            .cloned()
            .collect();
        let basis = GroebnerBasis::from_reduced(&self.ring, &MonomialOrder::GrevLex, kept);
        Ok(Ideal::from_basis(&self.ring, basis))
    }

    /// Homogeneous iff the reduced grevlex basis consists of forms.
    pub fn is_homogeneous(&self) -> Result<bool> {
        if self.generators.iter().all(Polynomial::is_homogeneous) {
            return Ok(true);
        }
        Ok(self.gb()?.elements().iter().all(Polynomial::is_homogeneous))
    }

    pub fn is_weighted_homogeneous(&self, weights: &[u32]) -> Result<bool> {
        if self.generators.iter().all(|g| g.is_weighted_homogeneous(weights)) {
            return Ok(true);
        }
        Ok(self.gb()?.elements().iter().all(|g| g.is_weighted_homogeneous(weights)))
    }

    /// Whether every generator is a single term.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.nterms() == 1)
    }

    /// Minimal monomial generators, when the ideal is monomial.
    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        if !self.is_monomial() {
            return None;
        }
        let monos: Vec<Monomial> = self
            .generators
            .iter()
            .map(|g| g.terms().next().expect("nonzero").0.clone())
            .collect();
        Some(crate::poly::minimalize(&monos))
    }

    /// Variable indices when the ideal is generated by a subset of the
    /// variables.
    pub fn coordinate_variables(&self) -> Result<Option<Vec<usize>>> {
        let gb = self.gb()?;
        let mut vars = Vec::new();
        for g in gb.elements() {
            let mut terms = g.terms();
            match (terms.next(), terms.next()) {
                (Some((m, c)), None) if c.is_one() && m.degree() == 1 => {
                    vars.push(m.support().next().expect("degree one"));
                }
                _ => return Ok(None),
            }
        }
        vars.sort_unstable();
        Ok(Some(vars))
    }

    /// Whether the ideal is principal, judged by its reduced basis.
    pub fn is_principal(&self) -> Result<bool> {
        Ok(self.gb()?.len() == 1 || self.generators.len() == 1)
    }
}

/// Subsets of `0..nvars` (as bitmasks) of the given size that contain the
/// support of no monomial in `lts`.
pub fn independent_sets(lts: &[Monomial], nvars: usize, size: usize) -> Vec<u64> {
    assert!(nvars <= 32, "independent-set search is limited to 32 variables");
    let supports: Vec<u64> = lts
        .iter()
        .map(|m| m.support().fold(0u64, |acc, i| acc | (1 << i)))
        .collect();
    (0u64..(1u64 << nvars))
        .filter(|s| s.count_ones() as usize == size)
        .filter(|s| supports.iter().all(|sup| sup & !s != 0))
        .collect()
}

/// Dimension of `k[x]/(lts)`: the largest independent variable set.
pub fn monomial_dimension(lts: &[Monomial], nvars: usize) -> usize {
    (0..=nvars)
        .rev()
        .find(|&k| !independent_sets(lts, nvars, k).is_empty())
        .unwrap_or(0)
}
