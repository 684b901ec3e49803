use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Signed, Zero};

use super::field::{render_abs, Coeff};
use super::monomial::Monomial;
use super::order::MonomialOrder;
use super::ring::PolyRing;
use crate::error::{Error, Result};

/// A multivariate polynomial in canonical form: a map from monomials to
/// nonzero coefficients.
///
/// Two polynomials are equal iff they live in equal rings and their term
/// maps agree. Polynomials are immutable values; all arithmetic returns new
/// polynomials.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, Coeff>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && *self.ring == *other.ring
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_int(ring: &Arc<PolyRing>, n: i64) -> Self {
        Self::constant(ring, ring.field().from_int(n))
    }

    /// `c * m`, dropping the term when `c` reduces to zero.
    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
        let c = ring
            .field()
            .normalize(c)
            .expect("coefficient has a denominator divisible by the characteristic");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn variable(ring: &Arc<PolyRing>, index: usize) -> Self {
        Self::monomial(ring, Monomial::variable(ring.nvars(), index), Coeff::one())
    }

    pub fn var(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        Ok(Self::variable(ring, ring.var_index(name)?))
    }

    /// Builds a polynomial from arbitrary `(monomial, coefficient)` pairs,
    /// combining like terms.
    pub fn from_terms<I>(ring: &Arc<PolyRing>, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let field = ring.field();
        let mut map: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::RingMismatch);
            }
            let c = field.normalize(c)?;
            accumulate(&mut map, m, c, field);
        }
        let p = Polynomial {
            ring: ring.clone(),
            terms: map,
        };
        p.check_cap()?;
        Ok(p)
    }

    pub(crate) fn from_map_unchecked(ring: &Arc<PolyRing>, terms: BTreeMap<Monomial, Coeff>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn parse(text: &str, ring: &Arc<PolyRing>) -> Result<Self> {
        super::parse::parse_polynomial(text, ring)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// Terms in canonical storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Constant term (coefficient of the unit monomial).
    pub fn constant_term(&self) -> Coeff {
        self.coefficient(&Monomial::one(self.ring.nvars()))
    }

    pub fn same_ring(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn check_cap(&self) -> Result<()> {
        if self.terms.len() > self.ring.term_cap() {
            Err(Error::TermCapExceeded {
                cap: self.ring.term_cap(),
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let field = self.ring.field();
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone(), field);
        }
        let p = Polynomial {
            ring: self.ring.clone(),
            terms,
        };
        p.check_cap()?;
        Ok(p)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg_ref())
    }

    /// Exact product.
    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_ring(other)?;
        let field = self.ring.field();
        let cap = self.ring.term_cap();
        let mut terms: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut terms, ma.mul(mb), field.mul(ca, cb), field);
            }
            if terms.len() > cap {
                return Err(Error::TermCapExceeded { cap });
            }
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.multiply(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.multiply(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let field = self.ring.field();
        let c = field.normalize(c.clone()).expect("invalid scalar");
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, &c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    fn neg_ref(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    /// Maximum total degree over terms; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Order of vanishing at the origin: the minimum total degree over
    /// terms, i.e. the largest `k` with `f` in `(x_1, ..., x_d)^k`.
    /// `None` stands for infinity (the zero polynomial).
    pub fn order_at_origin(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// True when `f` lies in the `k`-th power of the ideal of all variables.
    pub fn vanishes_to_order(&self, k: u64) -> bool {
        self.order_at_origin().is_none_or(|o| o >= k)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_weighted_homogeneous(&self, weights: &[u32]) -> bool {
        let mut degs = self.terms.keys().map(|m| m.weighted_degree(weights));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<&Monomial> {
        self.terms.keys().max_by(|a, b| order.cmp(a, b))
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    /// Scales so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.ring.field().inv(c).expect("nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for m in self.terms.keys() {
            for i in m.support() {
                used[i] = true;
            }
        }
        (0..used.len()).filter(|&i| used[i]).collect()
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let field = self.ring.field();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.exps_mut()[var] -= 1;
            let c = field.mul(c, &field.from_int(e as i64));
            if !c.is_zero() {
                terms.insert(d, c);
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Ring homomorphism into `target` sending each assigned variable to its
    /// image. Unassigned variables map to the variable of the same name in
    /// `target`, which must exist.
    pub fn substitute(&self, assignment: &BTreeMap<String, Polynomial>, target: &Arc<PolyRing>) -> Result<Polynomial> {
        if self.ring.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        let mut images: Vec<Polynomial> = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.variables() {
            let img = match assignment.get(name) {
                Some(p) => {
                    if *p.ring != **target {
                        return Err(Error::RingMismatch);
                    }
                    p.clone()
                }
                None => Polynomial::variable(target, target.index_of(name).ok_or(Error::RingMismatch)?),
            };
            images.push(img);
        }
        for name in assignment.keys() {
            self.ring.var_index(name)?;
        }
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.multiply(&images[i].pow(e)?)?;
                }
            }
            acc = acc.checked_add(&t)?;
        }
        Ok(acc)
    }

    /// Same-ring substitution of constants or polynomials for some variables.
    pub fn substitute_in_place(&self, assignment: &BTreeMap<String, Polynomial>) -> Result<Polynomial> {
        let ring = self.ring.clone();
        self.substitute(assignment, &ring)
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Result<Option<Polynomial>> {
        self.same_ring(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let order = MonomialOrder::GrevLex;
        let field = self.ring.field();
        let (glm, glc) = g.leading_term(&order).expect("nonzero");
        let (glm, ginv) = (glm.clone(), field.inv(glc)?);
        let mut rem = self.clone();
        let mut quot: BTreeMap<Monomial, Coeff> = BTreeMap::new();
        while let Some((lm, lc)) = rem.leading_term(&order) {
            if !glm.divides(lm) {
                return Ok(None);
            }
            let qm = glm.quotient_of(lm);
            let qc = field.mul(lc, &ginv);
            let step = g.mul_monomial(&qm).scale(&qc);
            rem = rem.checked_sub(&step)?;
            quot.insert(qm, qc);
        }
        Ok(Some(Polynomial {
            ring: self.ring.clone(),
            terms: quot,
        }))
    }

    /// Moves the polynomial into `ring`, which must equal this ring with one
    /// extra variable in front.
    pub(crate) fn embed_leading(&self, ring: &Arc<PolyRing>) -> Polynomial {
        debug_assert_eq!(ring.nvars(), self.ring.nvars() + 1);
        Polynomial {
            ring: ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with_leading_zero(), c.clone()))
                .collect(),
        }
    }

    /// Inverse of [`Polynomial::embed_leading`]; `None` if the leading
    /// variable occurs.
    pub(crate) fn contract_leading(&self, ring: &Arc<PolyRing>) -> Option<Polynomial> {
        if self.terms.keys().any(|m| m.exponents()[0] != 0) {
            return None;
        }
        Some(Polynomial {
            ring: ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.drop_leading(), c.clone())).collect(),
        })
    }

    /// Rendering with terms in descending grevlex order, e.g. `y^2 - x*z`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, Coeff>, m: Monomial, c: Coeff, field: &super::field::CoefficientField) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = field.add(o.get(), &c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

fn render_monomial(m: &Monomial, vars: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars[i].clone()),
            _ => parts.push(format!("{}^{}", vars[i], e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.variables();
        for (k, (m, c)) in self.sorted_terms(&MonomialOrder::GrevLex).into_iter().enumerate() {
            let negative = c.is_negative();
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = render_abs(c);
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", render_monomial(m, vars))?;
            } else {
                write!(f, "{}*{}", mag, render_monomial(m, vars))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self} in {})", self.ring)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial addition failed")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial subtraction failed")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.multiply(rhs).expect("polynomial multiplication failed")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}
