//! Normal forms and reduced Gröbner bases.
//!
//! Buchberger's algorithm with the product and chain criteria, normal
//! selection strategy (smallest lcm first) and a final inter-reduction.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{minimalize, Coeff, CoefficientField, Monomial, MonomialOrder, PolyRing, Polynomial};

/// Terms sorted ascending under the active order; the leading term is last.
#[derive(Debug, Clone)]
pub(crate) struct Sparse {
    terms: Vec<(Monomial, Coeff)>,
}

impl Sparse {
    fn from_poly(f: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<(Monomial, Coeff)> = f.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| order.cmp(&a.0, &b.0));
        Sparse { terms }
    }

    fn to_poly(&self, ring: &Arc<PolyRing>) -> Polynomial {
        Polynomial::from_map_unchecked(ring, self.terms.iter().cloned().collect::<BTreeMap<_, _>>())
    }

    fn lead(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.last()
    }

    fn lm(&self) -> &Monomial {
        &self.terms.last().expect("nonzero").0
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self, field: &CoefficientField) {
        if let Some((_, lc)) = self.terms.last() {
            if !lc.is_one() {
                let inv = field.inv(lc).expect("nonzero");
                for (_, c) in &mut self.terms {
                    *c = field.mul(c, &inv);
                }
            }
        }
    }
}

struct Ctx<'a> {
    order: &'a MonomialOrder,
    field: &'a CoefficientField,
    cap: usize,
}

impl Ctx<'_> {
    /// `p - c * m * g`, merging two ascending term lists.
    fn sub_scaled(
        &self,
        p: &[(Monomial, Coeff)],
        g: &Sparse,
        m: &Monomial,
        c: &Coeff,
    ) -> Result<Vec<(Monomial, Coeff)>> {
        let mut out = Vec::with_capacity(p.len() + g.terms.len());
        let mut a = p.iter().peekable();
        let mut b = g.terms.iter().map(|(gm, gc)| (gm.mul(m), gc)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => self.order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().expect("peeked").clone()),
                Ordering::Greater => {
                    let (bm, bc) = b.next().expect("peeked");
                    out.push((bm, self.field.neg(&self.field.mul(c, bc))));
                }
                Ordering::Equal => {
                    let (am, ac) = a.next().expect("peeked");
                    let (_, bc) = b.next().expect("peeked");
                    let v = self.field.sub(ac, &self.field.mul(c, bc));
                    if !v.is_zero() {
                        out.push((am.clone(), v));
                    }
                }
            }
        }
        if out.len() > self.cap {
            return Err(Error::TermCapExceeded { cap: self.cap });
        }
        Ok(out)
    }

    /// Full reduction of `p` by `basis`; the first divisor in list order
    /// is used at every step.
    fn reduce<'b, I>(&self, p: Sparse, basis: I) -> Result<Sparse>
    where
        I: Fn() -> Box<dyn Iterator<Item = &'b Sparse> + 'b>,
    {
        let mut p = p.terms;
        let mut rem: Vec<(Monomial, Coeff)> = Vec::new();
        while let Some((lm, lc)) = p.last() {
            let divisor = basis().find(|g| g.lm().divides(lm));
            match divisor {
                Some(g) => {
                    let (glm, glc) = g.lead().expect("nonzero");
                    let q = glm.quotient_of(lm);
                    let c = self.field.div(lc, glc)?;
                    p = self.sub_scaled(&p, g, &q, &c)?;
                }
                None => {
                    rem.push(p.pop().expect("nonempty"));
                }
            }
        }
        rem.reverse();
        Ok(Sparse { terms: rem })
    }

    fn s_poly(&self, f: &Sparse, g: &Sparse) -> Result<Sparse> {
        let (fm, fc) = f.lead().expect("nonzero");
        let (gm, gc) = g.lead().expect("nonzero");
        let l = fm.lcm(gm);
        let uf = fm.quotient_of(&l);
        let ug = gm.quotient_of(&l);
        // (l/fm)/fc * f - (l/gm)/gc * g
        let finv = self.field.inv(fc)?;
        let mut left: Vec<(Monomial, Coeff)> = f
            .terms
            .iter()
            .map(|(m, c)| (m.mul(&uf), self.field.mul(c, &finv)))
            .collect();
        left = self.sub_scaled(&left, g, &ug, &self.field.inv(gc)?)?;
        Ok(Sparse { terms: left })
    }
}

/// A Gröbner basis of an ideal under a fixed monomial order.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    sparse: Vec<Sparse>,
    reduced: bool,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.elements == other.elements && self.reduced == other.reduced
    }
}

impl GroebnerBasis {
    pub(crate) fn from_reduced(ring: &Arc<PolyRing>, order: &MonomialOrder, mut elements: Vec<Polynomial>) -> Self {
        elements.sort_by(|a, b| {
            order.cmp(
                b.leading_monomial(order).expect("nonzero"),
                a.leading_monomial(order).expect("nonzero"),
            )
        });
        let sparse = elements.iter().map(|f| Sparse::from_poly(f, order)).collect();
        GroebnerBasis {
            ring: ring.clone(),
            order: order.clone(),
            elements,
            sparse,
            reduced: true,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Elements sorted by descending leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The basis of the unit ideal is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sparse.iter().map(|s| s.lm().clone()).collect()
    }

    /// Remainder of `f` on division by this basis.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if !Arc::ptr_eq(f.ring(), &self.ring) && f.ring() != &self.ring {
            return Err(Error::RingMismatch);
        }
        let ctx = Ctx {
            order: &self.order,
            field: self.ring.field(),
            cap: self.ring.term_cap(),
        };
        let r = ctx.reduce(Sparse::from_poly(f, &self.order), || Box::new(self.sparse.iter()))?;
        Ok(r.to_poly(&self.ring))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Checks that every S-polynomial of the basis reduces to zero.
    pub fn verify_certificate(&self) -> Result<bool> {
        let ctx = Ctx {
            order: &self.order,
            field: self.ring.field(),
            cap: self.ring.term_cap(),
        };
        for i in 0..self.sparse.len() {
            for j in i + 1..self.sparse.len() {
                let s = ctx.s_poly(&self.sparse[i], &self.sparse[j])?;
                if !ctx.reduce(s, || Box::new(self.sparse.iter()))?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Checks the reducedness invariants: monic elements and no term
    /// divisible by another element's leading monomial.
    pub fn verify_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.sparse.iter().enumerate().all(|(i, g)| {
            g.lead().is_some_and(|(_, c)| c.is_one())
                && g.terms
                    .iter()
                    .all(|(m, _)| lms.iter().enumerate().all(|(j, l)| j == i || !l.divides(m)))
        })
    }
}

/// Multivariate division: remainder of `f` modulo `basis` under `order`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    for g in basis {
        f.same_ring(g)?;
        if g.is_zero() {
            return Err(Error::InvalidInput("basis contains the zero polynomial".into()));
        }
    }
    let ring = f.ring();
    let ctx = Ctx {
        order,
        field: ring.field(),
        cap: ring.term_cap(),
    };
    let sparse: Vec<Sparse> = basis.iter().map(|g| Sparse::from_poly(g, order)).collect();
    let r = ctx.reduce(Sparse::from_poly(f, order), || Box::new(sparse.iter()))?;
    Ok(r.to_poly(ring))
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
pub fn buchberger(generators: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    let ring = match generators.first() {
        Some(g) => g.ring().clone(),
        None => {
            return Err(Error::InvalidInput(
                "cannot infer the ring of an empty generator list; use buchberger_in".into(),
            ))
        }
    };
    buchberger_in(&ring, generators, order)
}

pub fn buchberger_in(ring: &Arc<PolyRing>, generators: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    for g in generators {
        if g.ring() != ring {
            return Err(Error::RingMismatch);
        }
    }
    let field = ring.field();
    let ctx = Ctx {
        order,
        field,
        cap: ring.term_cap(),
    };
    let unit = || GroebnerBasis::from_reduced(ring, order, vec![Polynomial::one(ring)]);

    let mut basis: Vec<Sparse> = Vec::new();
    for g in generators.iter().filter(|g| !g.is_zero()) {
        if g.is_constant() {
            return Ok(unit());
        }
        let mut s = Sparse::from_poly(g, order);
        s.make_monic(field);
        basis.push(s);
    }
    if basis.is_empty() {
        return Ok(GroebnerBasis::from_reduced(ring, order, Vec::new()));
    }

    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut pairs: Vec<(usize, usize, Monomial)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j, basis[i].lm().lcm(basis[j].lm())));
            pending.insert((i, j));
        }
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm, ties broken by index
        let mut best = 0;
        for k in 1..pairs.len() {
            let c = order
                .cmp(&pairs[k].2, &pairs[best].2)
                .then_with(|| (pairs[k].0, pairs[k].1).cmp(&(pairs[best].0, pairs[best].1)));
            if c == Ordering::Less {
                best = k;
            }
        }
        let (i, j, lcm) = pairs.swap_remove(best);
        pending.remove(&(i, j));

        if basis[i].lm().is_coprime(basis[j].lm()) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let s = ctx.s_poly(&basis[i], &basis[j])?;
        let mut r = ctx.reduce(s, || Box::new(basis.iter()))?;
        if r.is_zero() {
            continue;
        }
        r.make_monic(field);
        if r.lm().is_one() {
            return Ok(unit());
        }
        let n = basis.len();
        for (k, b) in basis.iter().enumerate() {
            pairs.push((k, n, b.lm().lcm(r.lm())));
            pending.insert((k, n));
        }
        basis.push(r);
    }

    // minimal basis: drop elements whose leading monomial is divisible by
    // another's (first occurrence wins on ties)
    let keep: Vec<usize> = (0..basis.len())
        .filter(|&i| {
            !(0..basis.len())
                .any(|k| k != i && basis[k].lm().divides(basis[i].lm()) && (basis[k].lm() != basis[i].lm() || k < i))
        })
        .collect();
    let minimal: Vec<Sparse> = keep.iter().map(|&i| basis[i].clone()).collect();

    let mut reduced = Vec::with_capacity(minimal.len());
    for (i, g) in minimal.iter().enumerate() {
        let (lead, tail) = g.terms.split_last().expect("nonzero");
        let others: Vec<&Sparse> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, s)| s)
            .collect();
        let tail = ctx.reduce(Sparse { terms: tail.to_vec() }, || Box::new(others.iter().copied()))?;
        let mut terms = tail.terms;
        terms.push(lead.clone());
        let mut s = Sparse { terms };
        s.make_monic(field);
        reduced.push(s.to_poly(ring));
    }
    Ok(GroebnerBasis::from_reduced(ring, order, reduced))
}

/// Minimal generators of the leading-term ideal of `basis`.
pub fn leading_term_ideal(basis: &GroebnerBasis) -> Vec<Monomial> {
    minimalize(&basis.leading_monomials())
}
