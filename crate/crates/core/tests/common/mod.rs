//! Independent oracles: dense exact linear algebra, brute-force monomial
//! enumeration and naive arithmetic. Nothing here calls the Gröbner code.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num::{BigRational, One, Zero};
use sympow::poly::{Monomial, PolyRing, Polynomial};

pub type Q = BigRational;
pub type Dense = BTreeMap<Vec<u32>, Q>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn dense(p: &Polynomial) -> Dense {
    p.terms().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect()
}

pub fn from_dense(ring: &Arc<PolyRing>, d: &Dense) -> Polynomial {
    Polynomial::from_terms(ring, d.iter().map(|(e, c)| (Monomial::from_exponents(e), c.clone()))).unwrap()
}

/// Term-by-term product with a plain hash map.
pub fn schoolbook_mul(a: &Dense, b: &Dense) -> Dense {
    let mut acc: HashMap<Vec<u32>, Q> = HashMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *acc.entry(e).or_insert_with(Q::zero) += ca * cb;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

pub fn dense_add(a: &Dense, b: &Dense) -> Dense {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(e.clone()).or_insert_with(Q::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn min_degree(a: &Dense) -> Option<u32> {
    a.keys().map(|e| e.iter().sum()).min()
}

/// All exponent vectors of total degree exactly `deg`.
pub fn monomials_of_degree(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    if nvars == 0 {
        return if deg == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=deg).rev() {
        for mut rest in monomials_of_degree(nvars - 1, deg - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn monomials_up_to(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    (0..=deg).flat_map(|k| monomials_of_degree(nvars, k)).collect()
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Incremental row echelon form over `Q` on sparse vectors indexed by
/// arbitrary ordered keys. Pivots are the smallest nonzero key.
#[derive(Default, Clone)]
pub struct RowSpace<K: Ord + Clone> {
    rows: BTreeMap<K, BTreeMap<K, Q>>,
}

impl<K: Ord + Clone> RowSpace<K> {
    pub fn new() -> Self {
        RowSpace { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: BTreeMap<K, Q>) -> BTreeMap<K, Q> {
        loop {
            let pivot = v
                .iter()
                .find(|(k, _)| self.rows.contains_key(*k))
                .map(|(k, c)| (k.clone(), c.clone()));
            let Some((k, c)) = pivot else { return v };
            let row = &self.rows[&k];
            for (rk, rc) in row {
                let e = v.entry(rk.clone()).or_insert_with(Q::zero);
                *e -= &c * rc;
                if e.is_zero() {
                    v.remove(rk);
                }
            }
        }
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: BTreeMap<K, Q>) -> bool {
        let v = self.reduce(v);
        let Some((k, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = Q::one() / c;
        let row: BTreeMap<K, Q> = v.into_iter().map(|(k, x)| (k, x * &inv)).collect();
        self.rows.insert(k, row);
        true
    }

    pub fn contains(&self, v: BTreeMap<K, Q>) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = &BTreeMap<K, Q>> {
        self.rows.values()
    }
}

/// Span of `{ x^a * g : g in gens, deg(x^a * g) <= bound }`.
pub fn truncated_span(gens: &[Polynomial], nvars: usize, bound: u32) -> RowSpace<Vec<u32>> {
    let mut span = RowSpace::new();
    for g in gens {
        let dg = dense(g);
        let top: u32 = dg.keys().map(|e| e.iter().sum::<u32>()).max().unwrap_or(0);
        if top > bound {
            continue;
        }
        for mono in monomials_up_to(nvars, bound - top) {
            let shifted: BTreeMap<Vec<u32>, Q> = dg
                .iter()
                .map(|(e, c)| (e.iter().zip(&mono).map(|(x, y)| x + y).collect(), c.clone()))
                .collect();
            span.insert(shifted);
        }
    }
    span
}

/// Basis of the intersection of two subspaces (Zassenhaus).
pub fn subspace_intersection(a: &RowSpace<Vec<u32>>, b: &RowSpace<Vec<u32>>) -> Vec<Dense> {
    // keys: (0, e) for the left copy, (1, e) for the right copy
    let mut z: RowSpace<(u8, Vec<u32>)> = RowSpace::new();
    for r in a.rows() {
        let mut v = BTreeMap::new();
        for (e, c) in r {
            v.insert((0u8, e.clone()), c.clone());
            v.insert((1u8, e.clone()), c.clone());
        }
        z.insert(v);
    }
    for r in b.rows() {
        z.insert(r.iter().map(|(e, c)| ((0u8, e.clone()), c.clone())).collect());
    }
    z.rows()
        .filter(|r| r.keys().next().map(|k| k.0 == 1).unwrap_or(false))
        .map(|r| r.iter().map(|((_, e), c)| (e.clone(), c.clone())).collect())
        .collect()
}

/// `dim_k (k[x]/I)_deg` for a homogeneous ideal by linear algebra on the
/// degree-`deg` multiples of the generators.
pub fn hilbert_function_linear_algebra(gens: &[Polynomial], nvars: usize, deg: u32) -> usize {
    let mut span: RowSpace<Vec<u32>> = RowSpace::new();
    for g in gens {
        let dg = dense(g);
        let gd: u32 = dg.keys().next().map(|e| e.iter().sum()).unwrap_or(0);
        if gd > deg {
            continue;
        }
        for mono in monomials_of_degree(nvars, deg - gd) {
            span.insert(
                dg.iter()
                    .map(|(e, c)| (e.iter().zip(&mono).map(|(x, y)| x + y).collect(), c.clone()))
                    .collect(),
            );
        }
    }
    monomials_of_degree(nvars, deg).len() - span.rank()
}

/// Degree-`deg` monomials outside the monomial ideal generated by `lts`.
pub fn count_standard_monomials(lts: &[Vec<u32>], nvars: usize, deg: u32) -> usize {
    monomials_of_degree(nvars, deg)
        .into_iter()
        .filter(|m| !lts.iter().any(|g| divides(g, m)))
        .count()
}

/// Largest set of variables containing the support of no generator.
pub fn brute_force_dimension(lts: &[Vec<u32>], nvars: usize) -> Option<usize> {
    if lts.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return None;
    }
    let mut best = 0;
    for mask in 0u32..(1 << nvars) {
        let ok = lts
            .iter()
            .all(|g| g.iter().enumerate().any(|(v, &e)| e > 0 && mask & (1 << v) == 0));
        if ok {
            best = best.max(mask.count_ones() as usize);
        }
    }
    Some(best)
}

/// Substitutes `x_i = t^a_i` and returns the resulting univariate
/// polynomial as exponent -> coefficient.
pub fn substitute_curve(p: &Polynomial, exps: &[u32]) -> BTreeMap<u64, Q> {
    let mut out: BTreeMap<u64, Q> = BTreeMap::new();
    for (m, c) in p.terms() {
        let t: u64 = m.exponents().iter().zip(exps).map(|(&e, &a)| e as u64 * a as u64).sum();
        *out.entry(t).or_insert_with(Q::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn monomial(exps: &[u32]) -> Monomial {
    Monomial::from_exponents(exps)
}
