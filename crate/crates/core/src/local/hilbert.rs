use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::leading_term_ideal;
use crate::ideal::Ideal;
use crate::poly::{minimalize, Monomial};

/// Hilbert series `h(t) / (1 - t)^D` of `k[x]/I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    /// Coefficients of `h`, lowest degree first.
    pub numerator: Vec<i64>,
    /// Pole order `D`; `-1` for the zero module.
    pub dimension: i64,
    /// `h(1)`; 0 for the zero module.
    pub multiplicity: i64,
}

type Numerator = Vec<i64>;

fn trim(mut p: Numerator) -> Numerator {
    while p.len() > 1 && *p.last().expect("nonempty") == 0 {
        p.pop();
    }
    p
}

fn add(a: &[i64], b: &[i64]) -> Numerator {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

fn mul(a: &[i64], b: &[i64]) -> Numerator {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn one_minus_t_pow(k: u64) -> Numerator {
    let mut p = vec![0; k as usize + 1];
    p[0] = 1;
    p[k as usize] -= 1;
    p
}

/// Numerator of the series over `(1 - t)^n`, by the pivot recursion
/// `N(I) = N(I + (x)) + t · N(I : x)`.
fn numerator(gens: Vec<Monomial>, memo: &mut HashMap<Vec<Monomial>, Numerator>) -> Numerator {
    let gens = minimalize(&gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return vec![0];
    }
    if let Some(n) = memo.get(&gens) {
        return n.clone();
    }
    let pairwise_coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    let result = if pairwise_coprime {
        gens.iter()
            .fold(vec![1], |acc, g| mul(&acc, &one_minus_t_pow(g.degree())))
    } else {
        // pivot on the variable occurring in the most generators
        let nvars = gens[0].nvars();
        let pivot = (0..nvars)
            .max_by_key(|&v| {
                (
                    gens.iter().filter(|g| g.exponents()[v] > 0).count(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("at least one variable");
        let x = Monomial::variable(nvars, pivot);
        let mut with_x = gens.clone();
        with_x.push(x.clone());
        let quotient: Vec<Monomial> = gens
            .iter()
            .map(|g| {
                let mut q = g.clone();
                let e = &mut q.exps_mut()[pivot];
                *e = e.saturating_sub(1);
                q
            })
            .collect();
        let a = numerator(with_x, memo);
        let b = numerator(quotient, memo);
        let mut tb = vec![0];
        tb.extend(b);
        add(&a, &tb)
    };
    memo.insert(gens, result.clone());
    result
}

/// Hilbert series of `k[x_1..x_n]/(gens)` for a monomial ideal.
pub fn hilbert_series(gens: &[Monomial], nvars: usize) -> HilbertData {
    let mut memo = HashMap::new();
    let mut h = numerator(gens.to_vec(), &mut memo);
    if h.iter().all(|&c| c == 0) {
        return HilbertData {
            numerator: vec![0],
            dimension: -1,
            multiplicity: 0,
        };
    }
    let mut dim = nvars as i64;
    while h.iter().sum::<i64>() == 0 {
        // synthetic division by (1 - t): q_i = Σ_{j ≤ i} h_j
        let mut q = Vec::with_capacity(h.len() - 1);
        let mut run = 0;
        for &c in &h[..h.len() - 1] {
            run += c;
            q.push(run);
        }
        h = trim(q);
        dim -= 1;
    }
    let multiplicity = h.iter().sum();
    HilbertData {
        numerator: h,
        dimension: dim,
        multiplicity,
    }
}

/// Hilbert data of `R/LT(I)` under grevlex.
pub fn hilbert_data(ideal: &Ideal) -> Result<HilbertData> {
    let gb = ideal.gb()?;
    Ok(hilbert_series(&leading_term_ideal(&gb), ideal.ring().nvars()))
}

/// Multiplicity of `R/I` at the ideal of all variables, for homogeneous
/// proper `I`.
pub fn multiplicity_graded(ideal: &Ideal) -> Result<i64> {
    if !ideal.is_homogeneous()? {
        return Err(Error::NonHomogeneous(format!(
            "{ideal}: graded multiplicity needs a homogeneous ideal; use orders of vanishing instead"
        )));
    }
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal("multiplicity"));
    }
    Ok(hilbert_data(ideal)?.multiplicity)
}

/// Degree of the projective closure of `V(I)`, read off the affine Hilbert
/// function of `R/I` (grevlex is degree compatible). Agrees with
/// [`multiplicity_graded`] on homogeneous ideals.
pub fn affine_degree(ideal: &Ideal) -> Result<i64> {
    if ideal.is_unit()? {
        return Err(Error::UnitIdeal("degree"));
    }
    Ok(hilbert_data(ideal)?.multiplicity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn principal_monomial() {
        let h = hilbert_series(&[m(&[1, 0])], 2);
        assert_eq!(
            h,
            HilbertData {
                numerator: vec![1],
                dimension: 1,
                multiplicity: 1
            }
        );
    }

    #[test]
    fn complete_intersection_of_length_two() {
        let h = hilbert_series(&[m(&[2, 0]), m(&[0, 1])], 2);
        assert_eq!(
            h,
            HilbertData {
                numerator: vec![1, 1],
                dimension: 0,
                multiplicity: 2
            }
        );
    }

    #[test]
    fn embedded_point() {
        let h = hilbert_series(&[m(&[2, 0]), m(&[1, 1])], 2);
        assert_eq!(h.dimension, 1);
        assert_eq!(h.multiplicity, 1);
        assert_eq!(h.numerator, vec![1, 1, -1]);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(hilbert_series(&[], 3).dimension, 3);
        assert_eq!(hilbert_series(&[], 3).multiplicity, 1);
        let unit = hilbert_series(&[m(&[0, 0])], 2);
        assert_eq!((unit.dimension, unit.multiplicity), (-1, 0));
    }

    #[test]
    fn graded_multiplicities() {
        let r = PolyRing::rationals(&["x", "y", "z"]).unwrap();
        let hyp = Ideal::parse(&r, &["x^3 + y^2*z - z^3"]).unwrap();
        assert_eq!(multiplicity_graded(&hyp).unwrap(), 3);
        let coord = Ideal::parse(&r, &["x", "y"]).unwrap();
        assert_eq!(multiplicity_graded(&coord).unwrap(), 1);
        let curve = Ideal::parse(&r, &["y^2 - x*z", "x^3 - y*z", "z^2 - x^2*y"]).unwrap();
        assert!(matches!(multiplicity_graded(&curve), Err(Error::NonHomogeneous(_))));
        assert_eq!(affine_degree(&curve).unwrap(), 5);
        assert!(matches!(
            multiplicity_graded(&Ideal::unit(&r)),
            Err(Error::UnitIdeal(_))
        ));
    }
}
