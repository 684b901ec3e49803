//! Bundled prime pairs and complete-intersection pairs used by the
//! `verify --fixtures` batch mode, the examples and the test suites.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::monomial_curve_prime;
use crate::error::Result;
use crate::ideal::Ideal;
use crate::local::PrimeWitness;
use crate::poly::PolyRing;

/// A named pair of primes.
#[derive(Debug, Clone)]
pub struct PrimePair {
    pub name: String,
    pub p: PrimeWitness,
    pub q: PrimeWitness,
}

/// A named pair of ideals generated by regular sequences.
#[derive(Debug, Clone)]
pub struct CiPair {
    pub name: String,
    pub i: Ideal,
    pub j: Ideal,
}

fn pair(name: impl Into<String>, p: PrimeWitness, q: PrimeWitness) -> PrimePair {
    PrimePair {
        name: name.into(),
        p,
        q,
    }
}

fn prime(ring: &Arc<PolyRing>, gens: &[&str]) -> Result<PrimeWitness> {
    PrimeWitness::new(Ideal::parse(ring, gens)?, None, None)
}

/// Two lines in a common plane of 3-space: `(x1, x2)` and `(x2, x3)`.
/// The primes meet only at the origin but their dimensions add up to 2.
pub fn coplanar_lines() -> Result<PrimePair> {
    let r = PolyRing::indexed("x", 3)?;
    Ok(pair(
        "coplanar_lines",
        PrimeWitness::coordinate(&r, &[0, 1])?,
        PrimeWitness::coordinate(&r, &[1, 2])?,
    ))
}

/// `p = (x1..xi)`, `q = (x(i+1)..xd)` in `d` variables.
pub fn transverse_coordinate_pair(d: usize, i: usize) -> Result<PrimePair> {
    assert!(0 < i && i < d, "split must leave both sides nonempty");
    let r = PolyRing::indexed("x", d)?;
    let left: Vec<usize> = (0..i).collect();
    let right: Vec<usize> = (i..d).collect();
    Ok(pair(
        format!("transverse_coordinate_pair_d{d}_i{i}"),
        PrimeWitness::coordinate(&r, &left)?,
        PrimeWitness::coordinate(&r, &right)?,
    ))
}

/// Every transverse coordinate split with `2 <= d <= max_d`.
pub fn transverse_coordinate_splits(max_d: usize) -> Result<Vec<PrimePair>> {
    let mut out = Vec::new();
    for d in 2..=max_d {
        for i in 1..d {
            out.push(transverse_coordinate_pair(d, i)?);
        }
    }
    Ok(out)
}

/// Curated homogeneous (possibly for a weighted grading) prime pairs that
/// meet only at the origin in complementary dimensions.
pub fn theorem_pairs() -> Result<Vec<PrimePair>> {
    let xyz = PolyRing::rationals(&["x", "y", "z"])?;
    let wxyz = PolyRing::rationals(&["w", "x", "y", "z"])?;
    let abcd = PolyRing::rationals(&["a", "b", "c", "d"])?;
    let curve345 = monomial_curve_prime(&[3, 4, 5], &xyz)?;
    let curve123 = monomial_curve_prime(&[1, 2, 3], &xyz)?;
    let cone = prime(&abcd, &["a*c - b^2", "a*d - b*c", "b*d - c^2"])?;

    let mut out = vec![
        pair("plane_and_line", prime(&xyz, &["x"])?, prime(&xyz, &["y", "z"])?),
        pair("line_and_plane", prime(&xyz, &["x", "y"])?, prime(&xyz, &["z"])?),
        pair(
            "two_lines_in_plane",
            prime(&PolyRing::rationals(&["x", "y"])?, &["x"])?,
            {
                let r = PolyRing::rationals(&["x", "y"])?;
                prime(&r, &["y"])?
            },
        ),
        pair(
            "planes_in_four_space",
            prime(&wxyz, &["w", "x"])?,
            prime(&wxyz, &["y", "z"])?,
        ),
        pair(
            "hyperplane_and_line_in_four_space",
            prime(&wxyz, &["w"])?,
            prime(&wxyz, &["x", "y", "z"])?,
        ),
    ];
    for (name, vars) in [
        ("curve345_and_plane_x", &["x"]),
        ("curve345_and_plane_y", &["y"]),
        ("curve345_and_plane_z", &["z"]),
    ] {
        out.push(pair(name, curve345.clone(), prime(&xyz, vars)?));
    }
    out.push(pair("curve123_and_plane_x", curve123, prime(&xyz, &["x"])?));
    out.push(pair(
        "quadric_cone_and_line",
        prime(&xyz, &["y^2 - x*z"])?,
        prime(&xyz, &["x", "z"])?,
    ));
    out.push(pair(
        "quadric_cone_and_axis",
        prime(&xyz, &["x*y - z^2"])?,
        prime(&xyz, &["x", "y"])?,
    ));
    out.push(pair("twisted_cubic_cone_and_plane", cone, prime(&abcd, &["a", "d"])?));
    Ok(out)
}

/// Pairs from [`theorem_pairs`] whose first prime is a coordinate prime,
/// plus the swapped pairs whose second prime is.
pub fn regular_case_pairs() -> Result<Vec<PrimePair>> {
    let mut out = Vec::new();
    for pr in theorem_pairs()? {
        if matches!(pr.p.kind(), crate::local::PrimeKind::Coordinate(_)) {
            out.push(pr.clone());
        }
        if matches!(pr.q.kind(), crate::local::PrimeKind::Coordinate(_)) {
            out.push(pair(format!("{}_swapped", pr.name), pr.q, pr.p));
        }
    }
    Ok(out)
}

/// Pairs of homogeneous complete intersections meeting only at the origin
/// in complementary dimensions.
pub fn ci_pairs() -> Result<Vec<CiPair>> {
    let xyz = PolyRing::rationals(&["x", "y", "z"])?;
    let x4 = PolyRing::indexed("x", 4)?;
    let ci = |name: &str, r: &Arc<PolyRing>, i: &[&str], j: &[&str]| -> Result<CiPair> {
        Ok(CiPair {
            name: name.into(),
            i: Ideal::parse(r, i)?,
            j: Ideal::parse(r, j)?,
        })
    };
    Ok(vec![
        ci("plane_and_line", &xyz, &["x"], &["y", "z"])?,
        ci("line_and_plane", &xyz, &["x", "y"], &["z"])?,
        ci("planes_in_four_space", &x4, &["x1", "x2"], &["x3", "x4"])?,
        ci("quadric_cone_and_line", &xyz, &["x^2 - y*z"], &["y", "z"])?,
        ci("two_planes_and_plane", &xyz, &["x*y", "z"], &["x + y"])?,
        ci("fat_line_and_plane", &xyz, &["x^2", "y^2"], &["z"])?,
    ])
}

/// A complete-intersection pair that is not homogeneous: `(x + z^2, y)`
/// and `(z)`.
pub fn ungraded_ci_pair() -> Result<CiPair> {
    let xyz = PolyRing::rationals(&["x", "y", "z"])?;
    Ok(CiPair {
        name: "ungraded_line_and_plane".into(),
        i: Ideal::parse(&xyz, &["x + z^2", "y"])?,
        j: Ideal::parse(&xyz, &["z"])?,
    })
}

/// Seeded random transverse coordinate pairs: a random number of
/// variables in `2..=max_vars` split by a random permutation.
pub fn random_coordinate_pairs(seed: u64, count: usize, max_vars: usize) -> Result<Vec<PrimePair>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let d = rng.gen_range(2..=max_vars.max(2));
        let mut vars: Vec<usize> = (0..d).collect();
        vars.shuffle(&mut rng);
        let i = rng.gen_range(1..d);
        let (left, right) = vars.split_at(i);
        let (mut left, mut right) = (left.to_vec(), right.to_vec());
        left.sort_unstable();
        right.sort_unstable();
        let r = PolyRing::indexed("x", d)?;
        out.push(pair(
            format!("random_coordinate_pair_s{seed}_{k}"),
            PrimeWitness::coordinate(&r, &left)?,
            PrimeWitness::coordinate(&r, &right)?,
        ));
    }
    Ok(out)
}
