//! Generators for the extremal point-set families, each bundled with the
//! facts its spectrum is expected to satisfy.
//!
//! Irrational families (polygons, arcs, the three-group set) are built in
//! approximate mode and later audited; integer families (grids, the
//! equidistant line) are exact. The hexagonal strip gets an additional
//! exact spectrum through half-step bookkeeping so its multiplicity
//! formulas can be checked without floats.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::{AnySet, ApproxPoint, ApproxSet, ExactPoint, ExactSet, Key};

/// Arc span used for "equidistant points on a circle": a fixed proper arc,
/// so consecutive-gap chords are strictly increasing and the spectrum is
/// the full staircase.
pub const CIRCLE_ARC_RADIANS: f64 = 100.0 * PI / 180.0;

/// A checkable statement about the spectrum of a generated set.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "fact", rename_all = "snake_case")]
pub enum ExpectedFact {
    /// a(X) equals this multiplicity list exactly.
    SpectrumEquals { multiplicities: Vec<u64> },
    MultiplicityEquals { squared_distance: Key, multiplicity: u64 },
    MultiplicityAtLeast { squared_distance: Key, multiplicity: u64 },
    FullStaircase { expected: bool },
    DistinctMultiplicities,
    Collinear { expected: bool },
    Cocircular { expected: bool },
    /// All multiplicities below the top `top_ranks` classes are <= bound.
    TailAtMost { top_ranks: usize, bound: u64 },
}

/// A generated point set plus the facts to verify downstream.
#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub set: AnySet,
    pub facts: Vec<ExpectedFact>,
}

fn unit_circle_point(angle: f64) -> ApproxPoint {
    ApproxPoint::new(angle.cos(), angle.sin())
}

// ---------------------------------------------------------------------------
// Regular polygons
// ---------------------------------------------------------------------------

/// Squared chord length of the class with index difference j in the
/// unit-circumradius regular n-gon.
pub fn ngon_chord_squared(n: usize, j: usize) -> f64 {
    let s = (PI * j as f64 / n as f64).sin();
    4.0 * s * s
}

/// Combinatorial chord-class spectrum of the regular n-gon: every index
/// difference j < n/2 is realized n times, the diameter class (even n)
/// n/2 times. Returned in nonincreasing order.
pub fn ngon_chord_spectrum(n: usize) -> Vec<u64> {
    let mut mults: Vec<u64> = Vec::new();
    for j in 1..=(n / 2) {
        if 2 * j == n {
            mults.push(n as u64 / 2);
        } else {
            mults.push(n as u64);
        }
    }
    mults.sort_unstable_by(|a, b| b.cmp(a));
    mults
}

/// Chord-class spectrum of the regular n-gon minus one vertex: each class
/// j loses the two pairs through the removed vertex (one pair for the
/// diameter class).
pub fn ngon_minus_vertex_spectrum(n: usize) -> Vec<u64> {
    let mut mults: Vec<u64> = Vec::new();
    for j in 1..=(n / 2) {
        let m = if 2 * j == n {
            n as u64 / 2 - 1
        } else {
            n as u64 - 2
        };
        if m > 0 {
            mults.push(m);
        }
    }
    mults.sort_unstable_by(|a, b| b.cmp(a));
    mults
}

/// Vertices of the unit-circumradius regular n-gon.
pub fn regular_ngon(n: usize) -> Result<ConstructionResult> {
    if n < 3 {
        return Err(Error::TooFewPoints { needed: 3, got: n });
    }
    let pts: Vec<ApproxPoint> = (0..n)
        .map(|i| unit_circle_point(2.0 * PI * i as f64 / n as f64))
        .collect();
    let set = ApproxSet::new(pts, format!("regular-ngon(n={n})"))?.with_metadata("n", n);
    let facts = vec![ExpectedFact::SpectrumEquals {
        multiplicities: ngon_chord_spectrum(n),
    }];
    Ok(ConstructionResult {
        set: AnySet::Approx(set),
        facts,
    })
}

/// Regular n-gon with the last vertex removed (n - 1 points).
pub fn ngon_minus_vertex(n: usize) -> Result<ConstructionResult> {
    if n < 3 {
        return Err(Error::TooFewPoints { needed: 3, got: n });
    }
    let pts: Vec<ApproxPoint> = (0..n - 1)
        .map(|i| unit_circle_point(2.0 * PI * i as f64 / n as f64))
        .collect();
    let set = ApproxSet::new(pts, format!("ngon-minus-vertex(n={n})"))?.with_metadata("n", n);
    let facts = vec![ExpectedFact::SpectrumEquals {
        multiplicities: ngon_minus_vertex_spectrum(n),
    }];
    Ok(ConstructionResult {
        set: AnySet::Approx(set),
        facts,
    })
}

// ---------------------------------------------------------------------------
// Staircase families
// ---------------------------------------------------------------------------

/// n equidistant points on a line (exact integers).
pub fn equidistant_line(n: usize) -> Result<ConstructionResult> {
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: n });
    }
    let pts: Vec<ExactPoint> = (0..n as i64).map(|i| ExactPoint::from_ints(i, 0)).collect();
    let set = ExactSet::new(pts, format!("equidistant-line(n={n})"))?.with_metadata("n", n);
    Ok(ConstructionResult {
        set: AnySet::Exact(set),
        facts: vec![
            ExpectedFact::FullStaircase { expected: true },
            ExpectedFact::Collinear { expected: true },
        ],
    })
}

/// n points equally spaced along a proper circular arc. Chords grow
/// strictly with the index gap, so the gap-g chords form a class of
/// multiplicity n - g.
pub fn equidistant_circle(n: usize) -> Result<ConstructionResult> {
    if n < 3 {
        return Err(Error::TooFewPoints { needed: 3, got: n });
    }
    let step = CIRCLE_ARC_RADIANS / (n - 1) as f64;
    let pts: Vec<ApproxPoint> = (0..n)
        .map(|i| unit_circle_point(-CIRCLE_ARC_RADIANS / 2.0 + i as f64 * step))
        .collect();
    let set = ApproxSet::new(pts, format!("equidistant-circle(n={n})"))?.with_metadata("n", n);
    Ok(ConstructionResult {
        set: AnySet::Approx(set),
        facts: vec![
            ExpectedFact::FullStaircase { expected: true },
            ExpectedFact::Cocircular { expected: true },
        ],
    })
}

/// The center of a unit circle plus n - 1 equidistant points on an arc
/// subtending less than pi/3, so every chord stays below the radius and
/// the spectrum is the staircase on a set that is neither collinear nor
/// cocircular.
pub fn arc_with_center(n: usize, angle: f64) -> Result<ConstructionResult> {
    if n < 3 {
        return Err(Error::TooFewPoints { needed: 3, got: n });
    }
    if !(angle > 0.0 && angle < PI / 3.0) {
        return Err(Error::AngleOutOfRange(angle));
    }
    let mut pts = vec![ApproxPoint::new(0.0, 0.0)];
    let step = angle / (n - 2) as f64;
    for i in 0..n - 1 {
        pts.push(unit_circle_point(-angle / 2.0 + i as f64 * step));
    }
    let set = ApproxSet::new(pts, format!("arc-with-center(n={n})"))?
        .with_metadata("n", n)
        .with_metadata("angle", angle);
    let mut facts = vec![
        ExpectedFact::FullStaircase { expected: true },
        ExpectedFact::Collinear { expected: false },
    ];
    if n >= 4 {
        // Three non-collinear points are always concyclic; the
        // off-every-circle property is meaningful from n = 4 on.
        facts.push(ExpectedFact::Cocircular { expected: false });
    }
    Ok(ConstructionResult {
        set: AnySet::Approx(set),
        facts,
    })
}

// ---------------------------------------------------------------------------
// Integer grids
// ---------------------------------------------------------------------------

/// The exact integer grid {0..w-1} x {0..h-1}.
pub fn grid_section(w: usize, h: usize) -> Result<ConstructionResult> {
    if w == 0 || h == 0 {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }
    let mut pts = Vec::with_capacity(w * h);
    for x in 0..w as i64 {
        for y in 0..h as i64 {
            pts.push(ExactPoint::from_ints(x, y));
        }
    }
    let set = ExactSet::new(pts, format!("grid({w}x{h})"))?
        .with_metadata("w", w)
        .with_metadata("h", h);
    Ok(ConstructionResult {
        set: AnySet::Exact(set),
        facts: Vec::new(),
    })
}

/// Exactly-8 check: in the k x k grid the squared distances
/// (k-1)^2 + (k-2)^2 and 2(k-2)^2 both have multiplicity exactly 8,
/// verified by the pair-loop brute force; any lattice vector other than
/// the defining ones that also realizes the key is reported.
#[derive(Clone, Debug, Serialize)]
pub struct GridEightReport {
    pub k: u64,
    pub long_key: u64,
    pub long_count: u64,
    pub diag_key: u64,
    pub diag_count: u64,
    /// Representations (a, b) with a <= b <= k-1 other than (k-2, k-1).
    pub extra_long_vectors: Vec<(u64, u64)>,
    /// Representations other than (k-2, k-2).
    pub extra_diag_vectors: Vec<(u64, u64)>,
    pub pass: bool,
}

pub fn exact_eight_check(k: u64) -> Result<GridEightReport> {
    if k < 4 {
        return Err(Error::TooSmall {
            n: k as usize,
            needed: 4,
        });
    }
    let long_key = (k - 1) * (k - 1) + (k - 2) * (k - 2);
    let diag_key = 2 * (k - 2) * (k - 2);
    let table = crate::sum2squares::grid_spectrum_bruteforce(k as usize);
    let long_count = table[long_key as usize];
    let diag_count = table[diag_key as usize];

    let fitting_reps = |q: u64, skip: (u64, u64)| -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        let mut a = 0u64;
        while 2 * a * a <= q {
            let rem = q - a * a;
            let b = crate::sum2squares::isqrt(rem);
            if b * b == rem && b <= k - 1 && (a, b) != skip {
                out.push((a, b));
            }
            a += 1;
        }
        out
    };
    let extra_long_vectors = fitting_reps(long_key, (k - 2, k - 1));
    let extra_diag_vectors = fitting_reps(diag_key, (k - 2, k - 2));
    let pass = long_count == 8 && diag_count == 8;
    Ok(GridEightReport {
        k,
        long_key,
        long_count,
        diag_key,
        diag_count,
        extra_long_vectors,
        extra_diag_vectors,
        pass,
    })
}

// ---------------------------------------------------------------------------
// Three groups: polygon, inner chain, triangular lattice
// ---------------------------------------------------------------------------

/// Derived measures of the three-group construction.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ThreeGroupGeometry {
    pub m: usize,
    pub n: usize,
    /// Squared second-largest polygon chord.
    pub delta2_sq: f64,
    /// Squared spacing of consecutive inner chain points (= lattice mesh).
    pub delta_small_sq: f64,
    /// Signed radius of the inner chain circle.
    pub chain_radius: f64,
}

/// Regular m-gon on the unit circle; m chain points u_i equidistant
/// (at the second-largest chord) from consecutive polygon vertices, at the
/// inner intersection of the two chord circles; n - 2m points of a
/// triangular lattice with mesh dist(u_i, u_{i+1}) filled around the
/// origin by increasing radius.
pub fn three_group(m: usize, n: usize) -> Result<ConstructionResult> {
    if m < 5 {
        return Err(Error::TooSmall { n: m, needed: 5 });
    }
    if 2 * m > n {
        return Err(Error::RangeExceeded(format!(
            "need 2m <= n, got m = {m}, n = {n}"
        )));
    }
    let phi = PI / m as f64;
    let j2 = m / 2 - 1;
    if j2 == 0 {
        return Err(Error::InfeasibleGeometry(
            "polygon has no second-largest chord".into(),
        ));
    }
    let delta2 = 2.0 * (phi * j2 as f64).sin();
    let half_side = phi.sin();
    let disc = delta2 * delta2 - half_side * half_side;
    if disc <= 0.0 {
        return Err(Error::InfeasibleGeometry(
            "chord circles do not intersect".into(),
        ));
    }
    // Signed radius along the side bisector; negative values land on the
    // far side of the center, still inside the circle.
    let chain_radius = phi.cos() - disc.sqrt();
    if chain_radius.abs() >= 1.0 {
        return Err(Error::InfeasibleGeometry(
            "chain points fall outside the circumcircle".into(),
        ));
    }

    let mut pts: Vec<ApproxPoint> = Vec::with_capacity(n);
    for i in 0..m {
        pts.push(unit_circle_point(2.0 * phi * i as f64));
    }
    for i in 0..m {
        let dir = phi * (2 * i + 1) as f64;
        pts.push(ApproxPoint::new(
            chain_radius * dir.cos(),
            chain_radius * dir.sin(),
        ));
    }
    let delta_small = 2.0 * chain_radius.abs() * half_side;

    // Triangular lattice candidates sorted by exact squared norm
    // a^2 + ab + b^2 (in mesh units), then lexicographically.
    let m3 = n - 2 * m;
    if m3 > 0 {
        let reach = (m3 as f64).sqrt().ceil() as i64 + 2;
        let mut candidates: Vec<(i64, i64, i64)> = Vec::new();
        for a in -reach..=reach {
            for b in -reach..=reach {
                candidates.push((a * a + a * b + b * b, a, b));
            }
        }
        candidates.sort_unstable();
        let mut taken = 0;
        for (_, a, b) in candidates {
            if taken == m3 {
                break;
            }
            let x = delta_small * (a as f64 + b as f64 / 2.0);
            let y = delta_small * (b as f64 * 3.0_f64.sqrt() / 2.0);
            let p = ApproxPoint::new(x, y);
            if pts
                .iter()
                .any(|q| crate::point::squared_distance_approx(q, &p) < crate::point::EPS_DEG)
            {
                continue;
            }
            pts.push(p);
            taken += 1;
        }
        if taken < m3 {
            return Err(Error::InfeasibleGeometry(
                "lattice fill exhausted its candidate window".into(),
            ));
        }
    }

    let set = ApproxSet::new(pts, format!("three-group(m={m},n={n})"))?
        .with_metadata("m", m)
        .with_metadata("n", n)
        .with_metadata("delta2_sq", delta2 * delta2)
        .with_metadata("delta_small_sq", delta_small * delta_small)
        .with_metadata("chain_radius", chain_radius);
    let facts = vec![ExpectedFact::MultiplicityAtLeast {
        squared_distance: Key::Approx(delta2 * delta2),
        multiplicity: 3 * m as u64,
    }];
    Ok(ConstructionResult {
        set: AnySet::Approx(set),
        facts,
    })
}

/// The derived measures without building the set.
pub fn three_group_geometry(m: usize, n: usize) -> Result<ThreeGroupGeometry> {
    let result = three_group(m, n)?;
    let meta = result.set.metadata();
    Ok(ThreeGroupGeometry {
        m,
        n,
        delta2_sq: meta["delta2_sq"].parse().unwrap(),
        delta_small_sq: meta["delta_small_sq"].parse().unwrap(),
        chain_radius: meta["chain_radius"].parse().unwrap(),
    })
}

// ---------------------------------------------------------------------------
// Hexagonal two-row strip
// ---------------------------------------------------------------------------

/// Half-step coordinates of the two-row strip: (horizontal half-steps,
/// row index). Row 0 sits at even half-steps, row 1 at odd half-steps one
/// lattice height up.
pub fn hex_two_row_halfsteps(n: usize) -> Vec<(i64, i64)> {
    let top = n.div_ceil(2); // points on row 0
    let bottom = n / 2;
    let mut pts = Vec::with_capacity(n);
    for i in 0..top as i64 {
        pts.push((2 * i, 0));
    }
    for i in 0..bottom as i64 {
        pts.push((2 * i + 1, 1));
    }
    pts
}

/// Exact spectrum of the strip: classes keyed by 4x the squared distance,
/// an integer since 4 dist^2 = (dhx)^2 + 3 (drow)^2. Returned sorted by
/// multiplicity desc, key desc.
pub fn hex_two_row_spectrum(n: usize) -> Vec<(u64, u64)> {
    let pts = hex_two_row_halfsteps(n);
    let mut counts: HashMap<u64, u64> = HashMap::new();
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let dhx = pts[i].0 - pts[j].0;
            let drow = pts[i].1 - pts[j].1;
            let key4 = (dhx * dhx + 3 * drow * drow) as u64;
            *counts.entry(key4).or_default() += 1;
        }
    }
    let mut classes: Vec<(u64, u64)> = counts.into_iter().collect();
    classes.sort_unstable_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
    classes
}

/// The strip as a floating-point set: k+1 points on the lower row and k
/// on the upper (odd n = 2k+1), resp. an even split for even n.
pub fn hex_two_row(n: usize) -> Result<ConstructionResult> {
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: n });
    }
    let height = 3.0_f64.sqrt() / 2.0;
    let pts: Vec<ApproxPoint> = hex_two_row_halfsteps(n)
        .into_iter()
        .map(|(hx, row)| ApproxPoint::new(hx as f64 / 2.0, row as f64 * height))
        .collect();
    let set = ApproxSet::new(pts, format!("hex-two-row(n={n})"))?.with_metadata("n", n);

    let mut facts = Vec::new();
    if n % 2 == 1 && n >= 3 {
        let k = (n - 1) / 2;
        facts.push(ExpectedFact::MultiplicityEquals {
            squared_distance: Key::Approx(1.0),
            multiplicity: (4 * k - 1) as u64,
        });
        for j in 2..=k {
            facts.push(ExpectedFact::MultiplicityEquals {
                squared_distance: Key::Approx((j * j) as f64),
                multiplicity: (2 * (k - j) + 1) as u64,
            });
        }
        for j in 1..k {
            facts.push(ExpectedFact::MultiplicityEquals {
                squared_distance: Key::Approx((j * j + j + 1) as f64),
                multiplicity: (2 * (k - j)) as u64,
            });
        }
    }
    if n >= 2 {
        facts.push(ExpectedFact::DistinctMultiplicities);
    }
    if n >= 4 {
        facts.push(ExpectedFact::FullStaircase { expected: false });
    }
    Ok(ConstructionResult {
        set: AnySet::Approx(set),
        facts,
    })
}

// ---------------------------------------------------------------------------
// Seeded random sets
// ---------------------------------------------------------------------------

/// n distinct points with random rational coordinates (numerators up to
/// 10^4, denominators up to 32), reproducible from the seed.
pub fn random_rational_set(n: usize, seed: u64) -> Result<ExactSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen: std::collections::BTreeSet<ExactPoint> = std::collections::BTreeSet::new();
    while chosen.len() < n {
        let num_x: i64 = rng.gen_range(-10_000..=10_000);
        let den_x: i64 = rng.gen_range(1..=32);
        let num_y: i64 = rng.gen_range(-10_000..=10_000);
        let den_y: i64 = rng.gen_range(1..=32);
        chosen.insert(ExactPoint::new(
            BigRational::new(BigInt::from(num_x), BigInt::from(den_x)),
            BigRational::new(BigInt::from(num_y), BigInt::from(den_y)),
        ));
    }
    ExactSet::new(
        chosen.into_iter().collect(),
        format!("random-rational(n={n},seed={seed})"),
    )
}

/// n distinct points on the parabola (t, t^2): a convex-position set with
/// exact coordinates.
pub fn random_convex_set(n: usize, seed: u64) -> Result<ExactSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut params: std::collections::BTreeSet<BigRational> = std::collections::BTreeSet::new();
    while params.len() < n {
        let num: i64 = rng.gen_range(-5_000..=5_000);
        let den: i64 = rng.gen_range(1..=16);
        params.insert(BigRational::new(BigInt::from(num), BigInt::from(den)));
    }
    let pts: Vec<ExactPoint> = params
        .into_iter()
        .map(|t| ExactPoint::new(t.clone(), &t * &t))
        .collect();
    ExactSet::new(pts, format!("random-convex(n={n},seed={seed})"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::{distance_spectrum, distance_spectrum_approx};

    #[test]
    fn chord_spectra() {
        assert_eq!(ngon_chord_spectrum(5), vec![5, 5]);
        assert_eq!(ngon_chord_spectrum(6), vec![6, 6, 3]);
        assert_eq!(ngon_chord_spectrum(8), vec![8, 8, 8, 4]);
        assert_eq!(ngon_minus_vertex_spectrum(7), vec![5, 5, 5]);
        assert_eq!(ngon_minus_vertex_spectrum(9), vec![7, 7, 7, 7]);
        assert_eq!(ngon_minus_vertex_spectrum(3), vec![1]);
    }

    #[test]
    fn ngon_audited_matches_chords() {
        for n in [5, 6, 8, 13] {
            let c = regular_ngon(n).unwrap();
            let s = distance_spectrum(&c.set).unwrap();
            assert_eq!(s.multiplicities(), ngon_chord_spectrum(n), "n = {n}");
        }
    }

    #[test]
    fn line_and_circle_are_staircases() {
        let line = equidistant_line(7).unwrap();
        let s = distance_spectrum(&line.set).unwrap();
        assert_eq!(s.multiplicities(), vec![6, 5, 4, 3, 2, 1]);
        assert!(s.is_full_staircase());

        let line2 = equidistant_line(2).unwrap();
        let s2 = distance_spectrum(&line2.set).unwrap();
        assert_eq!(s2.multiplicities(), vec![1]);

        let circle = equidistant_circle(7).unwrap();
        let s3 = distance_spectrum(&circle.set).unwrap();
        assert_eq!(s3.multiplicities(), vec![6, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn arc_with_center_spectra() {
        let arc = arc_with_center(7, 50.0 * PI / 180.0).unwrap();
        let s = distance_spectrum(&arc.set).unwrap();
        assert!(s.is_full_staircase());

        let a3 = arc_with_center(3, 30.0 * PI / 180.0).unwrap();
        let s3 = distance_spectrum(&a3.set).unwrap();
        assert_eq!(s3.multiplicities(), vec![2, 1]);

        assert!(matches!(
            arc_with_center(7, 70.0 * PI / 180.0),
            Err(Error::AngleOutOfRange(_))
        ));
    }

    #[test]
    fn grid_sections() {
        let g = grid_section(4, 4).unwrap();
        assert_eq!(g.set.len(), 16);
        assert_eq!(g.set.mode_name(), "exact");
        let tiny = grid_section(2, 1).unwrap();
        let s = distance_spectrum(&tiny.set).unwrap();
        assert_eq!(s.multiplicities(), vec![1]);
    }

    #[test]
    fn exact_eight_small_cases() {
        let r4 = exact_eight_check(4).unwrap();
        assert_eq!((r4.long_key, r4.diag_key), (13, 8));
        assert_eq!((r4.long_count, r4.diag_count), (8, 8));
        assert!(r4.pass);

        let r5 = exact_eight_check(5).unwrap();
        assert_eq!((r5.long_key, r5.diag_key), (25, 18));
        assert_eq!((r5.long_count, r5.diag_count), (8, 8));
        // 25 = 0^2 + 5^2 would be an extra vector, but 5 > k-1 = 4 does
        // not fit; the defining (3, 4) is the only fitting representation.
        assert!(r5.extra_long_vectors.is_empty());

        let r10 = exact_eight_check(10).unwrap();
        assert_eq!((r10.long_key, r10.diag_key), (145, 128));
        assert_eq!((r10.long_count, r10.diag_count), (8, 8));

        assert!(exact_eight_check(3).is_err());
    }

    #[test]
    fn three_group_basic_shape() {
        let c = three_group(7, 21).unwrap();
        assert_eq!(c.set.len(), 21);
        let geom = three_group_geometry(7, 21).unwrap();
        // Second-largest chord of the 7-gon: 2 sin(2 pi / 7).
        let expect = 2.0 * (2.0 * PI / 7.0).sin();
        assert!((geom.delta2_sq - expect * expect).abs() < 1e-12);
        // The chain circle sits on the far side of the center.
        assert!(geom.chain_radius < 0.0 && geom.chain_radius.abs() < 1.0);

        assert!(three_group(4, 20).is_err());
        assert!(three_group(7, 13).is_err());
    }

    #[test]
    fn three_group_second_distance_count() {
        // The second-largest chord class collects the m polygon chords
        // plus the 2m chain edges.
        let c = three_group(7, 21).unwrap();
        let AnySet::Approx(ref set) = c.set else {
            panic!("three-group is approximate")
        };
        let s = distance_spectrum_approx(set).unwrap();
        let geom = three_group_geometry(7, 21).unwrap();
        let mu = s.multiplicity_of(geom.delta2_sq).unwrap();
        assert_eq!(mu, 21);
    }

    #[test]
    fn hex_strip_formulas_n9() {
        // n = 9, k = 4: mu(1) = 15, mu(j) = 2(4-j)+1, mu(d_j) = 2(4-j).
        let classes = hex_two_row_spectrum(9);
        let lookup = |key4: u64| {
            classes
                .iter()
                .find(|&&(k, _)| k == key4)
                .map(|&(_, m)| m)
                .unwrap_or(0)
        };
        assert_eq!(lookup(4), 15); // unit distance
        assert_eq!(lookup(16), 5); // distance 2
        assert_eq!(lookup(36), 3); // distance 3
        assert_eq!(lookup(64), 1); // distance 4
        assert_eq!(lookup(12), 6); // d_1 = sqrt(3)
        assert_eq!(lookup(28), 4); // d_2 = sqrt(7)
        assert_eq!(lookup(52), 2); // d_3 = sqrt(13)
        let total: u64 = classes.iter().map(|&(_, m)| m).sum();
        assert_eq!(total, 36);
        let mults: Vec<u64> = classes.iter().map(|&(_, m)| m).collect();
        assert_eq!(mults, vec![15, 6, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn hex_strip_float_agrees_with_exact() {
        for n in [2, 5, 9, 10, 16] {
            let c = hex_two_row(n).unwrap();
            let s = distance_spectrum(&c.set).unwrap();
            let exact: Vec<u64> = hex_two_row_spectrum(n).iter().map(|&(_, m)| m).collect();
            assert_eq!(s.multiplicities(), exact, "n = {n}");
        }
    }

    #[test]
    fn random_sets_reproducible() {
        let a = random_rational_set(40, 7).unwrap();
        let b = random_rational_set(40, 7).unwrap();
        assert_eq!(a.points(), b.points());
        let c = random_rational_set(40, 8).unwrap();
        assert_ne!(a.points(), c.points());

        let convex = random_convex_set(20, 3).unwrap();
        assert!(crate::hull::is_convex_position(&convex));
    }
}
