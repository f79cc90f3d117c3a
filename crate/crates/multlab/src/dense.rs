//! The second-largest distance and the first two convex layers.
//!
//! `G` is the graph on L1 ∪ L2 whose edges are exactly the point pairs
//! realizing the second-largest distance. Iterated removal of vertices of
//! degree < 2 gives the core `G'`, whose rigid structure (inner vertices of
//! degree exactly 2, outer vertices with at most 4 outer neighbors, ...)
//! yields the bound
//!     mu(X, D2) <= min{ 3/2(|L1|+|L2|), 4/3|L1|+2|L2|, 2|L1|+|L2| }.
//! Every structural fact is rechecked at runtime; a violation means a
//! geometry bug, not a new theorem.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hull::{onion_layers, ConvexLayers};
use crate::point::{AnySet, ApproxSet, ExactSet};
use crate::spectrum::{
    distance_spectrum_approx, distance_spectrum_exact, AnySpectrum, Spectrum, SpectrumKey,
};

/// Layer tag of a graph vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LayerTag {
    Outer,
    Inner,
}

/// Graph on L1 ∪ L2 whose edges realize the second-largest distance,
/// together with its degree-2 core.
#[derive(Clone, Debug)]
pub struct SecondDistanceGraph {
    /// (point index, layer tag) for every vertex of G.
    pub vertices: Vec<(usize, LayerTag)>,
    /// Edges of G (pairs of point indices, i < j).
    pub edges: Vec<(usize, usize)>,
    /// Second-distance pairs with an endpoint outside L1 ∪ L2. Provably
    /// empty; retained so a geometry bug surfaces as data, not silence.
    pub stray_edges: Vec<(usize, usize)>,
    /// Vertices removed by iterated degree-<2 deletion, in removal order.
    pub pruned_vertices: Vec<usize>,
    /// Edges of the core G'.
    pub core_edges: Vec<(usize, usize)>,
    /// Core vertices by layer: L1' and L2'.
    pub core_outer: Vec<usize>,
    pub core_inner: Vec<usize>,
}

/// Truth values of the structural facts about G and G'.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CoreObservations {
    /// Every second-distance pair has an endpoint in L1 and lives inside
    /// L1 ∪ L2.
    pub edges_inside_two_layers: bool,
    /// L2' is an independent set.
    pub inner_independent: bool,
    /// Every vertex of L2' has degree exactly 2.
    pub inner_degree_two: bool,
    /// Every vertex of L1' has at most 2 neighbors in L2'.
    pub outer_at_most_two_inner: bool,
    /// 3 neighbors in L1' allow at most 1 neighbor in L2'.
    pub three_outer_at_most_one_inner: bool,
    /// 4 neighbors in L1' forbid inner neighbors.
    pub four_outer_no_inner: bool,
    /// Every vertex of L1' has at most 4 neighbors in L1'.
    pub outer_at_most_four_outer: bool,
    /// e(G) <= |L1 \ L1'| + |L2 \ L2'| + e(G').
    pub pruning_inequality: bool,
}

impl CoreObservations {
    pub fn all_hold(&self) -> bool {
        self.edges_inside_two_layers
            && self.inner_independent
            && self.inner_degree_two
            && self.outer_at_most_two_inner
            && self.three_outer_at_most_one_inner
            && self.four_outer_no_inner
            && self.outer_at_most_four_outer
            && self.pruning_inequality
    }
}

/// Builds G from the second-largest distance class and the layer
/// decomposition, then prunes to the core.
pub fn build_second_distance_graph(
    delta2_members: &[(u32, u32)],
    layers: &ConvexLayers,
) -> SecondDistanceGraph {
    let l1: BTreeSet<usize> = layers.layers.first().cloned().unwrap_or_default().into_iter().collect();
    let l2: BTreeSet<usize> = layers.layers.get(1).cloned().unwrap_or_default().into_iter().collect();

    let mut vertices: Vec<(usize, LayerTag)> = Vec::with_capacity(l1.len() + l2.len());
    vertices.extend(l1.iter().map(|&i| (i, LayerTag::Outer)));
    vertices.extend(l2.iter().map(|&i| (i, LayerTag::Inner)));

    let mut edges = Vec::new();
    let mut stray_edges = Vec::new();
    for &(a, b) in delta2_members {
        let (a, b) = (a as usize, b as usize);
        let inside =
            (l1.contains(&a) || l2.contains(&a)) && (l1.contains(&b) || l2.contains(&b));
        if inside {
            edges.push((a.min(b), a.max(b)));
        } else {
            stray_edges.push((a.min(b), a.max(b)));
        }
    }

    // Iterated deletion of degree-<2 vertices; the queue is processed in
    // ascending point-index order so the removal record is reproducible.
    let mut adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for &(i, _) in &vertices {
        adj.insert(i, BTreeSet::new());
    }
    for &(a, b) in &edges {
        adj.get_mut(&a).unwrap().insert(b);
        adj.get_mut(&b).unwrap().insert(a);
    }
    let mut queue: BTreeSet<usize> = adj
        .iter()
        .filter(|(_, nb)| nb.len() < 2)
        .map(|(&i, _)| i)
        .collect();
    let mut pruned_vertices = Vec::new();
    while let Some(&v) = queue.iter().next() {
        queue.remove(&v);
        let neighbors = match adj.remove(&v) {
            Some(nb) => nb,
            None => continue,
        };
        pruned_vertices.push(v);
        for nb in neighbors {
            if let Some(set) = adj.get_mut(&nb) {
                set.remove(&v);
                if set.len() < 2 {
                    queue.insert(nb);
                }
            }
        }
    }

    let core: BTreeSet<usize> = adj.keys().copied().collect();
    let core_edges: Vec<(usize, usize)> = edges
        .iter()
        .copied()
        .filter(|&(a, b)| core.contains(&a) && core.contains(&b))
        .collect();
    let core_outer: Vec<usize> = core.iter().copied().filter(|i| l1.contains(i)).collect();
    let core_inner: Vec<usize> = core.iter().copied().filter(|i| l2.contains(i)).collect();

    SecondDistanceGraph {
        vertices,
        edges,
        stray_edges,
        pruned_vertices,
        core_edges,
        core_outer,
        core_inner,
    }
}

impl SecondDistanceGraph {
    pub fn observations(&self) -> CoreObservations {
        let core_outer: BTreeSet<usize> = self.core_outer.iter().copied().collect();
        let core_inner: BTreeSet<usize> = self.core_inner.iter().copied().collect();
        let outer_all: BTreeSet<usize> = self
            .vertices
            .iter()
            .filter(|(_, t)| *t == LayerTag::Outer)
            .map(|(i, _)| *i)
            .collect();

        let edges_inside_two_layers = self.stray_edges.is_empty()
            && self
                .edges
                .iter()
                .all(|(a, b)| outer_all.contains(a) || outer_all.contains(b));

        let mut deg_outer: BTreeMap<usize, usize> = BTreeMap::new();
        let mut deg_inner: BTreeMap<usize, usize> = BTreeMap::new();
        let mut inner_independent = true;
        for &(a, b) in &self.core_edges {
            for (v, w) in [(a, b), (b, a)] {
                if core_outer.contains(&w) {
                    *deg_outer.entry(v).or_default() += 1;
                } else {
                    *deg_inner.entry(v).or_default() += 1;
                }
            }
            if core_inner.contains(&a) && core_inner.contains(&b) {
                inner_independent = false;
            }
        }
        let deg = |m: &BTreeMap<usize, usize>, v: usize| m.get(&v).copied().unwrap_or(0);

        let inner_degree_two = self
            .core_inner
            .iter()
            .all(|&q| deg(&deg_outer, q) + deg(&deg_inner, q) == 2);
        let outer_at_most_two_inner = self
            .core_outer
            .iter()
            .all(|&p| deg(&deg_inner, p) <= 2);
        let three_outer_at_most_one_inner = self
            .core_outer
            .iter()
            .all(|&p| deg(&deg_outer, p) != 3 || deg(&deg_inner, p) <= 1);
        let four_outer_no_inner = self
            .core_outer
            .iter()
            .all(|&p| deg(&deg_outer, p) < 4 || deg(&deg_inner, p) == 0);
        let outer_at_most_four_outer = self
            .core_outer
            .iter()
            .all(|&p| deg(&deg_outer, p) <= 4);

        let removed = self.pruned_vertices.len();
        let pruning_inequality = self.edges.len() <= removed + self.core_edges.len();

        CoreObservations {
            edges_inside_two_layers,
            inner_independent,
            inner_degree_two,
            outer_at_most_two_inner,
            three_outer_at_most_one_inner,
            four_outer_no_inner,
            outer_at_most_four_outer,
            pruning_inequality,
        }
    }
}

/// min{ 3/2(l1+l2), 4/3 l1 + 2 l2, 2 l1 + l2 } as an exact rational.
pub fn dense_bound(l1: usize, l2: usize) -> Rational64 {
    let l1 = Rational64::from_integer(l1 as i64);
    let l2 = Rational64::from_integer(l2 as i64);
    let a = Rational64::new(3, 2) * (l1 + l2);
    let b = Rational64::new(4, 3) * l1 + Rational64::from_integer(2) * l2;
    let c = Rational64::from_integer(2) * l1 + l2;
    a.min(b).min(c)
}

/// Outcome of the layered second-distance check on one point set.
#[derive(Clone, Debug, Serialize)]
pub struct DenseReport {
    pub n: usize,
    pub l1: usize,
    pub l2: usize,
    /// The three-way minimum, as `p/q`.
    pub bound: String,
    pub mu2: u64,
    /// mu2 <= bound (holds unconditionally by the structure of G').
    pub bound_holds: bool,
    /// When bound <= n: mu2 <= n, the headline statement.
    pub linear_case: Option<bool>,
    pub observations: CoreObservations,
    /// Edge count of G equals the spectrum multiplicity of the
    /// second-largest distance (cross-module consistency).
    pub graph_consistent: bool,
    pub holds: bool,
}

fn check_dense_generic<K: SpectrumKey>(
    spectrum: &Spectrum<K>,
    layers: &ConvexLayers,
) -> Result<DenseReport> {
    if spectrum.class_count() < 2 {
        return Err(Error::NoSecondDistance);
    }
    let n = spectrum.n();
    let (_, second, _) = spectrum.extreme_class_indices().expect("m >= 2");
    let delta2_class = &spectrum.classes()[second.expect("m >= 2")];
    let graph = build_second_distance_graph(&delta2_class.members, layers);
    let observations = graph.observations();
    let l1 = layers.l1_len();
    let l2 = layers.l2_len();
    let bound = dense_bound(l1, l2);
    let mu2 = delta2_class.multiplicity;
    let bound_holds = Rational64::from_integer(mu2 as i64) <= bound;
    let linear_case = if bound <= Rational64::from_integer(n as i64) {
        Some(mu2 <= n as u64)
    } else {
        None
    };
    let graph_consistent = graph.edges.len() as u64 == mu2 && graph.stray_edges.is_empty();
    let holds = bound_holds && linear_case.unwrap_or(true) && observations.all_hold();
    Ok(DenseReport {
        n,
        l1,
        l2,
        bound: format!("{bound}"),
        mu2,
        bound_holds,
        linear_case,
        observations,
        graph_consistent,
        holds,
    })
}

pub fn second_distance_graph_exact(set: &ExactSet) -> Result<SecondDistanceGraph> {
    let spectrum = distance_spectrum_exact(set)?;
    if spectrum.class_count() < 2 {
        return Err(Error::NoSecondDistance);
    }
    let (_, second, _) = spectrum.extreme_class_indices().expect("m >= 2");
    let layers = onion_layers(set);
    Ok(build_second_distance_graph(
        &spectrum.classes()[second.expect("m >= 2")].members,
        &layers,
    ))
}

pub fn second_distance_graph_approx(set: &ApproxSet) -> Result<SecondDistanceGraph> {
    let spectrum = distance_spectrum_approx(set)?;
    if spectrum.class_count() < 2 {
        return Err(Error::NoSecondDistance);
    }
    let (_, second, _) = spectrum.extreme_class_indices().expect("m >= 2");
    let layers = onion_layers(set);
    Ok(build_second_distance_graph(
        &spectrum.classes()[second.expect("m >= 2")].members,
        &layers,
    ))
}

pub fn check_dense_theorem_exact(set: &ExactSet) -> Result<DenseReport> {
    let spectrum = distance_spectrum_exact(set)?;
    let layers = onion_layers(set);
    check_dense_generic(&spectrum, &layers)
}

pub fn check_dense_theorem_approx(set: &ApproxSet) -> Result<DenseReport> {
    let spectrum = distance_spectrum_approx(set)?;
    let layers = onion_layers(set);
    check_dense_generic(&spectrum, &layers)
}

pub fn check_dense_theorem(set: &AnySet) -> Result<DenseReport> {
    match set {
        AnySet::Exact(s) => check_dense_theorem_exact(s),
        AnySet::Approx(s) => check_dense_theorem_approx(s),
    }
}

/// Outcome of the diameter-over-minimum-distance corollary on one set:
/// when Delta <= n/(3 pi) * delta, the second-largest distance occurs at
/// most n times.
#[derive(Clone, Debug, Serialize)]
pub struct DiameterRatioReport {
    pub n: usize,
    pub applies: bool,
    /// mu2 <= n, evaluated when the premise applies and a second distance
    /// exists.
    pub holds: Option<bool>,
    pub mu2: Option<u64>,
}

/// Upper bound on pi as an exact rational (the binary64 successor of the
/// closest double below pi), used so "applies" is certified outward.
fn pi_upper_rational() -> num_rational::BigRational {
    num_rational::BigRational::from_float(std::f64::consts::PI.next_up())
        .expect("finite constant")
}

pub fn diameter_ratio_corollary(set: &AnySet) -> Result<DiameterRatioReport> {
    let n = set.len();
    let spectrum = crate::spectrum::distance_spectrum(set)?;
    let (applies, mu2) = match &spectrum {
        AnySpectrum::Exact(s) => {
            let ex = s.extremal()?;
            let pi_hi = pi_upper_rational();
            let nine = num_rational::BigRational::from_integer(9.into());
            let n_sq = num_rational::BigRational::from_integer((n as i64 * n as i64).into());
            // Delta <= n/(3 pi) delta  <=>  9 pi^2 Delta^2 <= n^2 delta^2.
            let lhs = nine * &pi_hi * &pi_hi * &ex.diameter;
            let rhs = n_sq * &ex.smallest;
            let applies = lhs <= rhs;
            let mu2 = ex
                .second_largest
                .as_ref()
                .map(|k| s.multiplicity_of(k));
            (applies, mu2)
        }
        AnySpectrum::Approx(s) => {
            let ex = s.extremal()?;
            let pi_hi = std::f64::consts::PI.next_up();
            let lhs = 9.0 * pi_hi * pi_hi * ex.diameter.rep;
            let rhs = (n as f64) * (n as f64) * ex.smallest.rep;
            let applies = lhs <= rhs;
            let mu2 = match ex.second_largest {
                Some(k) => Some(s.multiplicity_of(k.rep)?),
                None => None,
            };
            (applies, mu2)
        }
    };
    if mu2.is_none() {
        // Only one distance class: no second distance to bound.
        return Ok(DiameterRatioReport {
            n,
            applies: false,
            holds: None,
            mu2: None,
        });
    }
    let holds = if applies {
        Some(mu2.unwrap() <= n as u64)
    } else {
        None
    };
    Ok(DiameterRatioReport {
        n,
        applies,
        holds,
        mu2,
    })
}

/// Guard against misuse: a bound of zero only happens for empty layers.
pub fn dense_bound_is_zero(l1: usize, l2: usize) -> bool {
    dense_bound(l1, l2).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::{ApproxPoint, ExactPoint};

    fn grid(w: i64, h: i64) -> ExactSet {
        let mut pts = Vec::new();
        for x in 0..w {
            for y in 0..h {
                pts.push(ExactPoint::from_ints(x, y));
            }
        }
        ExactSet::new(pts, format!("grid{w}x{h}")).unwrap()
    }

    fn ngon(n: usize) -> ApproxSet {
        let pts: Vec<ApproxPoint> = (0..n)
            .map(|i| {
                let a = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
                ApproxPoint::new(a.cos(), a.sin())
            })
            .collect();
        ApproxSet::new(pts, format!("r{n}")).unwrap()
    }

    #[test]
    fn dense_bound_values() {
        assert_eq!(dense_bound(8, 1), Rational64::new(38, 3));
        assert_eq!(dense_bound(4, 4), Rational64::from_integer(12));
        assert_eq!(dense_bound(0, 0), Rational64::from_integer(0));
    }

    #[test]
    fn grid_2x3_has_two_second_distance_edges() {
        // Points {0,1} x {0,1,2}: Delta^2 = 5, Delta2^2 = 4, realized by
        // the two long grid sides only (brute count over the 15 pairs).
        let set = grid(2, 3);
        let g = second_distance_graph_exact(&set).unwrap();
        assert_eq!(g.edges.len(), 2);
        assert!(g.stray_edges.is_empty());
        // Two disjoint edges prune to nothing.
        assert!(g.core_edges.is_empty());
        assert_eq!(g.pruned_vertices.len(), g.vertices.len());
    }

    #[test]
    fn pentagon_second_distance_graph() {
        let set = ngon(5);
        let g = second_distance_graph_approx(&set).unwrap();
        // The sides realize the second-largest distance: a 5-cycle in L1.
        assert_eq!(g.edges.len(), 5);
        assert!(g.core_inner.is_empty());
        assert_eq!(g.core_outer.len(), 5);
        assert_eq!(g.core_edges.len(), 5);
        let obs = g.observations();
        assert!(obs.all_hold(), "{obs:?}");
    }

    #[test]
    fn dense_theorem_on_grids() {
        for (w, h) in [(2, 3), (4, 4), (10, 10), (7, 3)] {
            let report = check_dense_theorem_exact(&grid(w, h)).unwrap();
            assert!(report.holds, "{w}x{h}: {report:?}");
            assert!(report.graph_consistent);
        }
    }

    #[test]
    fn dense_theorem_on_ngons() {
        for n in [5, 6, 9, 12] {
            let report = check_dense_theorem_approx(&ngon(n)).unwrap();
            assert!(report.holds, "n={n}: {report:?}");
        }
    }

    #[test]
    fn no_second_distance_rejected() {
        let pts = vec![ExactPoint::from_ints(0, 0), ExactPoint::from_ints(1, 0)];
        let set = ExactSet::new(pts, "pair").unwrap();
        assert!(matches!(
            check_dense_theorem_exact(&set),
            Err(Error::NoSecondDistance)
        ));
    }

    #[test]
    fn corollary_on_grids_and_ngons() {
        // 40x40 grid: Delta/delta = sqrt(2)*39 ~ 55.2 <= 1600/(3 pi) ~ 169.8.
        let report = diameter_ratio_corollary(&AnySet::Exact(grid(40, 40))).unwrap();
        assert!(report.applies);
        assert_eq!(report.holds, Some(true));

        // Regular 10-gon: Delta/delta ~ 3.24 > 10/(3 pi) ~ 1.06.
        let report = diameter_ratio_corollary(&AnySet::Approx(ngon(10))).unwrap();
        assert!(!report.applies);

        // Two points: one class, premise reported as not applicable.
        let pts = vec![ExactPoint::from_ints(0, 0), ExactPoint::from_ints(1, 0)];
        let set = ExactSet::new(pts, "pair").unwrap();
        let report = diameter_ratio_corollary(&AnySet::Exact(set)).unwrap();
        assert!(!report.applies);
        assert_eq!(report.holds, None);
    }
}
