//! Convex hulls and onion (convex-layer) decomposition.
//!
//! Layer membership is boundary membership: points that lie on the hull
//! boundary between two extreme vertices belong to the layer as well. For
//! the second-distance machinery this convention can only enlarge the outer
//! layers, which keeps every bound it feeds conservative. Orientation tests
//! are exact rational signs in exact mode and guarded floats otherwise.

use crate::point::{Orientation, PlanePoint, PointSet};

/// Onion decomposition L1, L2, ... of a point set. Each layer lists point
/// indices in counterclockwise boundary order (collinear boundary members
/// included; a fully collinear layer is ordered along its line).
#[derive(Clone, Debug)]
pub struct ConvexLayers {
    pub layers: Vec<Vec<usize>>,
}

impl ConvexLayers {
    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn l1_len(&self) -> usize {
        self.layers.first().map_or(0, Vec::len)
    }

    pub fn l2_len(&self) -> usize {
        self.layers.get(1).map_or(0, Vec::len)
    }

    /// Index of the layer containing the point, 0-based.
    pub fn layer_of(&self, point: usize) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(&point))
    }
}

/// Strictly convex hull (extreme vertices only) of the points selected by
/// `active`, counterclockwise. Monotone chain with collinear points popped.
fn strict_hull<P: PlanePoint>(pts: &[P], active: &[usize]) -> Vec<usize> {
    let mut order: Vec<usize> = active.to_vec();
    order.sort_by(|&i, &j| pts[i].cmp_xy(&pts[j]));
    if order.len() <= 2 {
        return order;
    }
    let turn_ok = |a: usize, b: usize, c: usize| {
        P::orientation(&pts[a], &pts[b], &pts[c]) == Orientation::Ccw
    };
    let mut lower: Vec<usize> = Vec::new();
    for &idx in &order {
        while lower.len() >= 2 && !turn_ok(lower[lower.len() - 2], lower[lower.len() - 1], idx) {
            lower.pop();
        }
        lower.push(idx);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &idx in order.iter().rev() {
        while upper.len() >= 2 && !turn_ok(upper[upper.len() - 2], upper[upper.len() - 1], idx) {
            upper.pop();
        }
        upper.push(idx);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// All boundary members of the convex hull of the selected points,
/// counterclockwise, collinear edge points included in traversal order.
fn boundary_members<P: PlanePoint>(pts: &[P], active: &[usize]) -> Vec<usize> {
    let corners = strict_hull(pts, active);
    if corners.len() == active.len() {
        return corners;
    }
    if corners.len() <= 2 {
        // Everything is collinear: order along the segment.
        let mut order = active.to_vec();
        if corners.len() == 2 {
            let (a, b) = (corners[0], corners[1]);
            order.sort_by(|&p, &q| P::cmp_along(&pts[a], &pts[b], &pts[p], &pts[q]));
        }
        return order;
    }

    let corner_set: std::collections::HashSet<usize> = corners.iter().copied().collect();
    let h = corners.len();
    let mut on_edge: Vec<Vec<usize>> = vec![Vec::new(); h];
    for &idx in active {
        if corner_set.contains(&idx) {
            continue;
        }
        for e in 0..h {
            let a = corners[e];
            let b = corners[(e + 1) % h];
            if P::orientation(&pts[a], &pts[b], &pts[idx]) == Orientation::Collinear
                && P::on_segment(&pts[a], &pts[b], &pts[idx])
            {
                on_edge[e].push(idx);
                break;
            }
        }
    }
    let mut cycle = Vec::with_capacity(active.len());
    for e in 0..h {
        let a = corners[e];
        let b = corners[(e + 1) % h];
        cycle.push(a);
        on_edge[e].sort_by(|&p, &q| P::cmp_along(&pts[a], &pts[b], &pts[p], &pts[q]));
        cycle.extend(on_edge[e].iter().copied());
    }
    cycle
}

/// Counterclockwise convex-hull boundary of a point set (indices into the
/// set), including collinear boundary points.
pub fn convex_hull<P: PlanePoint>(set: &PointSet<P>) -> Vec<usize> {
    let active: Vec<usize> = (0..set.len()).collect();
    boundary_members(set.points(), &active)
}

/// Full onion decomposition by repeated hull peeling.
pub fn onion_layers<P: PlanePoint>(set: &PointSet<P>) -> ConvexLayers {
    let pts = set.points();
    let mut remaining: Vec<usize> = (0..pts.len()).collect();
    let mut layers = Vec::new();
    while !remaining.is_empty() {
        let layer = boundary_members(pts, &remaining);
        let in_layer: std::collections::HashSet<usize> = layer.iter().copied().collect();
        remaining.retain(|i| !in_layer.contains(i));
        layers.push(layer);
    }
    ConvexLayers { layers }
}

/// A set is in convex position iff its first layer exhausts it.
pub fn is_convex_position<P: PlanePoint>(set: &PointSet<P>) -> bool {
    convex_hull(set).len() == set.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::{ApproxPoint, ApproxSet, ExactPoint, ExactSet};

    fn grid(w: i64, h: i64) -> ExactSet {
        let mut pts = Vec::new();
        for x in 0..w {
            for y in 0..h {
                pts.push(ExactPoint::from_ints(x, y));
            }
        }
        ExactSet::new(pts, format!("grid{w}x{h}")).unwrap()
    }

    #[test]
    fn hull_of_3x3_grid_has_8_boundary_points() {
        let set = grid(3, 3);
        let hull = convex_hull(&set);
        assert_eq!(hull.len(), 8);
        // The center (1,1) is index 4 in column-major generation.
        assert!(!hull.contains(&4));
    }

    #[test]
    fn hull_of_collinear_points_reports_all() {
        let pts = vec![
            ExactPoint::from_ints(2, 2),
            ExactPoint::from_ints(0, 0),
            ExactPoint::from_ints(1, 1),
        ];
        let set = ExactSet::new(pts, "line3").unwrap();
        let hull = convex_hull(&set);
        assert_eq!(hull, vec![1, 2, 0]); // ordered along the line
    }

    #[test]
    fn hull_of_regular_hexagon() {
        let pts: Vec<ApproxPoint> = (0..6)
            .map(|i| {
                let a = std::f64::consts::PI * i as f64 / 3.0;
                ApproxPoint::new(a.cos(), a.sin())
            })
            .collect();
        let set = ApproxSet::new(pts, "r6").unwrap();
        assert_eq!(convex_hull(&set).len(), 6);
        assert!(is_convex_position(&set));
    }

    #[test]
    fn onion_of_3x3_grid() {
        let layers = onion_layers(&grid(3, 3));
        assert_eq!(layers.layer_sizes(), vec![8, 1]);
    }

    #[test]
    fn onion_of_4x4_grid() {
        // Brute expectation: the 12-point boundary ring, then the 2x2 core.
        let layers = onion_layers(&grid(4, 4));
        assert_eq!(layers.layer_sizes(), vec![12, 4]);
    }

    #[test]
    fn onion_partition_and_idempotence() {
        let set = grid(5, 4);
        let layers = onion_layers(&set);
        let mut seen = vec![false; set.len()];
        for layer in &layers.layers {
            for &i in layer {
                assert!(!seen[i], "layers must be disjoint");
                seen[i] = true;
            }
        }
        assert!(seen.iter().all(|&s| s), "layers must cover the set");

        // Peeling the union of earlier layers reproduces each layer.
        let pts = set.points();
        let mut remaining: Vec<usize> = (0..set.len()).collect();
        for layer in &layers.layers {
            let again = super::boundary_members(pts, &remaining);
            assert_eq!(&again, layer);
            remaining.retain(|i| !layer.contains(i));
        }
    }

    #[test]
    fn single_layer_for_convex_set() {
        let pts: Vec<ApproxPoint> = (0..9)
            .map(|i| {
                let a = 2.0 * std::f64::consts::PI * i as f64 / 9.0;
                ApproxPoint::new(a.cos(), a.sin())
            })
            .collect();
        let set = ApproxSet::new(pts, "r9").unwrap();
        let layers = onion_layers(&set);
        assert_eq!(layers.layer_sizes(), vec![9]);
    }

    #[test]
    fn hull_ccw_orientation() {
        let set = grid(3, 3);
        let hull = convex_hull(&set);
        let pts = set.points();
        // Signed area of the traversal must be positive.
        let mut area2 = num_rational::BigRational::from_integer(0.into());
        for i in 0..hull.len() {
            let a = &pts[hull[i]];
            let b = &pts[hull[(i + 1) % hull.len()]];
            area2 += &a.x * &b.y - &b.x * &a.y;
        }
        assert!(area2 > num_rational::BigRational::from_integer(0.into()));
    }
}
