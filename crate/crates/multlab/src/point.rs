//! Planar points in two coordinate modes.
//!
//! Exact mode stores arbitrary-precision rationals and every predicate is
//! decided exactly. Approximate mode stores binary64 coordinates and defers
//! the reliability question to the clustering audit in [`crate::spectrum`].
//! The two modes never mix inside one point set.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Degeneracy floor on squared distances in approximate mode: two points
/// closer than this are rejected as duplicates.
pub const EPS_DEG: f64 = 1e-12;

/// Orientation guard for approximate cross products, relative to the
/// magnitude of the inputs.
pub const EPS_ORIENT: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

/// Point with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactPoint {
    pub x: BigRational,
    pub y: BigRational,
}

/// Point with binary64 coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproxPoint {
    pub x: f64,
    pub y: f64,
}

impl ExactPoint {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Self { x, y }
    }

    /// Point with integer coordinates.
    pub fn from_ints(x: i64, y: i64) -> Self {
        Self {
            x: BigRational::from_integer(BigInt::from(x)),
            y: BigRational::from_integer(BigInt::from(y)),
        }
    }

    pub fn to_approx(&self) -> ApproxPoint {
        ApproxPoint {
            x: rational_to_f64(&self.x),
            y: rational_to_f64(&self.y),
        }
    }
}

impl ApproxPoint {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Lossless lift: every finite binary64 value is a rational.
    pub fn to_exact(&self) -> ExactPoint {
        ExactPoint {
            x: BigRational::from_float(self.x).expect("finite coordinate"),
            y: BigRational::from_float(self.y).expect("finite coordinate"),
        }
    }
}

pub fn squared_distance_exact(p: &ExactPoint, q: &ExactPoint) -> BigRational {
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    &dx * &dx + &dy * &dy
}

pub fn squared_distance_approx(p: &ApproxPoint, q: &ApproxPoint) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    dx * dx + dy * dy
}

/// Squared-distance value in either mode. Also serves as the query key for
/// spectrum lookups and as the literal in machine-checkable expected facts.
#[derive(Clone, Debug, PartialEq)]
pub enum Key {
    Exact(BigRational),
    Approx(f64),
}

impl Key {
    pub fn as_f64(&self) -> f64 {
        match self {
            Key::Exact(r) => rational_to_f64(r),
            Key::Approx(v) => *v,
        }
    }

    pub fn from_int(v: i64) -> Self {
        Key::Exact(BigRational::from_integer(BigInt::from(v)))
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Key::Exact(r) => write!(f, "{}", format_rational(r)),
            Key::Approx(v) => write!(f, "{}", format_f64(*v)),
        }
    }
}

impl Serialize for Key {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Key::Exact(r) => s.serialize_str(&format_rational(r)),
            Key::Approx(v) => s.serialize_f64(*v),
        }
    }
}

impl<'de> Deserialize<'de> for Key {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(Key::Approx(v)),
            Raw::Text(t) => parse_rational(&t)
                .map(Key::Exact)
                .map_err(serde::de::Error::custom),
        }
    }
}

/// Squared Euclidean distance between two points that may come from
/// different sources; rejects mixed modes.
pub fn squared_distance(p: &AnyPoint, q: &AnyPoint) -> Result<Key> {
    match (p, q) {
        (AnyPoint::Exact(a), AnyPoint::Exact(b)) => Ok(Key::Exact(squared_distance_exact(a, b))),
        (AnyPoint::Approx(a), AnyPoint::Approx(b)) => {
            Ok(Key::Approx(squared_distance_approx(a, b)))
        }
        _ => Err(Error::ModeMismatch),
    }
}

/// A point in either mode, for surfaces that dispatch at runtime.
#[derive(Clone, Debug)]
pub enum AnyPoint {
    Exact(ExactPoint),
    Approx(ApproxPoint),
}

/// Predicates every coordinate mode must provide for hull peeling and the
/// degeneracy checks. Exact mode decides all of them exactly.
pub trait PlanePoint: Clone {
    fn orientation(a: &Self, b: &Self, c: &Self) -> Orientation;
    fn cmp_xy(&self, other: &Self) -> Ordering;
    /// Order `p` and `q` by their projection onto the direction `b - a`.
    fn cmp_along(a: &Self, b: &Self, p: &Self, q: &Self) -> Ordering;
    /// For `p` collinear with the segment `[a, b]`: does it lie on it?
    fn on_segment(a: &Self, b: &Self, p: &Self) -> bool;
    /// Duplicate-point test (exact equality resp. the `EPS_DEG` floor).
    fn coincides(&self, other: &Self) -> bool;
    /// Does `p` lie on the circle through the non-collinear `a`, `b`, `c`?
    fn concyclic(a: &Self, b: &Self, c: &Self, p: &Self) -> bool;
    fn approx_xy(&self) -> (f64, f64);
}

impl PlanePoint for ExactPoint {
    fn orientation(a: &Self, b: &Self, c: &Self) -> Orientation {
        let cross = (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x);
        if cross.is_zero() {
            Orientation::Collinear
        } else if cross.is_positive() {
            Orientation::Ccw
        } else {
            Orientation::Cw
        }
    }

    fn cmp_xy(&self, other: &Self) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }

    fn cmp_along(a: &Self, b: &Self, p: &Self, q: &Self) -> Ordering {
        let dx = &b.x - &a.x;
        let dy = &b.y - &a.y;
        let tp = (&p.x - &a.x) * &dx + (&p.y - &a.y) * &dy;
        let tq = (&q.x - &a.x) * &dx + (&q.y - &a.y) * &dy;
        tp.cmp(&tq)
    }

    fn on_segment(a: &Self, b: &Self, p: &Self) -> bool {
        let dx = &b.x - &a.x;
        let dy = &b.y - &a.y;
        let t = (&p.x - &a.x) * &dx + (&p.y - &a.y) * &dy;
        let len2 = &dx * &dx + &dy * &dy;
        !t.is_negative() && t <= len2
    }

    fn coincides(&self, other: &Self) -> bool {
        self == other
    }

    fn concyclic(a: &Self, b: &Self, c: &Self, p: &Self) -> bool {
        let row = |q: &Self| {
            let dx = &q.x - &p.x;
            let dy = &q.y - &p.y;
            let dz = (&q.x * &q.x + &q.y * &q.y) - (&p.x * &p.x + &p.y * &p.y);
            (dx, dy, dz)
        };
        let (ax, ay, az) = row(a);
        let (bx, by, bz) = row(b);
        let (cx, cy, cz) = row(c);
        let det = &ax * (&by * &cz - &bz * &cy) - &ay * (&bx * &cz - &bz * &cx)
            + &az * (&bx * &cy - &by * &cx);
        det.is_zero()
    }

    fn approx_xy(&self) -> (f64, f64) {
        (rational_to_f64(&self.x), rational_to_f64(&self.y))
    }
}

impl PlanePoint for ApproxPoint {
    fn orientation(a: &Self, b: &Self, c: &Self) -> Orientation {
        let ux = b.x - a.x;
        let uy = b.y - a.y;
        let vx = c.x - a.x;
        let vy = c.y - a.y;
        let cross = ux * vy - uy * vx;
        let scale = (ux.abs() + uy.abs()) * (vx.abs() + vy.abs());
        if cross.abs() <= EPS_ORIENT * scale {
            Orientation::Collinear
        } else if cross > 0.0 {
            Orientation::Ccw
        } else {
            Orientation::Cw
        }
    }

    fn cmp_xy(&self, other: &Self) -> Ordering {
        self.x
            .total_cmp(&other.x)
            .then_with(|| self.y.total_cmp(&other.y))
    }

    fn cmp_along(a: &Self, b: &Self, p: &Self, q: &Self) -> Ordering {
        let dx = b.x - a.x;
        let dy = b.y - a.y;
        let tp = (p.x - a.x) * dx + (p.y - a.y) * dy;
        let tq = (q.x - a.x) * dx + (q.y - a.y) * dy;
        tp.total_cmp(&tq)
    }

    fn on_segment(a: &Self, b: &Self, p: &Self) -> bool {
        let dx = b.x - a.x;
        let dy = b.y - a.y;
        let len2 = dx * dx + dy * dy;
        let t = (p.x - a.x) * dx + (p.y - a.y) * dy;
        let tol = EPS_ORIENT * len2;
        t >= -tol && t <= len2 + tol
    }

    fn coincides(&self, other: &Self) -> bool {
        squared_distance_approx(self, other) < EPS_DEG
    }

    fn concyclic(a: &Self, b: &Self, c: &Self, p: &Self) -> bool {
        let row = |q: &ApproxPoint| {
            let dx = q.x - p.x;
            let dy = q.y - p.y;
            let dz = (q.x * q.x + q.y * q.y) - (p.x * p.x + p.y * p.y);
            (dx, dy, dz)
        };
        let (ax, ay, az) = row(a);
        let (bx, by, bz) = row(b);
        let (cx, cy, cz) = row(c);
        let det = ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx);
        let scale = (ax.abs() + ay.abs() + az.abs())
            * (bx.abs() + by.abs() + bz.abs())
            * (cx.abs() + cy.abs() + cz.abs());
        det.abs() <= 1e-9 * scale.max(f64::MIN_POSITIVE)
    }

    fn approx_xy(&self) -> (f64, f64) {
        (self.x, self.y)
    }
}

/// Finite planar point set in one coordinate mode, with provenance metadata.
#[derive(Clone, Debug)]
pub struct PointSet<P> {
    points: Vec<P>,
    pub label: String,
    pub metadata: BTreeMap<String, String>,
}

pub type ExactSet = PointSet<ExactPoint>;
pub type ApproxSet = PointSet<ApproxPoint>;

impl<P: PlanePoint> PointSet<P> {
    /// Builds a point set, rejecting empty input and duplicate points.
    pub fn new(points: Vec<P>, label: impl Into<String>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::TooFewPoints { needed: 1, got: 0 });
        }
        let mut order: Vec<usize> = (0..points.len()).collect();
        order.sort_by(|&i, &j| points[i].cmp_xy(&points[j]));
        for w in order.windows(2) {
            if points[w[0]].coincides(&points[w[1]]) {
                return Err(Error::DegeneratePointSet(format!(
                    "points {} and {} coincide",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self {
            points,
            label: label.into(),
            metadata: BTreeMap::new(),
        })
    }

    pub fn with_metadata(mut self, key: &str, value: impl ToString) -> Self {
        self.metadata.insert(key.to_string(), value.to_string());
        self
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[P] {
        &self.points
    }

    /// True when every point lies on one line (vacuously for n <= 2).
    pub fn all_collinear(&self) -> bool {
        let pts = &self.points;
        if pts.len() <= 2 {
            return true;
        }
        pts[2..]
            .iter()
            .all(|p| P::orientation(&pts[0], &pts[1], p) == Orientation::Collinear)
    }

    /// True when a single circle passes through every point. A collinear
    /// set is not cocircular; sets of at most two points vacuously are.
    pub fn all_cocircular(&self) -> bool {
        let pts = &self.points;
        if pts.len() <= 2 {
            return true;
        }
        let base = pts[2..]
            .iter()
            .position(|p| P::orientation(&pts[0], &pts[1], p) != Orientation::Collinear)
            .map(|off| off + 2);
        let Some(k) = base else {
            return false;
        };
        (2..pts.len())
            .filter(|&i| i != k)
            .all(|i| P::concyclic(&pts[0], &pts[1], &pts[k], &pts[i]))
    }
}

impl ExactSet {
    pub fn to_approx_set(&self) -> Result<ApproxSet> {
        let pts = self.points.iter().map(ExactPoint::to_approx).collect();
        let mut set = ApproxSet::new(pts, self.label.clone())?;
        set.metadata = self.metadata.clone();
        Ok(set)
    }
}

impl ApproxSet {
    pub fn to_exact_set(&self) -> Result<ExactSet> {
        let pts = self.points.iter().map(ApproxPoint::to_exact).collect();
        let mut set = ExactSet::new(pts, self.label.clone())?;
        set.metadata = self.metadata.clone();
        Ok(set)
    }
}

/// A point set in either mode, the unit of file and CLI exchange.
#[derive(Clone, Debug)]
pub enum AnySet {
    Exact(ExactSet),
    Approx(ApproxSet),
}

impl AnySet {
    pub fn len(&self) -> usize {
        match self {
            AnySet::Exact(s) => s.len(),
            AnySet::Approx(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn label(&self) -> &str {
        match self {
            AnySet::Exact(s) => &s.label,
            AnySet::Approx(s) => &s.label,
        }
    }

    pub fn mode_name(&self) -> &'static str {
        match self {
            AnySet::Exact(_) => "exact",
            AnySet::Approx(_) => "approx",
        }
    }

    pub fn metadata(&self) -> &BTreeMap<String, String> {
        match self {
            AnySet::Exact(s) => &s.metadata,
            AnySet::Approx(s) => &s.metadata,
        }
    }

    pub fn point(&self, i: usize) -> AnyPoint {
        match self {
            AnySet::Exact(s) => AnyPoint::Exact(s.points()[i].clone()),
            AnySet::Approx(s) => AnyPoint::Approx(s.points()[i]),
        }
    }

    pub fn all_collinear(&self) -> bool {
        match self {
            AnySet::Exact(s) => s.all_collinear(),
            AnySet::Approx(s) => s.all_collinear(),
        }
    }

    pub fn all_cocircular(&self) -> bool {
        match self {
            AnySet::Exact(s) => s.all_cocircular(),
            AnySet::Approx(s) => s.all_cocircular(),
        }
    }

    pub fn to_mode(&self, mode: &str) -> Result<AnySet> {
        match (self, mode) {
            (AnySet::Exact(_), "exact") | (AnySet::Approx(_), "approx") => Ok(self.clone()),
            (AnySet::Exact(s), "approx") => Ok(AnySet::Approx(s.to_approx_set()?)),
            (AnySet::Approx(s), "exact") => Ok(AnySet::Exact(s.to_exact_set()?)),
            _ => Err(Error::Parse(format!("unknown mode `{mode}`"))),
        }
    }
}

/// Rounds a rational to the nearest binary64 value.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// Formats a rational as `p/q`, or just `p` for integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Shortest-round-trip would suffice for binary64, but reports pin 17
/// significant digits so files are diffable across writers.
pub fn format_f64(v: f64) -> String {
    format!("{:.16e}", v)
}

/// Parses `p/q`, an integer, or a plain decimal literal into an exact
/// rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::Parse(format!("invalid rational literal `{text}`"));
    if let Some((num, den)) = t.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int_part.trim_start().starts_with('-');
        let int: BigInt = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            BigInt::zero()
        } else {
            int_part.parse().map_err(|_| bad())?
        };
        let frac: BigInt = frac_part.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac_part.len());
        let unsigned = int.abs() * &scale + frac;
        let signed = if negative { -unsigned } else { unsigned };
        return Ok(BigRational::new(signed, scale));
    }
    let n: BigInt = t.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n))
}
