//! Distance-multiplicity spectra.
//!
//! The spectrum of a point set X lists the distinct squared distances of X
//! together with their multiplicities, ordered by nonincreasing multiplicity
//! (ties: larger squared distance first). Working with squared distances
//! keeps exact mode free of square roots.
//!
//! In approximate mode the squared distances are grouped by a relative-gap
//! clustering pass and the grouping carries an audit certificate: the
//! smallest gap between clusters must dominate the widest cluster by
//! [`SAFETY`], otherwise class identity is untrustworthy and spectrum
//! construction fails loudly.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::point::{
    squared_distance_approx, squared_distance_exact, ApproxSet, ExactSet, Key,
};

/// Relative gap that starts a new cluster of squared distances.
pub const REL_EPS: f64 = 1e-9;

/// Required ratio between the smallest inter-cluster gap and the largest
/// intra-cluster spread for the clustering to count as reliable.
pub const SAFETY: f64 = 1e3;

/// One distance class: a squared-distance key, its multiplicity, and the
/// realizing index pairs (i < j).
#[derive(Clone, Debug)]
pub struct DistanceClass<K> {
    pub key: K,
    pub multiplicity: u64,
    pub members: Vec<(u32, u32)>,
}

/// Cluster key in approximate mode: the class is the interval
/// `[min, max]` of squared distances it absorbed; `rep` (= `min`) is the
/// representative value used in reports and comparisons.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FloatKey {
    pub rep: f64,
    pub min: f64,
    pub max: f64,
}

/// Reliability certificate of an approximate-mode clustering.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ClusterAudit {
    pub max_intra_spread: f64,
    pub min_inter_gap: f64,
    pub reliable: bool,
}

impl ClusterAudit {
    pub fn ratio(&self) -> f64 {
        self.min_inter_gap / self.max_intra_spread.max(f64::EPSILON)
    }
}

/// Ordering of spectrum keys; equal multiplicities are tie-broken by
/// descending key.
pub trait SpectrumKey: Clone {
    fn cmp_key(&self, other: &Self) -> Ordering;
    fn display(&self) -> String;
}

impl SpectrumKey for BigRational {
    fn cmp_key(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
    fn display(&self) -> String {
        crate::point::format_rational(self)
    }
}

impl SpectrumKey for FloatKey {
    fn cmp_key(&self, other: &Self) -> Ordering {
        self.rep.total_cmp(&other.rep)
    }
    fn display(&self) -> String {
        crate::point::format_f64(self.rep)
    }
}

/// The multiplicity spectrum of a point set.
#[derive(Clone, Debug)]
pub struct Spectrum<K> {
    classes: Vec<DistanceClass<K>>,
    n: usize,
    pub audit: Option<ClusterAudit>,
}

pub type ExactSpectrum = Spectrum<BigRational>;
pub type ApproxSpectrum = Spectrum<FloatKey>;

impl<K: SpectrumKey> Spectrum<K> {
    fn from_classes(mut classes: Vec<DistanceClass<K>>, n: usize, audit: Option<ClusterAudit>) -> Self {
        classes.sort_by(|a, b| {
            b.multiplicity
                .cmp(&a.multiplicity)
                .then_with(|| b.key.cmp_key(&a.key))
        });
        let total: u64 = classes.iter().map(|c| c.multiplicity).sum();
        debug_assert_eq!(total as usize * 2, n * (n - 1));
        Spectrum { classes, n, audit }
    }

    pub fn classes(&self) -> &[DistanceClass<K>] {
        &self.classes
    }

    /// Number of points the spectrum was computed from.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of distinct distance classes, m.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// a(X): the multiplicities in nonincreasing order.
    pub fn multiplicities(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.multiplicity).collect()
    }

    /// True iff a(X) = (n-1, n-2, ..., 1), the maximum number of distinct
    /// multiplicity values an n-point set can realize.
    pub fn is_full_staircase(&self) -> bool {
        let n = self.n as u64;
        if self.classes.len() as u64 != n.saturating_sub(1) {
            return false;
        }
        self.classes
            .iter()
            .zip((1..n).rev())
            .all(|(c, want)| c.multiplicity == want)
    }

    /// True iff all multiplicities are pairwise distinct.
    pub fn multiplicities_distinct(&self) -> bool {
        self.classes
            .windows(2)
            .all(|w| w[0].multiplicity != w[1].multiplicity)
    }

    /// Indices of the diameter class, the second-largest-key class (when
    /// m >= 2) and the smallest-key class, in one pass.
    pub fn extreme_class_indices(&self) -> Option<(usize, Option<usize>, usize)> {
        if self.classes.is_empty() {
            return None;
        }
        let mut max = 0usize;
        let mut min = 0usize;
        for i in 1..self.classes.len() {
            if self.classes[i].key.cmp_key(&self.classes[max].key) == Ordering::Greater {
                max = i;
            }
            if self.classes[i].key.cmp_key(&self.classes[min].key) == Ordering::Less {
                min = i;
            }
        }
        let mut second: Option<usize> = None;
        for i in 0..self.classes.len() {
            if i == max {
                continue;
            }
            match second {
                None => second = Some(i),
                Some(s) => {
                    if self.classes[i].key.cmp_key(&self.classes[s].key) == Ordering::Greater {
                        second = Some(i);
                    }
                }
            }
        }
        Some((max, second, min))
    }

    /// Keys of the largest, second-largest and smallest distances.
    pub fn extremal(&self) -> Result<ExtremalDistances<K>> {
        let (max, second, min) = self
            .extreme_class_indices()
            .ok_or(Error::NoSecondDistance)?;
        Ok(ExtremalDistances {
            smallest: self.classes[min].key.clone(),
            second_largest: second.map(|i| self.classes[i].key.clone()),
            diameter: self.classes[max].key.clone(),
        })
    }

    /// The class realizing the r-th largest distance (r = 0 is the
    /// diameter). For the extremes prefer [`Self::extreme_class_indices`];
    /// this sorts all keys.
    pub fn class_by_key_rank(&self, rank_from_top: usize) -> Option<&DistanceClass<K>> {
        let order = self.indices_by_key_desc();
        order.get(rank_from_top).map(|&i| &self.classes[i])
    }

    /// Class indices ordered by descending key (one sort).
    pub fn indices_by_key_desc(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.classes.len()).collect();
        order.sort_by(|&a, &b| self.classes[b].key.cmp_key(&self.classes[a].key));
        order
    }
}

/// Squared-distance keys of the extreme classes.
#[derive(Clone, Debug)]
pub struct ExtremalDistances<K> {
    pub diameter: K,
    pub second_largest: Option<K>,
    pub smallest: K,
}

/// Exact-mode spectrum: classes keyed by exact rational squared distances.
/// Grouping is hash-based; rational comparisons happen only in the final
/// ordering pass.
pub fn distance_spectrum_exact(set: &ExactSet) -> Result<ExactSpectrum> {
    let pts = set.points();
    let n = pts.len();
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: n });
    }
    let mut groups: HashMap<BigRational, Vec<(u32, u32)>> = HashMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let key = squared_distance_exact(&pts[i], &pts[j]);
            if key.is_zero() {
                return Err(Error::DegeneratePointSet(format!(
                    "points {i} and {j} coincide"
                )));
            }
            groups.entry(key).or_default().push((i as u32, j as u32));
        }
    }
    let classes = groups
        .into_iter()
        .map(|(key, members)| DistanceClass {
            key,
            multiplicity: members.len() as u64,
            members,
        })
        .collect();
    Ok(Spectrum::from_classes(classes, n, None))
}

/// Approximate-mode spectrum: squared distances sorted and grouped by the
/// relative-gap rule, then audited. Fails with `UnreliableClustering` when
/// the audit cannot certify class identity.
pub fn distance_spectrum_approx(set: &ApproxSet) -> Result<ApproxSpectrum> {
    let pts = set.points();
    let n = pts.len();
    if n < 2 {
        return Err(Error::TooFewPoints { needed: 2, got: n });
    }
    let mut values: Vec<(f64, u32, u32)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            let d2 = squared_distance_approx(&pts[i], &pts[j]);
            if d2 < crate::point::EPS_DEG {
                return Err(Error::DegeneratePointSet(format!(
                    "points {i} and {j} coincide"
                )));
            }
            values.push((d2, i as u32, j as u32));
        }
    }
    values.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut classes: Vec<DistanceClass<FloatKey>> = Vec::new();
    let mut start = 0usize;
    for t in 1..=values.len() {
        let boundary = t == values.len() || {
            let prev = values[t - 1].0;
            let cur = values[t].0;
            cur - prev > REL_EPS * cur
        };
        if boundary {
            let slice = &values[start..t];
            let min = slice[0].0;
            let max = slice[slice.len() - 1].0;
            classes.push(DistanceClass {
                key: FloatKey { rep: min, min, max },
                multiplicity: slice.len() as u64,
                members: slice.iter().map(|&(_, i, j)| (i, j)).collect(),
            });
            start = t;
        }
    }

    let max_intra_spread = classes
        .iter()
        .map(|c| c.key.max - c.key.min)
        .fold(0.0_f64, f64::max);
    let min_inter_gap = classes
        .windows(2)
        .map(|w| w[1].key.min - w[0].key.max)
        .fold(f64::INFINITY, f64::min);
    let reliable = min_inter_gap >= SAFETY * max_intra_spread.max(f64::EPSILON);
    let audit = ClusterAudit {
        max_intra_spread,
        min_inter_gap,
        reliable,
    };
    if !reliable {
        return Err(Error::UnreliableClustering {
            min_inter_gap,
            max_intra_spread,
            safety: SAFETY,
        });
    }
    Ok(Spectrum::from_classes(classes, n, Some(audit)))
}

impl ExactSpectrum {
    /// Multiplicity of the class with exactly this squared distance; 0 if
    /// absent.
    pub fn multiplicity_of(&self, key: &BigRational) -> u64 {
        self.classes
            .iter()
            .find(|c| &c.key == key)
            .map(|c| c.multiplicity)
            .unwrap_or(0)
    }
}

impl ApproxSpectrum {
    /// Index of the class whose cluster window contains `key`, by the
    /// audit's tolerance. `Ok(None)` when the key is clearly outside every
    /// window; `AmbiguousKey` when it sits in the grey zone between
    /// windows or near two of them.
    pub fn class_index_of(&self, key: f64) -> Result<Option<usize>> {
        let audit = self.audit.expect("approx spectrum carries an audit");
        let tol = audit
            .max_intra_spread
            .max(REL_EPS * key.abs())
            .max(f64::EPSILON);
        let mut hit: Option<usize> = None;
        let mut ambiguous = false;
        for (idx, c) in self.classes.iter().enumerate() {
            let dist = if key < c.key.min {
                c.key.min - key
            } else if key > c.key.max {
                key - c.key.max
            } else {
                0.0
            };
            if dist <= tol {
                if hit.is_some() {
                    return Err(Error::AmbiguousKey { key });
                }
                hit = Some(idx);
            } else if dist <= SAFETY * tol {
                ambiguous = true;
            }
        }
        match (hit, ambiguous) {
            (Some(idx), _) => Ok(Some(idx)),
            (None, true) => Err(Error::AmbiguousKey { key }),
            (None, false) => Ok(None),
        }
    }

    /// Multiplicity of the class containing `key`, by cluster membership.
    ///
    /// A key clearly inside one cluster window resolves to that class; a
    /// key clearly outside every window resolves to 0; a key inside the
    /// audit's grey zone is refused.
    pub fn multiplicity_of(&self, key: f64) -> Result<u64> {
        Ok(self
            .class_index_of(key)?
            .map(|idx| self.classes[idx].multiplicity)
            .unwrap_or(0))
    }
}

/// Spectrum in either mode.
#[derive(Clone, Debug)]
pub enum AnySpectrum {
    Exact(ExactSpectrum),
    Approx(ApproxSpectrum),
}

impl AnySpectrum {
    pub fn n(&self) -> usize {
        match self {
            AnySpectrum::Exact(s) => s.n(),
            AnySpectrum::Approx(s) => s.n(),
        }
    }

    pub fn class_count(&self) -> usize {
        match self {
            AnySpectrum::Exact(s) => s.class_count(),
            AnySpectrum::Approx(s) => s.class_count(),
        }
    }

    pub fn multiplicities(&self) -> Vec<u64> {
        match self {
            AnySpectrum::Exact(s) => s.multiplicities(),
            AnySpectrum::Approx(s) => s.multiplicities(),
        }
    }

    pub fn is_full_staircase(&self) -> bool {
        match self {
            AnySpectrum::Exact(s) => s.is_full_staircase(),
            AnySpectrum::Approx(s) => s.is_full_staircase(),
        }
    }

    pub fn multiplicities_distinct(&self) -> bool {
        match self {
            AnySpectrum::Exact(s) => s.multiplicities_distinct(),
            AnySpectrum::Approx(s) => s.multiplicities_distinct(),
        }
    }

    pub fn audit(&self) -> Option<ClusterAudit> {
        match self {
            AnySpectrum::Exact(_) => None,
            AnySpectrum::Approx(s) => s.audit,
        }
    }

    pub fn multiplicity_of(&self, key: &Key) -> Result<u64> {
        match (self, key) {
            (AnySpectrum::Exact(s), Key::Exact(k)) => Ok(s.multiplicity_of(k)),
            (AnySpectrum::Approx(s), k) => s.multiplicity_of(k.as_f64()),
            (AnySpectrum::Exact(s), Key::Approx(v)) => {
                // Exact spectra accept float queries only for keys that are
                // exactly representable (integer grids and the like).
                let exact = BigRational::from_float(*v)
                    .ok_or_else(|| Error::Parse(format!("non-finite key {v}")))?;
                Ok(s.multiplicity_of(&exact))
            }
        }
    }

    /// (key-as-display, multiplicity) rows for reports, in spectrum order.
    pub fn rows(&self) -> Vec<(String, u64)> {
        match self {
            AnySpectrum::Exact(s) => s
                .classes()
                .iter()
                .map(|c| (c.key.display(), c.multiplicity))
                .collect(),
            AnySpectrum::Approx(s) => s
                .classes()
                .iter()
                .map(|c| (c.key.display(), c.multiplicity))
                .collect(),
        }
    }
}

/// Spectrum of a point set in either mode.
pub fn distance_spectrum(set: &crate::point::AnySet) -> Result<AnySpectrum> {
    match set {
        crate::point::AnySet::Exact(s) => Ok(AnySpectrum::Exact(distance_spectrum_exact(s)?)),
        crate::point::AnySet::Approx(s) => Ok(AnySpectrum::Approx(distance_spectrum_approx(s)?)),
    }
}
