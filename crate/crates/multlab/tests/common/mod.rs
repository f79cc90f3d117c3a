//! Shared oracles for the integration suites. These re-derive expected
//! values by a route independent of the library's spectrum construction:
//! flat pair lists, sorted, grouped.

use multlab::point::{
    squared_distance_approx, squared_distance_exact, AnySet, ApproxSet, ExactSet,
};
use num_rational::BigRational;

/// Exact-mode oracle: all pair keys sorted and grouped by equality.
/// Returns (key, multiplicity) in ascending key order.
pub fn exact_pair_oracle(set: &ExactSet) -> Vec<(BigRational, u64)> {
    let pts = set.points();
    let mut keys = Vec::with_capacity(pts.len() * (pts.len() - 1) / 2);
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            keys.push(squared_distance_exact(&pts[i], &pts[j]));
        }
    }
    keys.sort();
    let mut out: Vec<(BigRational, u64)> = Vec::new();
    for k in keys {
        match out.last_mut() {
            Some((prev, count)) if *prev == k => *count += 1,
            _ => out.push((k, 1)),
        }
    }
    out
}

/// Approximate-mode oracle: the same relative-gap grouping rule as the
/// library, coded independently over a plain sorted vector. Returns the
/// class sizes in ascending key order.
pub fn approx_pair_oracle(set: &ApproxSet) -> Vec<u64> {
    let pts = set.points();
    let mut keys = Vec::with_capacity(pts.len() * (pts.len() - 1) / 2);
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            keys.push(squared_distance_approx(&pts[i], &pts[j]));
        }
    }
    keys.sort_by(f64::total_cmp);
    let mut sizes = Vec::new();
    let mut run = 1u64;
    for t in 1..keys.len() {
        if keys[t] - keys[t - 1] > 1e-9 * keys[t] {
            sizes.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    if !keys.is_empty() {
        sizes.push(run);
    }
    sizes
}

/// Checks one set against the oracle of its mode; returns (n, ok).
pub fn spectrum_matches_oracle(set: &AnySet) -> (usize, bool) {
    let spectrum = multlab::spectrum::distance_spectrum(set).expect("spectrum");
    let n = set.len();
    let pairs = (n * (n - 1) / 2) as u64;
    let total: u64 = spectrum.multiplicities().iter().sum();
    if total != pairs {
        return (n, false);
    }
    let ok = match (set, &spectrum) {
        (AnySet::Exact(s), multlab::spectrum::AnySpectrum::Exact(spec)) => {
            let oracle = exact_pair_oracle(s);
            let order = spec.indices_by_key_desc();
            oracle.len() == spec.class_count()
                && oracle.iter().zip(order.iter().rev()).all(|((key, mult), &idx)| {
                    let class = &spec.classes()[idx];
                    class.key == *key && class.multiplicity == *mult
                })
        }
        (AnySet::Approx(s), multlab::spectrum::AnySpectrum::Approx(spec)) => {
            let mut oracle = approx_pair_oracle(s);
            oracle.sort_unstable();
            let mut got = spec.multiplicities();
            got.sort_unstable();
            oracle == got
        }
        _ => false,
    };
    (n, ok)
}
