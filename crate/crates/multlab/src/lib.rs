//! multlab: a laboratory for distance multiplicities of planar point sets.
//!
//! Given a finite set X of points in the plane, arrange the multiplicities
//! of its m distinct distances as a(X) = (a_1, ..., a_m) in nonincreasing
//! order. This crate computes a(X) exactly (rational coordinates) or with
//! an audited floating-point clustering, generates the extremal families
//! whose spectra are interesting (regular polygons, staircase sets, grid
//! sections, translate cascades, the three-group set, the hexagonal
//! strip), analyzes the second-largest distance through convex layers, and
//! verifies each checkable claim about these objects against independent
//! brute-force oracles.
//!
//! Start with [`point::PointSet`] and [`spectrum::distance_spectrum`], or
//! run one claim end to end via [`claims::verify`]. Each major capability
//! has a runnable example under `examples/`.

pub mod cascade;
pub mod claims;
pub mod cli;
pub mod constructions;
pub mod dense;
pub mod error;
pub mod hull;
pub mod io;
pub mod point;
pub mod spectrum;
pub mod sum2squares;

pub use error::{Error, Result};

/// Caps rayon's worker count from the `MULTLAB_THREADS` environment
/// variable. Exhaustive sweeps partition their ranges deterministically,
/// so results do not depend on the cap.
pub fn configure_threads() {
    if let Ok(v) = std::env::var("MULTLAB_THREADS") {
        if let Ok(threads) = v.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.max(1))
                .build_global();
        }
    }
}
