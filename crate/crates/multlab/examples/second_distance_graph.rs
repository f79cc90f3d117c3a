//! The second-largest distance through the first two convex layers.
//!
//! The graph G on L1 and L2 whose edges realize the second-largest
//! distance prunes (repeatedly dropping degree-<2 vertices) to a core G'
//! with very rigid structure; counting its edges bounds the multiplicity
//! by min{ 3/2(|L1|+|L2|), 4/3|L1|+2|L2|, 2|L1|+|L2| }.
//!
//! Run with: cargo run --example second_distance_graph

use multlab::constructions::{grid_section, three_group};
use multlab::dense::{check_dense_theorem, dense_bound, diameter_ratio_corollary};
use multlab::point::AnySet;

fn main() -> multlab::Result<()> {
    // The three-group set keeps its whole graph in the core: the polygon
    // chords form a cycle and every inner chain point has degree 2.
    let tg = three_group(7, 21)?.set;
    let report = check_dense_theorem(&tg)?;
    println!(
        "three-group(7,21): |L1| = {}, |L2| = {}, bound = {}, mu(D2) = {}",
        report.l1, report.l2, report.bound, report.mu2
    );
    println!("  core structure observations: {:#?}", report.observations);
    println!("  bound respected: {}", report.holds);

    // Grids prune to an empty core; the bound is far from tight there.
    let grid = grid_section(10, 10)?.set;
    let report = check_dense_theorem(&grid)?;
    println!(
        "10x10 grid: bound = {}, mu(D2) = {}, holds = {}",
        report.bound, report.mu2, report.holds
    );

    println!("dense_bound(8, 1) = {}", dense_bound(8, 1)); // 38/3

    // Squat sets (diameter small against the minimum distance) always
    // satisfy mu(D2) <= n.
    let squat = grid_section(40, 40)?.set;
    let corollary = diameter_ratio_corollary(&squat)?;
    println!(
        "40x40 grid ratio premise applies: {}, mu(D2) <= n: {:?}",
        corollary.applies, corollary.holds
    );

    let skinny = AnySet::Exact(multlab::constructions::random_convex_set(10, 1)?);
    let corollary = diameter_ratio_corollary(&skinny)?;
    println!(
        "random convex 10-gon premise applies: {}",
        corollary.applies
    );
    Ok(())
}
