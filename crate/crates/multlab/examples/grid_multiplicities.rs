//! Distance multiplicities of integer grids, computed from lattice
//! vector classes in O(s^2) instead of the O(s^4) pair loop.
//!
//! Run with: cargo run --example grid_multiplicities

use multlab::constructions::exact_eight_check;
use multlab::sum2squares::{
    grid_multiplicity_table, grid_rich_distances, grid_section_ratios, grid_spectrum_bruteforce,
};

fn main() -> multlab::Result<()> {
    // Dual routes agree.
    let s = 24;
    assert_eq!(grid_multiplicity_table(s), grid_spectrum_bruteforce(s));
    println!("vector-class table == pair loop at s = {s}");

    // Rich distances: classes with multiplicity at least 2n.
    for s in [20usize, 100, 500, 1000] {
        let n = (s * s) as u64;
        let rich = grid_rich_distances(s, 2 * n);
        println!(
            "s = {s}: m = {} classes, {} with multiplicity >= 2n; top {:?}",
            rich.m,
            rich.rich_count,
            &rich.top[..rich.top.len().min(3)]
        );
    }

    // Subgrid classes measured in the full grid: every class with a
    // generic lattice vector clears 9n/4; classes realized only by
    // diagonal vectors fall short and are listed explicitly.
    let report = grid_section_ratios(24, 4)?;
    println!(
        "24x24 grid / 6x6 sections: threshold {}, generic classes all meet: {}",
        report.threshold, report.generic_all_meet
    );
    println!(
        "diagonal-only shortfalls (squared distance, count): {:?}",
        report.diagonal_shortfalls
    );

    // The two distances that appear exactly 8 times in a k x k grid.
    for k in [4u64, 10, 25] {
        let r = exact_eight_check(k)?;
        println!(
            "k = {k}: squared keys ({}, {}) appear ({}, {}) times",
            r.long_key, r.diag_key, r.long_count, r.diag_count
        );
    }
    Ok(())
}
