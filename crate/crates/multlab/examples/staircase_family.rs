//! Sets whose spectrum is the full staircase (n-1, n-2, ..., 1).
//!
//! Equidistant points on a line or along a circular arc realize it, and
//! so does an arc of fewer than 60 degrees together with its center --
//! a staircase set that lies on no single line or circle.
//!
//! Run with: cargo run --example staircase_family

use multlab::claims::verify_staircase;
use multlab::constructions::{arc_with_center, equidistant_circle, equidistant_line};
use multlab::spectrum::distance_spectrum;

fn main() -> multlab::Result<()> {
    let n = 7;
    let angle = 50.0_f64.to_radians();

    for result in [
        equidistant_line(n)?,
        equidistant_circle(n)?,
        arc_with_center(n, angle)?,
    ] {
        let spectrum = distance_spectrum(&result.set)?;
        let report = verify_staircase(&result.set)?;
        println!(
            "{}: a(X) = {:?}\n  staircase {}, collinear {}, cocircular {}",
            result.set.label(),
            spectrum.multiplicities(),
            report.full_staircase,
            report.collinear,
            report.cocircular,
        );
    }

    // The arc-with-center family works at every size.
    for n in [20, 100, 200] {
        let arc = arc_with_center(n, angle)?;
        let ok = distance_spectrum(&arc.set)?.is_full_staircase();
        println!("arc-with-center(n={n}): staircase = {ok}");
    }
    Ok(())
}
