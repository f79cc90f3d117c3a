//! Distance-multiplicity spectra in both coordinate modes.
//!
//! Run with: cargo run --example spectrum_basics

use multlab::constructions::grid_section;
use multlab::io;
use multlab::point::{AnySet, ApproxPoint, ApproxSet};
use multlab::spectrum::{distance_spectrum, distance_spectrum_approx};

fn main() -> multlab::Result<()> {
    // Exact mode: the 4x4 integer grid. Keys are exact squared distances.
    let grid = grid_section(4, 4)?.set;
    let spectrum = distance_spectrum(&grid)?;
    println!("{}", io::spectrum_to_text(&grid, &spectrum));

    // The two classes that occur exactly eight times in this grid.
    for key in [13i64, 8] {
        let mu = spectrum.multiplicity_of(&multlab::point::Key::from_int(key))?;
        println!("multiplicity of squared distance {key}: {mu}");
    }

    // Approximate mode: a regular pentagon. Class identity comes from the
    // audited clustering; the audit line is part of the report.
    let pts: Vec<ApproxPoint> = (0..5)
        .map(|i| {
            let a = std::f64::consts::TAU * i as f64 / 5.0;
            ApproxPoint::new(a.cos(), a.sin())
        })
        .collect();
    let pentagon = AnySet::Approx(ApproxSet::new(pts, "regular pentagon")?);
    let spectrum = distance_spectrum(&pentagon)?;
    println!("{}", io::spectrum_to_text(&pentagon, &spectrum));

    // Point sets round-trip through the text format.
    let text = io::format_point_set(&grid);
    let reread = io::parse_point_set(&text)?;
    let again = distance_spectrum(&reread)?;
    println!(
        "file round trip preserves the spectrum: {}",
        again.rows() == distance_spectrum(&grid)?.rows()
    );
    Ok(())
}
