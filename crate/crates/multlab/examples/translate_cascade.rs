//! Prescribing the top multiplicities by iterated translation.
//!
//! Doubling a set through a prescribed length in an audited generic
//! direction adds one segment of that length per old point and keeps
//! every other distance fresh. After r rounds cycling over k lengths,
//! each prescribed length has multiplicity (n/2k) log2 n (for k | r)
//! while everything else stays at or below n.
//!
//! Run with: cargo run --example translate_cascade

use multlab::cascade::{expected_multiplicities, translate_cascade, CascadeSpec};
use multlab::claims::verify_cascade;
use multlab::point::AnySet;
use multlab::spectrum::distance_spectrum_approx;

fn main() -> multlab::Result<()> {
    let spec = CascadeSpec::new(vec![1.0, 3.0_f64.sqrt()], 6, 42);
    let run = translate_cascade(&spec)?;
    let AnySet::Approx(ref set) = run.result.set else {
        unreachable!()
    };
    let spectrum = distance_spectrum_approx(set)?;
    let expected = expected_multiplicities(spec.k, spec.rounds);
    println!(
        "cascade k=2, rounds=6: n = {}, {} rejected directions along the way",
        set.len(),
        run.rejections
    );
    for (i, &d) in spec.prescribed.iter().enumerate() {
        println!(
            "  length {d}: multiplicity {} (recurrence value {})",
            spectrum.multiplicity_of(d * d)?,
            expected[i]
        );
    }
    let mults = spectrum.multiplicities();
    println!(
        "  largest non-prescribed multiplicity: {} (n = {})",
        mults.get(2).copied().unwrap_or(0),
        set.len()
    );

    // The claim wrapper re-checks everything and reports pass/fail.
    let report = verify_cascade(&spec)?;
    println!("full check pass: {}", report.pass);
    Ok(())
}
