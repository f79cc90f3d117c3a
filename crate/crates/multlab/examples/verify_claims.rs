//! Run the whole claim registry and print one verdict per claim.
//!
//! Exactly checkable statements come back pass/fail; asymptotic ones are
//! `reported` with measured evidence. Entries that are deliberately not
//! machine-checked (open problems) are listed with their reason.
//!
//! Run with: cargo run --example verify_claims

use multlab::claims::{verify_all, ClaimParams, Coverage, Verdict, REGISTRY};

fn main() -> multlab::Result<()> {
    let params = ClaimParams::default();
    let reports = verify_all(&[], &params)?;
    for r in &reports {
        let tag = match r.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Reported => "REPORTED",
        };
        println!("{:<20} {tag}", r.claim_id);
    }
    println!();
    for entry in REGISTRY {
        match entry.coverage {
            Coverage::OutOfScope(reason) => {
                println!("{:<20} out of scope: {reason}", entry.id);
            }
            Coverage::CoveredBy(target) => {
                println!("{:<20} covered by {target}", entry.id);
            }
            _ => {}
        }
    }
    Ok(())
}
