//! Two rows of the unit hexagonal lattice: pairwise distinct distance
//! multiplicities without being the staircase.
//!
//! For odd n = 2k+1 the multiplicities are mu(1) = 4k-1, mu(j) = 2(k-j)+1
//! for the integer distances and mu(sqrt(j^2+j+1)) = 2(k-j) for the
//! irrational ones. The strip is checked exactly through half-step
//! bookkeeping: 4 dist^2 = (dx in half-steps)^2 + 3 (row difference)^2 is
//! an integer key.
//!
//! Run with: cargo run --example hex_two_row

use multlab::claims::hex_formulas_hold;
use multlab::constructions::{hex_two_row, hex_two_row_spectrum};
use multlab::spectrum::distance_spectrum;

fn main() -> multlab::Result<()> {
    let n = 9;
    let k = (n - 1) / 2;
    let classes = hex_two_row_spectrum(n);
    println!("hex strip n = {n} (k = {k}), exact classes (4*d^2, mu):");
    for (key4, mu) in &classes {
        println!("  4 d^2 = {key4}: {mu}");
    }
    let mults: Vec<u64> = classes.iter().map(|&(_, m)| m).collect();
    println!("a(X) = {mults:?}  (staircase would be [8, 7, ..., 1])");

    // The floating-point route agrees with the integer bookkeeping.
    let float_set = hex_two_row(n)?.set;
    let audited = distance_spectrum(&float_set)?;
    println!(
        "audited float spectrum matches: {}",
        audited.multiplicities() == mults
    );

    // The closed-form check runs at any odd size.
    for n in [9usize, 101, 401, 1001] {
        println!("formulas hold at n = {n}: {}", hex_formulas_hold(n));
    }
    Ok(())
}
