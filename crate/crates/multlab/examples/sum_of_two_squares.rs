//! Counting n = a^2 + b^2: divisor formula, enumeration oracle, and
//! products of primes 1 mod 4 with many representations.
//!
//! Run with: cargo run --example sum_of_two_squares

use multlab::sum2squares::{
    brute_force_representations, count_representations, factorize, lemma_many_construct,
    prime_two_squares,
};

fn main() -> multlab::Result<()> {
    for n in [25u64, 325, 1105, 3, 2_000_000_011] {
        let report = count_representations(n);
        println!("R({n}) = {}", report.count);
        if let Some(reps) = &report.reps {
            for (a, b) in reps {
                println!("  {n} = {a}^2 + {b}^2");
            }
        }
    }

    // The formula reads the factorization: zero iff some prime 3 mod 4
    // divides n to an odd power.
    let f = factorize(3 * 3 * 5 * 13);
    println!("factorization of 585: {:?}", f.factors);
    println!("R(585) = {}", count_representations(585).count);

    // Each prime 1 mod 4 splits uniquely.
    for p in [5u64, 13, 10_009, 1_000_033] {
        let (a, b) = prime_two_squares(p)?;
        println!("{p} = {a}^2 + {b}^2");
    }

    // Products of the k smallest primes 1 mod 4: every subset with at
    // least k/2 of them yields 2^(|K'|-1) unordered representations.
    let c = lemma_many_construct(4)?;
    println!(
        "k = 4: product {} has {} subsets of size >= 2",
        c.product, c.subsets_at_least_half
    );
    for s in &c.subsets {
        let brute = brute_force_representations(s.product as u64);
        println!(
            "  {:?} -> n' = {}, R = {} (enumeration agrees: {})",
            s.primes,
            s.product,
            s.unordered_count,
            brute.count as u128 == s.unordered_count
        );
    }
    Ok(())
}
