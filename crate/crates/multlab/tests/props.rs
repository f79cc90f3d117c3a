//! Property tests: spectrum conservation laws, isometry invariance, and
//! the degree bounds that hold for every planar set.

mod common;

use multlab::constructions;
use multlab::hull;
use multlab::point::{AnySet, ExactPoint, ExactSet};
use multlab::spectrum::{distance_spectrum, distance_spectrum_exact};
use multlab::sum2squares;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Strategy: a small exact point set with rational coordinates, duplicates
/// removed.
fn exact_set_strategy(max_n: usize) -> impl Strategy<Value = ExactSet> {
    prop::collection::vec(((-60i64..=60, 1i64..=8), (-60i64..=60, 1i64..=8)), 2..max_n).prop_map(
        |coords| {
            let mut seen = std::collections::BTreeSet::new();
            let mut pts = Vec::new();
            for ((nx, dx), (ny, dy)) in coords {
                let p = ExactPoint::new(rat(nx, dx), rat(ny, dy));
                if seen.insert(p.clone()) {
                    pts.push(p);
                }
            }
            if pts.len() < 2 {
                pts = vec![ExactPoint::from_ints(0, 0), ExactPoint::from_ints(1, 0)];
            }
            ExactSet::new(pts, "prop").unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplicities_partition_all_pairs(set in exact_set_strategy(40)) {
        let s = distance_spectrum_exact(&set).unwrap();
        let n = set.len() as u64;
        let total: u64 = s.multiplicities().iter().sum();
        prop_assert_eq!(total, n * (n - 1) / 2);
        prop_assert!(s.class_count() as u64 <= n * (n - 1) / 2);
        let mults = s.multiplicities();
        prop_assert!(mults.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn spectrum_agrees_with_pair_oracle(set in exact_set_strategy(30)) {
        let (_, ok) = common::spectrum_matches_oracle(&AnySet::Exact(set));
        prop_assert!(ok);
    }

    #[test]
    fn isometries_preserve_the_spectrum(set in exact_set_strategy(25),
                                        tx in -40i64..=40, ty in -40i64..=40) {
        let s0 = distance_spectrum_exact(&set).unwrap();
        // Translation by (tx, ty) and rotation by the (3,4,5) angle:
        // both are exact rational isometries.
        let (c, s) = (rat(3, 5), rat(4, 5));
        let moved: Vec<ExactPoint> = set
            .points()
            .iter()
            .map(|p| {
                let x = &p.x + rat(tx, 1);
                let y = &p.y + rat(ty, 1);
                ExactPoint::new(&c * &x - &s * &y, &s * &x + &c * &y)
            })
            .collect();
        let moved = ExactSet::new(moved, "moved").unwrap();
        let s1 = distance_spectrum_exact(&moved).unwrap();
        let keys0: Vec<_> = s0.classes().iter().map(|c| (c.key.clone(), c.multiplicity)).collect();
        let keys1: Vec<_> = s1.classes().iter().map(|c| (c.key.clone(), c.multiplicity)).collect();
        prop_assert_eq!(keys0, keys1);
    }

    #[test]
    fn scaling_scales_keys_quadratically(set in exact_set_strategy(20),
                                         num in 1i64..=6, den in 1i64..=6) {
        let lambda = rat(num, den);
        let s0 = distance_spectrum_exact(&set).unwrap();
        let scaled: Vec<ExactPoint> = set
            .points()
            .iter()
            .map(|p| ExactPoint::new(&p.x * &lambda, &p.y * &lambda))
            .collect();
        let scaled = ExactSet::new(scaled, "scaled").unwrap();
        let s1 = distance_spectrum_exact(&scaled).unwrap();
        prop_assert_eq!(s0.multiplicities(), s1.multiplicities());
        let lam2 = &lambda * &lambda;
        for (c0, c1) in s0.classes().iter().zip(s1.classes()) {
            prop_assert_eq!(&c0.key * &lam2, c1.key.clone());
        }
    }

    #[test]
    fn extreme_multiplicity_bounds(set in exact_set_strategy(40)) {
        // Diameter at most n times; second-largest at most 3n/2 times.
        let s = distance_spectrum_exact(&set).unwrap();
        let n = set.len() as u64;
        let diam = s.class_by_key_rank(0).unwrap().multiplicity;
        prop_assert!(diam <= n);
        if let Some(second) = s.class_by_key_rank(1) {
            prop_assert!(2 * second.multiplicity <= 3 * n);
        }
    }

    #[test]
    fn onion_layers_partition(set in exact_set_strategy(40)) {
        let layers = hull::onion_layers(&set);
        let mut seen = vec![false; set.len()];
        for layer in &layers.layers {
            for &i in layer {
                prop_assert!(!seen[i]);
                seen[i] = true;
            }
        }
        prop_assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn dense_layer_bound_holds(set in exact_set_strategy(40)) {
        match multlab::dense::check_dense_theorem_exact(&set) {
            Ok(r) => {
                prop_assert!(r.holds);
                prop_assert!(r.observations.all_hold());
                prop_assert!(r.graph_consistent);
            }
            Err(multlab::Error::NoSecondDistance) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn representation_formula_matches_enumeration(n in 0u64..=200_000) {
        prop_assert_eq!(
            sum2squares::representation_count(n),
            sum2squares::brute_force_representations(n).count
        );
    }

    #[test]
    fn point_file_round_trip(set in exact_set_strategy(25)) {
        let any = AnySet::Exact(set);
        let text = multlab::io::format_point_set(&any);
        let back = multlab::io::parse_point_set(&text).unwrap();
        let s0 = distance_spectrum(&any).unwrap();
        let s1 = distance_spectrum(&back).unwrap();
        prop_assert_eq!(s0.rows(), s1.rows());
    }

    #[test]
    fn hex_strip_multiplicities_distinct(n in 2usize..=200) {
        let classes = constructions::hex_two_row_spectrum(n);
        let mults: Vec<u64> = classes.iter().map(|&(_, m)| m).collect();
        prop_assert!(mults.windows(2).all(|w| w[0] != w[1]));
        let total: u64 = mults.iter().sum();
        prop_assert_eq!(total, (n * (n - 1) / 2) as u64);
    }
}
