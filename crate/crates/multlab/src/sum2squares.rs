//! Sums of two squares and grid distance multiplicities.
//!
//! `R(n)` counts unordered representations n = a^2 + b^2 with
//! 0 <= a <= b. The closed form comes from the divisor structure of n
//! (zero when a prime 3 mod 4 divides n to an odd power, otherwise the
//! product of (e+1) over primes 1 mod 4, adjusted for square and
//! twice-square n); an exhaustive enumeration serves as the independent
//! oracle. The grid half computes distance multiplicities of the s x s
//! integer grid from lattice-vector classes in O(s^2) instead of o pair
//! loop's O(s^4).

use serde::Serialize;

use crate::error::{Error, Result};

/// Enumeration ceiling for explicit representation lists.
pub const BRUTE_LIMIT: u64 = 1_000_000_000;

// ---------------------------------------------------------------------------
// 64-bit primality and factorization
// ---------------------------------------------------------------------------

pub fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x > 0 && (x as u128) * (x as u128) > n as u128 {
        x -= 1;
    }
    while ((x + 1) as u128) * ((x + 1) as u128) <= n as u128 {
        x += 1;
    }
    x
}

pub fn is_perfect_square(n: u64) -> bool {
    let r = isqrt(n);
    r * r == n
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the 12-base set decides all 64-bit
/// inputs).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Pollard rho with Brent cycle detection; `n` must be odd, composite and
/// free of tiny factors.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut x = 2u64;
        let mut y = 2u64;
        let mut d = 1u64;
        let mut count = 0u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = gcd(x.abs_diff(y), n);
            count += 1;
            if count > 1 << 24 {
                break;
            }
        }
        if d != n && d != 1 {
            return d;
        }
        c += 1;
    }
}

/// Residue class of an odd prime modulo 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Mod4 {
    Two,
    One,
    Three,
}

pub fn mod4_class(p: u64) -> Mod4 {
    if p == 2 {
        Mod4::Two
    } else if p % 4 == 1 {
        Mod4::One
    } else {
        Mod4::Three
    }
}

/// Prime factorization with residue classes.
#[derive(Clone, Debug, Serialize)]
pub struct Factorization {
    pub n: u64,
    /// (prime, exponent), primes ascending.
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn classes(&self) -> Vec<(u64, u32, Mod4)> {
        self.factors
            .iter()
            .map(|&(p, e)| (p, e, mod4_class(p)))
            .collect()
    }
}

/// Complete factorization: trial division below 10^3, then recursive
/// rho splitting with Miller-Rabin certificates.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut rest = n;
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let push = |p: u64, e: u32, factors: &mut Vec<(u64, u32)>| {
        if e > 0 {
            factors.push((p, e));
        }
    };
    for p in 2u64.. {
        if p > 1000 || p * p > rest {
            break;
        }
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        push(p, e, &mut factors);
    }
    if rest > 1 {
        let mut stack = vec![rest];
        let mut found: Vec<u64> = Vec::new();
        while let Some(m) = stack.pop() {
            if is_prime(m) {
                found.push(m);
            } else {
                let d = pollard_rho(m);
                stack.push(d);
                stack.push(m / d);
            }
        }
        found.sort_unstable();
        let mut i = 0;
        while i < found.len() {
            let p = found[i];
            let mut e = 0;
            while i < found.len() && found[i] == p {
                e += 1;
                i += 1;
            }
            factors.push((p, e));
        }
    }
    factors.sort_unstable();
    Factorization { n, factors }
}

/// The unique decomposition p = a^2 + b^2 with 0 < a < b for a prime
/// p = 1 (mod 4), by Hermite-Serret descent from a square root of -1.
pub fn prime_two_squares(p: u64) -> Result<(u64, u64)> {
    if !is_prime(p) || p % 4 != 1 {
        return Err(Error::NotApplicable(format!(
            "{p} is not a prime congruent to 1 mod 4"
        )));
    }
    let mut root = 0u64;
    for a in 2u64.. {
        if pow_mod(a, (p - 1) / 2, p) == p - 1 {
            root = pow_mod(a, (p - 1) / 4, p);
            break;
        }
    }
    debug_assert_eq!(mul_mod(root, root, p), p - 1);
    let mut a = p;
    let mut b = root;
    while (b as u128) * (b as u128) > p as u128 {
        let t = a % b;
        a = b;
        b = t;
    }
    let x = b;
    let y2 = p - x * x;
    let y = isqrt(y2);
    debug_assert_eq!(y * y, y2);
    Ok((x.min(y), x.max(y)))
}

// ---------------------------------------------------------------------------
// Representation counts
// ---------------------------------------------------------------------------

/// Representation count and (when enumerated) the explicit list.
#[derive(Clone, Debug, Serialize)]
pub struct Sum2SquaresReport {
    pub n: u64,
    /// R(n): unordered representations with 0 <= a <= b.
    pub count: u64,
    /// Explicit pairs (a, b); populated below [`BRUTE_LIMIT`].
    pub reps: Option<Vec<(u64, u64)>>,
}

/// R(n) via the divisor formula on the factorization.
pub fn representation_count(n: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    representation_count_from(&factorize(n))
}

pub fn representation_count_from(f: &Factorization) -> u64 {
    let n = f.n;
    if n == 0 {
        return 1;
    }
    let mut prod: u64 = 1;
    for &(p, e) in &f.factors {
        match mod4_class(p) {
            Mod4::One => prod *= (e + 1) as u64,
            Mod4::Three => {
                if e % 2 == 1 {
                    return 0;
                }
            }
            Mod4::Two => {}
        }
    }
    let square = is_perfect_square(n) as u64;
    let twice_square = (n % 2 == 0 && is_perfect_square(n / 2)) as u64;
    (prod + square + twice_square) / 2
}

/// Exhaustive ground truth: loop a = 0..sqrt(n/2).
pub fn brute_force_representations(n: u64) -> Sum2SquaresReport {
    let mut reps = Vec::new();
    if n == 0 {
        reps.push((0, 0));
    } else {
        let mut a = 0u64;
        while 2 * a * a <= n {
            let rem = n - a * a;
            let b = isqrt(rem);
            if b * b == rem {
                reps.push((a, b));
            }
            a += 1;
        }
    }
    Sum2SquaresReport {
        n,
        count: reps.len() as u64,
        reps: Some(reps),
    }
}

/// R(n) by formula, with the explicit list attached when enumeration is
/// feasible. The two routes must agree; a mismatch is a bug.
pub fn count_representations(n: u64) -> Sum2SquaresReport {
    let count = representation_count(n);
    let reps = if n <= BRUTE_LIMIT {
        let brute = brute_force_representations(n);
        debug_assert_eq!(brute.count, count, "formula vs enumeration at n={n}");
        brute.reps
    } else {
        None
    };
    Sum2SquaresReport { n, count, reps }
}

// ---------------------------------------------------------------------------
// Products of small primes 1 mod 4 and their rich subsets
// ---------------------------------------------------------------------------

/// The k smallest primes congruent to 1 mod 4.
pub fn primes_one_mod_four(k: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(k);
    let mut candidate = 5u64;
    while out.len() < k {
        if candidate % 4 == 1 && is_prime(candidate) {
            out.push(candidate);
        }
        candidate += 2;
    }
    out
}

/// One subset K' of the prime index set with |K'| >= k/2.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaSubset {
    pub primes: Vec<u64>,
    pub product: u128,
    /// R(n') for the square-free product: 2^(|K'|-1) unordered pairs.
    pub unordered_count: u128,
    /// Gaussian-divisor count 2^(|K'|): representations with signed,
    /// ordered legs collapsed by units only.
    pub gaussian_count: u128,
    /// Does the unordered count reach 2^(k/2)? (Exact test 2(|K'|-1) >= k.)
    pub unordered_meets_bound: bool,
    /// Does the Gaussian count reach 2^(k/2)? (Exact test 2|K'| >= k.)
    pub gaussian_meets_bound: bool,
}

/// Product of the k smallest primes 1 mod 4, its two-square legs, and all
/// subsets of cardinality at least k/2 with their representation counts.
#[derive(Clone, Debug, Serialize)]
pub struct LemmaConstruction {
    pub k: usize,
    pub primes: Vec<u64>,
    /// legs[j] = (a, b) with primes[j] = a^2 + b^2.
    pub legs: Vec<(u64, u64)>,
    pub product: u128,
    /// Exact number of subsets with |K'| >= k/2.
    pub subsets_at_least_half: u64,
    /// 2^(k-1): exact for odd k; for even k the true count exceeds it by
    /// C(k, k/2)/2.
    pub half_power: u64,
    pub subsets: Vec<LemmaSubset>,
    /// Indices into `subsets` where the unordered count misses 2^(k/2).
    pub flagged: Vec<usize>,
}

pub fn lemma_many_construct(k: usize) -> Result<LemmaConstruction> {
    if k == 0 || k > 15 {
        return Err(Error::RangeExceeded(format!(
            "k = {k}; the prime product fits the integer range only for 1 <= k <= 15"
        )));
    }
    let primes = primes_one_mod_four(k);
    let legs: Vec<(u64, u64)> = primes
        .iter()
        .map(|&p| prime_two_squares(p))
        .collect::<Result<_>>()?;
    let product: u128 = primes.iter().map(|&p| p as u128).product();

    let min_card = k.div_ceil(2);
    let mut subsets = Vec::new();
    let mut flagged = Vec::new();
    for mask in 1u32..(1 << k) {
        let card = mask.count_ones() as usize;
        if card < min_card {
            continue;
        }
        let chosen: Vec<u64> = (0..k).filter(|j| mask >> j & 1 == 1).map(|j| primes[j]).collect();
        let sub_product: u128 = chosen.iter().map(|&p| p as u128).product();
        let unordered_count = 1u128 << (card - 1);
        let gaussian_count = 1u128 << card;
        let unordered_meets_bound = 2 * (card - 1) >= k;
        let gaussian_meets_bound = 2 * card >= k;
        if !unordered_meets_bound {
            flagged.push(subsets.len());
        }
        subsets.push(LemmaSubset {
            primes: chosen,
            product: sub_product,
            unordered_count,
            gaussian_count,
            unordered_meets_bound,
            gaussian_meets_bound,
        });
    }
    let subsets_at_least_half = subsets.len() as u64;
    Ok(LemmaConstruction {
        k,
        primes,
        legs,
        product,
        subsets_at_least_half,
        half_power: 1 << (k - 1),
        subsets,
        flagged,
    })
}

// ---------------------------------------------------------------------------
// Grid distance multiplicities
// ---------------------------------------------------------------------------

/// Multiplicity table of the s x s grid: entry q holds the number of
/// unordered point pairs at squared distance q. Computed from lattice
/// vector classes: a representation q = a^2 + b^2 with 0 <= a <= b
/// contributes
///   2 s (s - b)          if a = 0 (two axis-parallel vector classes),
///   2 (s - a)^2          if a = b (two diagonal classes),
///   4 (s - a)(s - b)     otherwise (four classes).
pub fn grid_multiplicity_table(s: usize) -> Vec<u64> {
    assert!(s >= 1);
    let s64 = s as u64;
    let mut table = vec![0u64; 2 * (s - 1) * (s - 1) + 1];
    for a in 0..s as u64 {
        for b in a..s as u64 {
            if a == 0 && b == 0 {
                continue;
            }
            let q = (a * a + b * b) as usize;
            let w = if a == 0 {
                2 * s64 * (s64 - b)
            } else if a == b {
                2 * (s64 - a) * (s64 - a)
            } else {
                4 * (s64 - a) * (s64 - b)
            };
            table[q] += w;
        }
    }
    table
}

/// Pair-loop oracle for the same table; O(s^4).
pub fn grid_spectrum_bruteforce(s: usize) -> Vec<u64> {
    assert!(s >= 1);
    let mut table = vec![0u64; 2 * (s - 1) * (s - 1) + 1];
    let pts: Vec<(i64, i64)> = (0..s as i64)
        .flat_map(|x| (0..s as i64).map(move |y| (x, y)))
        .collect();
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let dx = pts[i].0 - pts[j].0;
            let dy = pts[i].1 - pts[j].1;
            table[(dx * dx + dy * dy) as usize] += 1;
        }
    }
    table
}

/// Classes of the s x s grid with multiplicity at least `threshold`.
#[derive(Clone, Debug, Serialize)]
pub struct GridRichReport {
    pub s: usize,
    pub n: u64,
    /// Number of distinct distances in the grid.
    pub m: u64,
    pub threshold: u64,
    pub rich_count: u64,
    /// The most multiplied classes, as (squared distance, multiplicity).
    pub top: Vec<(u64, u64)>,
}

pub fn grid_rich_distances(s: usize, threshold: u64) -> GridRichReport {
    let table = grid_multiplicity_table(s);
    let mut m = 0u64;
    let mut rich_count = 0u64;
    let mut top: Vec<(u64, u64)> = Vec::new();
    for (q, &w) in table.iter().enumerate() {
        if w == 0 {
            continue;
        }
        m += 1;
        if w >= threshold {
            rich_count += 1;
        }
        top.push((q as u64, w));
    }
    top.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    top.truncate(10);
    GridRichReport {
        s,
        n: (s * s) as u64,
        m,
        threshold,
        rich_count,
        top,
    }
}

/// How a subgrid distance class is realized by lattice vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VectorCategory {
    /// Only (0, b)-type vectors.
    AxisOnly,
    /// Only (a, a)-type vectors.
    DiagonalOnly,
    /// Has a vector with 0 < a < b.
    Generic,
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionClass {
    pub q: u64,
    pub full_multiplicity: u64,
    pub meets_threshold: bool,
    pub category: VectorCategory,
}

/// Distances of the (s/divisor) x (s/divisor) subgrid, checked against the
/// full grid at threshold 4 (divisor-1)^2 k^2 (= 16n/9, 9n/4, 64n/25 for
/// divisors 3, 4, 5).
#[derive(Clone, Debug, Serialize)]
pub struct SectionRatioReport {
    pub s: usize,
    pub divisor: usize,
    pub n: u64,
    pub subgrid_side: usize,
    pub threshold: u64,
    pub classes: Vec<SectionClass>,
    /// Distinct distances in the subgrid resp. the full grid.
    pub m_small: u64,
    pub m_full: u64,
    /// Non-axis subgrid classes meeting the threshold, relative to m_full.
    pub fraction_of_full_m: f64,
    /// Every class with a generic vector meets the threshold (the content
    /// of the sliding-segment count).
    pub generic_all_meet: bool,
    /// Diagonal-only classes that miss the threshold, with their counts.
    pub diagonal_shortfalls: Vec<(u64, u64)>,
}

pub fn grid_section_ratios(s: usize, divisor: usize) -> Result<SectionRatioReport> {
    if !matches!(divisor, 3 | 4 | 5) {
        return Err(Error::Parse(format!(
            "divisor must be 3, 4 or 5, got {divisor}"
        )));
    }
    if s % divisor != 0 {
        return Err(Error::DivisibilityError {
            value: s as u64,
            divisor: divisor as u64,
        });
    }
    let k = s / divisor;
    let n = (s * s) as u64;
    let threshold = 4 * ((divisor - 1) * (divisor - 1)) as u64 * (k * k) as u64;
    let full = grid_multiplicity_table(s);
    let small = grid_multiplicity_table(k.max(1));

    let m_full = full.iter().filter(|&&w| w > 0).count() as u64;
    let m_small = small.iter().filter(|&&w| w > 0).count() as u64;

    let mut classes = Vec::new();
    let mut generic_all_meet = true;
    let mut diagonal_shortfalls = Vec::new();
    let mut meeting_non_axis = 0u64;
    for (q, &w) in small.iter().enumerate() {
        if w == 0 {
            continue;
        }
        let q64 = q as u64;
        let mut has_generic = false;
        let mut has_diag = false;
        let mut a = 0u64;
        while 2 * a * a <= q64 {
            let rem = q64 - a * a;
            let b = isqrt(rem);
            if b * b == rem {
                if a == b && a > 0 {
                    has_diag = true;
                } else if a > 0 {
                    has_generic = true;
                }
            }
            a += 1;
        }
        let category = if has_generic {
            VectorCategory::Generic
        } else if has_diag {
            VectorCategory::DiagonalOnly
        } else {
            VectorCategory::AxisOnly
        };
        let full_multiplicity = full[q];
        let meets_threshold = full_multiplicity >= threshold;
        match category {
            VectorCategory::Generic => {
                if !meets_threshold {
                    generic_all_meet = false;
                }
                if meets_threshold {
                    meeting_non_axis += 1;
                }
            }
            VectorCategory::DiagonalOnly => {
                if !meets_threshold {
                    diagonal_shortfalls.push((q64, full_multiplicity));
                } else {
                    meeting_non_axis += 1;
                }
            }
            VectorCategory::AxisOnly => {}
        }
        classes.push(SectionClass {
            q: q64,
            full_multiplicity,
            meets_threshold,
            category,
        });
    }

    Ok(SectionRatioReport {
        s,
        divisor,
        n,
        subgrid_side: k,
        threshold,
        classes,
        m_small,
        m_full,
        fraction_of_full_m: meeting_non_axis as f64 / m_full as f64,
        generic_all_meet,
        diagonal_shortfalls,
    })
}
