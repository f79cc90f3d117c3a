//! Command-line surface: generators, analyzers and the claim verifier.
//!
//! Exit codes: 0 all good, 1 some exactly-checkable claim failed, 2 usage
//! or input error.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::claims::{self, ClaimParams, Verdict};
use crate::constructions::{self, ConstructionResult};
use crate::error::Result;
use crate::hull;
use crate::io;
use crate::point::AnySet;
use crate::spectrum::distance_spectrum;
use crate::{cascade, sum2squares};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "multlab",
    version,
    about = "Distance-multiplicity laboratory for planar point sets"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a construction as a point-set file plus expected facts.
    Generate {
        #[command(subcommand)]
        which: Generate,
    },
    /// Distance-multiplicity spectrum of a point-set file.
    Spectrum {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Override the file's coordinate mode before analysis.
        #[arg(long)]
        mode: Option<String>,
    },
    /// Onion decomposition of a point-set file.
    Layers {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        mode: Option<String>,
    },
    /// Unordered two-square representations of n.
    R2 {
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Product of the k smallest primes 1 mod 4 and its rich subsets.
    LemmaMany {
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Distance classes of the s x s grid reaching a multiplicity threshold.
    GridRich {
        s: usize,
        threshold: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Subgrid distance classes measured in the full grid.
    GridRatios {
        s: usize,
        divisor: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run claim verifiers (ids or aliases; empty means all).
    Verify {
        claims: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        s: Option<u64>,
        #[arg(long)]
        rounds: Option<u64>,
        #[arg(long)]
        threshold: Option<u64>,
        #[arg(long)]
        divisor: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct GenOut {
    /// Point-set file destination (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Expected-facts destination (defaults to `<out>.expected.json`).
    #[arg(long)]
    expected: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Generate {
    RegularNgon {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        dest: GenOut,
    },
    NgonMinusVertex {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        dest: GenOut,
    },
    EquidistantLine {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        dest: GenOut,
    },
    EquidistantCircle {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        dest: GenOut,
    },
    ArcWithCenter {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 50.0)]
        angle_degrees: f64,
        #[command(flatten)]
        dest: GenOut,
    },
    ThreeGroup {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        dest: GenOut,
    },
    Grid {
        #[arg(long)]
        w: usize,
        #[arg(long)]
        h: usize,
        #[command(flatten)]
        dest: GenOut,
    },
    TranslateCascade {
        #[arg(long)]
        rounds: usize,
        /// Comma-separated prescribed lengths, cycled over the rounds.
        #[arg(long, default_value = "1.0")]
        distances: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        retry_budget: usize,
        #[command(flatten)]
        dest: GenOut,
    },
    HexTwoRow {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        dest: GenOut,
    },
}

fn emit(path: &Option<PathBuf>, content: &str) -> Result<()> {
    match path {
        Some(p) => {
            std::fs::write(p, content)?;
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn emit_construction(result: &ConstructionResult, dest: &GenOut) -> Result<()> {
    emit(&dest.out, &io::format_point_set(&result.set))?;
    let facts = serde_json::to_string_pretty(&io::expected_facts_to_json(&result.facts))?;
    match (&dest.expected, &dest.out) {
        (Some(p), _) => std::fs::write(p, facts)?,
        (None, Some(out)) => {
            let mut p = out.clone();
            p.set_extension("expected.json");
            std::fs::write(p, facts)?;
        }
        (None, None) => {} // stdout mode: points only
    }
    Ok(())
}

fn load_set(input: &Path, mode: &Option<String>) -> Result<AnySet> {
    let set = io::read_point_set(input)?;
    match mode {
        Some(m) => set.to_mode(m),
        None => Ok(set),
    }
}

fn run_command(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Generate { which } => {
            let result = match which {
                Generate::RegularNgon { n, dest } => {
                    let r = constructions::regular_ngon(n)?;
                    emit_construction(&r, &dest)?;
                    r
                }
                Generate::NgonMinusVertex { n, dest } => {
                    let r = constructions::ngon_minus_vertex(n)?;
                    emit_construction(&r, &dest)?;
                    r
                }
                Generate::EquidistantLine { n, dest } => {
                    let r = constructions::equidistant_line(n)?;
                    emit_construction(&r, &dest)?;
                    r
                }
                Generate::EquidistantCircle { n, dest } => {
                    let r = constructions::equidistant_circle(n)?;
                    emit_construction(&r, &dest)?;
                    r
                }
                Generate::ArcWithCenter {
                    n,
                    angle_degrees,
                    dest,
                } => {
                    let r = constructions::arc_with_center(
                        n,
                        angle_degrees.to_radians(),
                    )?;
                    emit_construction(&r, &dest)?;
                    r
                }
                Generate::ThreeGroup { m, n, dest } => {
                    let r = constructions::three_group(m, n)?;
                    emit_construction(&r, &dest)?;
                    r
                }
                Generate::Grid { w, h, dest } => {
                    let r = constructions::grid_section(w, h)?;
                    emit_construction(&r, &dest)?;
                    r
                }
                Generate::TranslateCascade {
                    rounds,
                    distances,
                    seed,
                    retry_budget,
                    dest,
                } => {
                    let prescribed: Vec<f64> = distances
                        .split(',')
                        .map(|t| {
                            t.trim().parse::<f64>().map_err(|_| {
                                crate::error::Error::Parse(format!("bad length `{t}`"))
                            })
                        })
                        .collect::<Result<_>>()?;
                    let mut spec = cascade::CascadeSpec::new(prescribed, rounds, seed);
                    spec.retry_budget = retry_budget;
                    let run = cascade::translate_cascade(&spec)?;
                    emit_construction(&run.result, &dest)?;
                    run.result
                }
                Generate::HexTwoRow { n, dest } => {
                    let r = constructions::hex_two_row(n)?;
                    emit_construction(&r, &dest)?;
                    r
                }
            };
            eprintln!(
                "generated {} ({} points, {} expected facts)",
                result.set.label(),
                result.set.len(),
                result.facts.len()
            );
            Ok(0)
        }
        Command::Spectrum {
            input,
            out,
            format,
            mode,
        } => {
            let set = load_set(&input, &mode)?;
            let spectrum = distance_spectrum(&set)?;
            let rendered = match format {
                Format::Text => io::spectrum_to_text(&set, &spectrum),
                Format::Json => {
                    serde_json::to_string_pretty(&io::spectrum_to_json(&set, &spectrum))? + "\n"
                }
                Format::Csv => io::spectrum_to_csv(&spectrum),
            };
            emit(&out, &rendered)?;
            Ok(0)
        }
        Command::Layers {
            input,
            out,
            format,
            mode,
        } => {
            let set = load_set(&input, &mode)?;
            let layers = match &set {
                AnySet::Exact(s) => hull::onion_layers(s),
                AnySet::Approx(s) => hull::onion_layers(s),
            };
            let rendered = match format {
                Format::Text => io::layers_to_text(&set, &layers),
                Format::Json => {
                    serde_json::to_string_pretty(&io::layers_to_json(&set, &layers))? + "\n"
                }
                Format::Csv => {
                    let mut s = String::from("layer,point_index\n");
                    for (i, layer) in layers.layers.iter().enumerate() {
                        for p in layer {
                            s.push_str(&format!("{},{p}\n", i + 1));
                        }
                    }
                    s
                }
            };
            emit(&out, &rendered)?;
            Ok(0)
        }
        Command::R2 { n, format } => {
            let report = sum2squares::count_representations(n);
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Csv => {
                    println!("a,b");
                    for (a, b) in report.reps.iter().flatten() {
                        println!("{a},{b}");
                    }
                }
                Format::Text => {
                    println!("R({n}) = {}", report.count);
                    if let Some(reps) = &report.reps {
                        for (a, b) in reps {
                            println!("  {n} = {a}^2 + {b}^2");
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::LemmaMany { k, format } => {
            let c = sum2squares::lemma_many_construct(k)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&c)?),
                _ => {
                    println!(
                        "k = {k}: product of {:?} = {}",
                        c.primes, c.product
                    );
                    println!(
                        "subsets with |K'| >= k/2: {} (2^(k-1) = {})",
                        c.subsets_at_least_half, c.half_power
                    );
                    for s in c.subsets.iter().take(12) {
                        println!(
                            "  {:?}: n' = {}, unordered R = {} ({}), gaussian = {} ({})",
                            s.primes,
                            s.product,
                            s.unordered_count,
                            if s.unordered_meets_bound { "meets 2^(k/2)" } else { "below 2^(k/2), flagged" },
                            s.gaussian_count,
                            if s.gaussian_meets_bound { "meets" } else { "below" },
                        );
                    }
                    if c.subsets.len() > 12 {
                        println!("  ... {} subsets total", c.subsets.len());
                    }
                }
            }
            Ok(0)
        }
        Command::GridRich {
            s,
            threshold,
            format,
        } => {
            let report = sum2squares::grid_rich_distances(s, threshold);
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Csv => {
                    println!("squared_distance,multiplicity");
                    for (q, w) in &report.top {
                        println!("{q},{w}");
                    }
                }
                Format::Text => {
                    println!(
                        "{}x{} grid: m = {} classes, {} at multiplicity >= {}",
                        s, s, report.m, report.rich_count, threshold
                    );
                    for (q, w) in &report.top {
                        println!("  d^2 = {q}: {w}");
                    }
                }
            }
            Ok(0)
        }
        Command::GridRatios { s, divisor, format } => {
            let report = sum2squares::grid_section_ratios(s, divisor)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Csv => {
                    println!("squared_distance,full_multiplicity,meets_threshold,category");
                    for c in &report.classes {
                        println!(
                            "{},{},{},{:?}",
                            c.q, c.full_multiplicity, c.meets_threshold, c.category
                        );
                    }
                }
                Format::Text => {
                    println!(
                        "{}x{} grid, {}x{} sections: threshold {} pairs",
                        s, s, report.subgrid_side, report.subgrid_side, report.threshold
                    );
                    println!(
                        "subgrid classes: {} (full grid: {}); fraction meeting threshold vs m: {:.4}",
                        report.m_small, report.m_full, report.fraction_of_full_m
                    );
                    println!(
                        "all generic-vector classes meet threshold: {}",
                        report.generic_all_meet
                    );
                    if !report.diagonal_shortfalls.is_empty() {
                        println!(
                            "diagonal-only classes below threshold: {:?}",
                            report.diagonal_shortfalls
                        );
                    }
                }
            }
            Ok(0)
        }
        Command::Verify {
            claims: selection,
            seed,
            k,
            m,
            n,
            s,
            rounds,
            threshold,
            divisor,
            format,
        } => {
            let params = ClaimParams {
                seed,
                k,
                m,
                n,
                s,
                rounds,
                threshold,
                divisor,
            };
            let tokens: Vec<String> = selection
                .into_iter()
                .filter(|t| t != "all")
                .collect();
            let reports = claims::verify_all(&tokens, &params)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&reports)?),
                Format::Csv => {
                    println!("claim_id,verdict");
                    for r in &reports {
                        println!("{},{:?}", r.claim_id, r.verdict);
                    }
                }
                Format::Text => {
                    for r in &reports {
                        let tag = match r.verdict {
                            Verdict::Pass => "PASS",
                            Verdict::Fail => "FAIL",
                            Verdict::Reported => "REPORTED",
                        };
                        println!("{:<18} {}", r.claim_id, tag);
                        if r.verdict == Verdict::Fail {
                            println!("{}", serde_json::to_string_pretty(&r.evidence)?);
                        }
                    }
                }
            }
            Ok(if reports.iter().any(|r| r.failed()) { 1 } else { 0 })
        }
    }
}

/// Parses argv and runs; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match run_command(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
