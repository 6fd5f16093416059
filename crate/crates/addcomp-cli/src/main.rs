//! Batch CLI wiring construction, complement building, and verification
//! into reproducible runs. Identical configuration yields byte-identical
//! artifacts. Exit codes: 0 ok, 1 verification failed, 2 usage or
//! operational error (parse/cap/precondition/span).

mod svg;

use addcomp::{
    build_blocks, build_sequence, collision_inequality, cover_exact, cover_greedy_with_cap,
    cover_structured, criterion_sweep, criterion_trend, level_ladder, reports_to_csv,
    sumset_coverage, validate_residue_systems, BuildCaps, BuildConfig, ComplementBlocks,
    CoverInstance, Error, GrowthRule, Sequence, DEFAULT_EXACT_CAP, DEFAULT_MODULUS_CAP,
    DEFAULT_SIEVE_CAP, DEFAULT_TERM_CAP,
};
use clap::{Parser, Subcommand, ValueEnum};
use num::BigUint;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(name = "addcomp", version, about = "Thin additive complements: construct and verify")]
struct Cli {
    /// Artifact directory; defaults to $ADDCOMP_SEED_DIR, then ".".
    #[arg(long, global = true)]
    seed_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverMode {
    Exact,
    Greedy,
    Structured,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Build the greedy sequence and write it as JSON.
    Construct {
        /// Completed levels to build.
        #[arg(long)]
        levels: usize,
        /// Extra terms beyond the last completed level.
        #[arg(long, default_value_t = 0)]
        extra: usize,
        /// Growth factor rule.
        #[arg(long, default_value = "linear")]
        growth: String,
        /// Hard cap on generated terms.
        #[arg(long, default_value_t = DEFAULT_TERM_CAP)]
        term_cap: usize,
        /// Output path (default <seed-dir>/seq.json).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build complement blocks from a sequence file.
    Complement {
        /// Number of blocks; defaults to the most the sequence supports.
        #[arg(long)]
        blocks: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        exact_cap: u64,
        /// Extra repair translates allowed in structured covers.
        #[arg(long)]
        extras_cap: Option<usize>,
        /// Sequence file (default <seed-dir>/seq.json).
        #[arg(long)]
        seq: Option<PathBuf>,
        /// Output path (default <seed-dir>/comp.json).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve one covering instance and print the solution as JSON.
    Cover {
        #[arg(long)]
        m: u64,
        /// Comma-separated element list.
        #[arg(long)]
        elements: String,
        #[arg(long, value_enum, default_value_t = CoverMode::Exact)]
        mode: CoverMode,
        /// Progression step for structured mode.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        exact_cap: u64,
        /// Extra repair translates allowed in structured mode.
        #[arg(long, default_value_t = 8)]
        extras_cap: usize,
    },
    /// Sieve the sumset and report the coverage threshold and gaps.
    VerifyCoverage {
        /// Upper end of the sieve window.
        #[arg(long)]
        max: u64,
        #[arg(long, default_value_t = DEFAULT_SIEVE_CAP)]
        sieve_cap: u64,
        #[arg(long)]
        seq: Option<PathBuf>,
        #[arg(long)]
        comp: Option<PathBuf>,
        /// Fail (exit 1) unless the coverage threshold equals this value.
        #[arg(long)]
        expect_n0: Option<u64>,
    },
    /// Evaluate the exact criterion at chosen points and emit a report.
    Criterion {
        /// Comma-separated evaluation points.
        #[arg(long)]
        at: Option<String>,
        /// Evaluate at the ladder point x_k of this level (repeatable).
        #[arg(long)]
        at_level: Vec<usize>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Csv)]
        format: ReportFormat,
        #[arg(long)]
        seq: Option<PathBuf>,
        #[arg(long)]
        comp: Option<PathBuf>,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustively check the sum/difference collision inequality.
    Lemma {
        /// Check all nonempty subsets of {1..max} against each other.
        #[arg(long, default_value_t = 6)]
        max: u32,
    },
    /// Plot the criterion sweep as an SVG chart.
    Report {
        #[arg(long)]
        seq: Option<PathBuf>,
        #[arg(long)]
        comp: Option<PathBuf>,
        /// Output path (default <seed-dir>/report.svg).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: category={} {e}", e.category());
            ExitCode::from(2)
        }
    }
}

fn seed_dir(cli_dir: &Option<PathBuf>) -> PathBuf {
    cli_dir
        .clone()
        .or_else(|| std::env::var_os("ADDCOMP_SEED_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."))
}

fn read_to_string(path: &Path) -> addcomp::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn write_string(path: &Path, data: &str) -> addcomp::Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)
                .map_err(|e| Error::Parse(format!("cannot create {}: {e}", parent.display())))?;
        }
    }
    std::fs::write(path, data)
        .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))
}

fn load_sequence(path: &Path) -> addcomp::Result<Sequence> {
    let seq = Sequence::from_json(&read_to_string(path)?)?;
    validate_residue_systems(&seq, &level_ladder(&seq))?;
    Ok(seq)
}

fn load_blocks(path: &Path, seq: &Sequence) -> addcomp::Result<ComplementBlocks> {
    let blocks = ComplementBlocks::from_json(&read_to_string(path)?)?;
    blocks.validate_against(seq)?;
    Ok(blocks)
}

fn parse_biguint_list(raw: &str) -> addcomp::Result<Vec<BigUint>> {
    raw.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            BigUint::from_str(s.trim())
                .map_err(|e| Error::Parse(format!("invalid integer {:?}: {e}", s.trim())))
        })
        .collect()
}

fn run(cli: Cli) -> addcomp::Result<ExitCode> {
    let dir = seed_dir(&cli.seed_dir);
    match cli.command {
        Command::Construct {
            levels,
            extra,
            growth,
            term_cap,
            out,
        } => {
            let rule = GrowthRule::from_str(&growth)?;
            let caps = BuildCaps {
                max_terms: term_cap,
                extra_terms: extra,
            };
            let (seq, ladder) = build_sequence(levels, rule, &caps)?;
            validate_residue_systems(&seq, &ladder)?;
            let path = out.unwrap_or_else(|| dir.join("seq.json"));
            write_string(&path, &seq.to_json())?;
            eprintln!(
                "wrote {} terms covering {} levels to {}",
                seq.len(),
                ladder.levels.len(),
                path.display()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Complement {
            blocks,
            exact_cap,
            extras_cap,
            seq,
            out,
        } => {
            let seq_path = seq.unwrap_or_else(|| dir.join("seq.json"));
            let sequence = load_sequence(&seq_path)?;
            let levels = match blocks {
                Some(k) => k,
                None => {
                    if sequence.len() < 3 {
                        return Err(Error::Precondition(
                            "sequence too short for any block".into(),
                        ));
                    }
                    sequence.len() - 2
                }
            };
            let cfg = BuildConfig {
                exact_cap,
                extras_cap,
                modulus_cap: DEFAULT_MODULUS_CAP,
            };
            let build = build_blocks(&sequence, levels, &cfg)?;
            for note in &build.notes {
                eprintln!("warning: {note}");
            }
            let path = out.unwrap_or_else(|| dir.join("comp.json"));
            write_string(&path, &build.blocks.to_json())?;
            eprintln!("wrote {} blocks to {}", build.blocks.len(), path.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Cover {
            m,
            elements,
            mode,
            n,
            exact_cap,
            extras_cap,
        } => {
            let elems = parse_biguint_list(&elements)?;
            let inst = CoverInstance::from_elements(m, &elems)?;
            let solution = match mode {
                CoverMode::Exact => cover_exact(&inst, exact_cap)?,
                CoverMode::Greedy => cover_greedy_with_cap(&inst, DEFAULT_MODULUS_CAP)?,
                CoverMode::Structured => {
                    let n = n.ok_or_else(|| {
                        Error::Precondition("structured mode needs --n".into())
                    })?;
                    cover_structured(&elems, n, m, extras_cap, DEFAULT_MODULUS_CAP)?
                }
            };
            // Density k*L/m >= 1 is the covering lower bound in ratio form.
            let k = inst.element_count() as u64;
            let l = solution.size() as u64;
            println!(
                "{}",
                serde_json::json!({
                    "m": m.to_string(),
                    "k": k,
                    "L": l,
                    "translates": solution.translates(),
                    "exactness": solution.exactness().name(),
                    "density": format!("{}/{}", k * l, m),
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyCoverage {
            max,
            sieve_cap,
            seq,
            comp,
            expect_n0,
        } => {
            let sequence = load_sequence(&seq.unwrap_or_else(|| dir.join("seq.json")))?;
            let blocks = load_blocks(&comp.unwrap_or_else(|| dir.join("comp.json")), &sequence)?;
            let report = sumset_coverage(&sequence, &blocks, max, sieve_cap)?;
            println!(
                "{}",
                serde_json::json!({
                    "n0": report.n0,
                    "max": max,
                    "gaps_below_n0": report.gaps,
                })
            );
            if let Some(expected) = expect_n0 {
                if report.n0 != expected {
                    eprintln!(
                        "verification failed: coverage threshold {} != expected {expected}",
                        report.n0
                    );
                    return Ok(ExitCode::from(1));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Criterion {
            at,
            at_level,
            format,
            seq,
            comp,
            out,
        } => {
            let sequence = load_sequence(&seq.unwrap_or_else(|| dir.join("seq.json")))?;
            let blocks = load_blocks(&comp.unwrap_or_else(|| dir.join("comp.json")), &sequence)?;
            let mut points: Option<Vec<BigUint>> = None;
            if at.is_some() || !at_level.is_empty() {
                let mut pts = match &at {
                    Some(raw) => parse_biguint_list(raw)?,
                    None => Vec::new(),
                };
                let ladder = level_ladder(&sequence);
                for k in &at_level {
                    let x_k = ladder
                        .level(*k)
                        .and_then(|l| l.x_k.clone())
                        .ok_or_else(|| {
                            Error::Precondition(format!("ladder point x_{k} is not built"))
                        })?;
                    pts.push(x_k);
                }
                points = Some(pts);
            }
            let reports = criterion_sweep(&sequence, &blocks, points.as_deref())?;
            if let Some(trend) = criterion_trend(&sequence, &blocks)? {
                if !trend.decreasing {
                    eprintln!(
                        "warning: criterion ratio did not decrease between ladder points \
                         ({} at x={} vs {} at x={}); consider a faster growth rule \
                         (construct --growth quadratic)",
                        trend.r1, trend.x1, trend.r2, trend.x2
                    );
                }
            }
            let rendered = match format {
                ReportFormat::Csv => reports_to_csv(&reports),
                ReportFormat::Json => {
                    let rows: Vec<serde_json::Value> = reports
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "x": r.x.to_string(),
                                "A": r.a_of_x,
                                "B": r.b_of_x,
                                "a_star": r.a_star.to_string(),
                                "T": r.t.to_string(),
                                "scale": r.scale.to_string(),
                                "R": r.ratio.to_string(),
                                "exactness": r.exactness_ratio.to_string(),
                            })
                        })
                        .collect();
                    let mut s = serde_json::to_string_pretty(&rows).expect("rows serialize");
                    s.push('\n');
                    s
                }
            };
            match out {
                Some(path) => write_string(&path, &rendered)?,
                None => print!("{rendered}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lemma { max } => {
            if max == 0 || max > 20 {
                return Err(Error::Cap("lemma bound must be in 1..=20".into()));
            }
            let universe: Vec<i64> = (1..=max as i64).collect();
            let subsets: Vec<Vec<i64>> = (1u32..1 << max)
                .map(|mask| {
                    universe
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let total = subsets.len() * subsets.len();
            let mut held = 0usize;
            for u in &subsets {
                for v in &subsets {
                    if collision_inequality(u, v)?.holds {
                        held += 1;
                    }
                }
            }
            println!("{held}/{total} hold");
            if held != total {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { seq, comp, out } => {
            let sequence = load_sequence(&seq.unwrap_or_else(|| dir.join("seq.json")))?;
            let blocks = load_blocks(&comp.unwrap_or_else(|| dir.join("comp.json")), &sequence)?;
            let reports = criterion_sweep(&sequence, &blocks, None)?;
            let chart = svg::criterion_chart(&reports);
            let path = out.unwrap_or_else(|| dir.join("report.svg"));
            write_string(&path, &chart)?;
            eprintln!("wrote {} sweep points to {}", reports.len(), path.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}
