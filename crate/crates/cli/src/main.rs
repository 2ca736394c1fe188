//! `mutrel`: score a corpus, analyze mutual-relevance sequences, and
//! generate synthetic reference series.

mod commands;
mod config;
mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use mutrel_core::rankstats::{DEFAULT_TRIM, MAX_TRIM};
use mutrel_core::synth::MIN_FGN_LEN;
use mutrel_core::{GeneratorSpec, Measure};

use config::{
    AnalyzeConfig, AnalyzeInput, Manifest, RunConfig, ScoreConfig, SynthConfig, MANIFEST_FILE,
};
use output::OutDir;

#[derive(Parser)]
#[command(name = "mutrel", version, about = "Mutual-relevance sequence analysis")]
struct Cli {
    /// Output directory.
    #[arg(long, global = true, env = "MUTREL_OUT", default_value = "mutrel-out")]
    out: PathBuf,

    /// Seed for every random generator used by the run.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score a JSONL corpus against a query and write scores.csv.
    Score(ScoreArgs),
    /// Run DFA, R/S Hurst, Zipf and Poincaré analyses on a sequence.
    Analyze(AnalyzeArgs),
    /// Generate a synthetic series.
    Synth(SynthArgs),
    /// Re-run a previous invocation from its manifest.json.
    Replay(ReplayArgs),
}

#[derive(Args)]
struct ScoreArgs {
    #[arg(long)]
    corpus: PathBuf,
    /// Whitespace-separated query terms, e.g. "military".
    #[arg(long)]
    query: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    F,
    Q,
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Self {
        match m {
            MeasureArg::F => Measure::F,
            MeasureArg::Q => Measure::Q,
        }
    }
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Scores file written by `score`.
    #[arg(long, conflicts_with = "series", required_unless_present = "series")]
    scores: Option<PathBuf>,
    /// Bare series, one value per line.
    #[arg(long)]
    series: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "q")]
    ranked_by: MeasureArg,
    #[arg(long, value_enum, default_value = "f")]
    read_off: MeasureArg,
    /// Fraction of ranks dropped from each end before the Zipf fits.
    #[arg(long, default_value_t = DEFAULT_TRIM)]
    trim: f64,
    /// Poincaré occupancy grid size G (G x G cells).
    #[arg(long, default_value_t = 32)]
    grid: usize,
    /// Keep documents that contain no query term.
    #[arg(long)]
    include_zero_scores: bool,
    /// Comma-separated DFA window sizes (default: geometric over [4, N/4]).
    #[arg(long, value_delimiter = ',')]
    dfa_windows: Option<Vec<usize>>,
    /// Comma-separated R/S window sizes (default: geometric over [8, N/4]).
    #[arg(long, value_delimiter = ',')]
    rs_windows: Option<Vec<usize>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(alias = "white-noise")]
    White,
    Fgn,
    Linear,
    #[value(alias = "power-law-ranks")]
    PowerLaw,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    len: usize,
    /// Target Hurst index for fgn, in (0, 1).
    #[arg(long)]
    h: Option<f64>,
    /// Power-law exponent for power-law.
    #[arg(long)]
    beta: Option<f64>,
    /// Multiplicative log-normal noise level for power-law.
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    #[arg(long)]
    slope: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    intercept: f64,
}

#[derive(Args)]
struct ReplayArgs {
    #[arg(long)]
    manifest: PathBuf,
}

fn usage_error(kind: ErrorKind, msg: impl std::fmt::Display) -> ! {
    Cli::command().error(kind, msg).exit()
}

fn synth_spec(args: &SynthArgs, seed: u64) -> GeneratorSpec {
    let missing = |flag: &str, kind: &str| -> ! {
        usage_error(
            ErrorKind::MissingRequiredArgument,
            format!("--{flag} is required for --kind {kind}"),
        )
    };
    let length = args.len;
    if length < 2 {
        usage_error(ErrorKind::ValueValidation, "--len must be at least 2");
    }
    match args.kind {
        Kind::White => GeneratorSpec::WhiteNoise { length, seed },
        Kind::Fgn => {
            let h = args.h.unwrap_or_else(|| missing("h", "fgn"));
            if !(h > 0.0 && h < 1.0) {
                usage_error(ErrorKind::ValueValidation, format!("--h {h} must lie in (0, 1)"));
            }
            if length < MIN_FGN_LEN || !length.is_power_of_two() {
                usage_error(
                    ErrorKind::ValueValidation,
                    format!("--len {length} must be a power of two >= {MIN_FGN_LEN} for fgn"),
                );
            }
            GeneratorSpec::Fgn { length, h, seed }
        }
        Kind::Linear => GeneratorSpec::LinearTrend {
            length,
            slope: args.slope.unwrap_or_else(|| missing("slope", "linear")),
            intercept: args.intercept,
        },
        Kind::PowerLaw => {
            let beta = args.beta.unwrap_or_else(|| missing("beta", "power-law"));
            if !(beta > 0.0 && beta.is_finite()) {
                usage_error(ErrorKind::ValueValidation, format!("--beta {beta} must be positive"));
            }
            if !(args.noise >= 0.0 && args.noise.is_finite()) {
                usage_error(
                    ErrorKind::ValueValidation,
                    format!("--noise {} must be nonnegative", args.noise),
                );
            }
            GeneratorSpec::PowerLawRanks {
                length,
                beta,
                noise: args.noise,
                seed,
            }
        }
    }
}

fn resolve(cli: &Cli) -> Result<Manifest> {
    let run = match &cli.command {
        Command::Score(a) => RunConfig::Score(ScoreConfig {
            corpus: a.corpus.clone(),
            query: a.query.split_whitespace().map(str::to_owned).collect(),
        }),
        Command::Analyze(a) => {
            if !(0.0..=MAX_TRIM).contains(&a.trim) {
                usage_error(
                    ErrorKind::ValueValidation,
                    format!("--trim {} must lie in [0, {MAX_TRIM}]", a.trim),
                );
            }
            if a.grid == 0 {
                usage_error(ErrorKind::ValueValidation, "--grid must be positive");
            }
            let input = match (&a.scores, &a.series) {
                (Some(path), None) => AnalyzeInput::Scores {
                    path: path.clone(),
                    ranked_by: a.ranked_by.into(),
                    read_off: a.read_off.into(),
                    include_zero_scores: a.include_zero_scores,
                },
                (None, Some(path)) => AnalyzeInput::Series { path: path.clone() },
                _ => usage_error(
                    ErrorKind::ArgumentConflict,
                    "exactly one of --scores or --series is required",
                ),
            };
            RunConfig::Analyze(AnalyzeConfig {
                input,
                trim: a.trim,
                grid: a.grid,
                dfa_windows: a.dfa_windows.clone(),
                rs_windows: a.rs_windows.clone(),
            })
        }
        Command::Synth(a) => RunConfig::Synth(SynthConfig {
            spec: synth_spec(a, cli.seed),
        }),
        Command::Replay(a) => {
            let text = fs::read_to_string(&a.manifest)
                .with_context(|| format!("reading manifest {}", a.manifest.display()))?;
            return serde_json::from_str(&text)
                .with_context(|| format!("parsing manifest {}", a.manifest.display()));
        }
    };
    Ok(Manifest::new(cli.seed, run))
}

fn execute(manifest: Manifest, out: &mut OutDir) -> Result<()> {
    let run = match manifest.run {
        RunConfig::Score(cfg) => {
            commands::score(&cfg, out)?;
            RunConfig::Score(cfg)
        }
        RunConfig::Analyze(cfg) => RunConfig::Analyze(commands::analyze(&cfg, out)?),
        RunConfig::Synth(cfg) => {
            commands::synth(&cfg, out)?;
            RunConfig::Synth(cfg)
        }
    };
    let resolved = Manifest { run, ..manifest };
    out.write(MANIFEST_FILE, |w| {
        serde_json::to_writer_pretty(&mut *w, &resolved)?;
        writeln!(w)?;
        Ok(())
    })
}

fn run(cli: Cli) -> Result<()> {
    let manifest = resolve(&cli)?;
    let mut out = OutDir::create(&cli.out)?;
    execute(manifest, &mut out)?;
    for path in out.written() {
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
