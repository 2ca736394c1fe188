use std::fs::File;
use std::io::BufReader;

use anyhow::{bail, Context, Result};
use mutrel_core::format::round_sig;
use mutrel_core::fractal::{default_dfa_windows, default_rs_windows};
use mutrel_core::io::{
    read_scores_csv, read_series_csv, widen, write_pairs_csv, write_scores_csv, write_series_csv,
};
use mutrel_core::{
    dfa, hurst_regression, ingest_jsonl, mutual_sequence, occupancy_stats, poincare_map,
    score_corpus, zipf_fit, Query,
};
use serde::Serialize;

use crate::config::{AnalyzeConfig, AnalyzeInput, ScoreConfig, SynthConfig};
use crate::output::OutDir;

#[derive(Serialize)]
struct ScoreSummary {
    documents: usize,
    query_terms: usize,
    zero_score_documents: usize,
    f_max_raw: f64,
    q_max_raw: f64,
}

pub fn score(cfg: &ScoreConfig, out: &mut OutDir) -> Result<()> {
    let file = File::open(&cfg.corpus)
        .with_context(|| format!("opening corpus {}", cfg.corpus.display()))?;
    let corpus = ingest_jsonl(BufReader::new(file))
        .with_context(|| format!("ingesting {}", cfg.corpus.display()))?;
    let query = Query::new(&cfg.query)?;
    let table = score_corpus(&corpus, &query)
        .with_context(|| format!("scoring {}", cfg.corpus.display()))?;
    out.write("scores.csv", |w| Ok(write_scores_csv(&table, w)?))?;
    out.write_json_line(
        "summary.json",
        &ScoreSummary {
            documents: table.len(),
            query_terms: query.len(),
            zero_score_documents: table.unmatched_count(),
            f_max_raw: round_sig(table.f_max_raw()),
            q_max_raw: round_sig(table.q_max_raw()),
        },
    )
}

#[derive(Serialize)]
struct DfaSummary {
    alpha: f64,
    alpha_r2: f64,
    windows: usize,
}

#[derive(Serialize)]
struct HurstSummary {
    h: f64,
    h_r2: f64,
    fractal_dim: f64,
    h_pointwise_full: Option<f64>,
    pointwise_skipped: Vec<usize>,
}

#[derive(Serialize)]
struct ZipfSummary {
    trim_fraction: f64,
    semilog_slope: f64,
    semilog_r2: f64,
    loglog_slope: f64,
    loglog_r2: f64,
    n_used: usize,
}

#[derive(Serialize)]
struct OccupancySummary {
    grid_size: usize,
    occupied_cells: usize,
    occupied_fraction: f64,
    chi2_uniform: f64,
    /// `none` if the sequence already lay in [0, 1], else `minmax`.
    scaling: &'static str,
}

#[derive(Serialize)]
struct AnalyzeSummary {
    n: usize,
    dfa: DfaSummary,
    hurst: HurstSummary,
    zipf: Option<ZipfSummary>,
    zipf_error: Option<String>,
    occupancy: OccupancySummary,
}

/// Loads the sequence to analyze plus the rank curve used for the Zipf fit.
fn load_sequence(input: &AnalyzeInput) -> Result<(Vec<f64>, Vec<f64>)> {
    match input {
        AnalyzeInput::Scores {
            path,
            ranked_by,
            read_off,
            include_zero_scores,
        } => {
            let file =
                File::open(path).with_context(|| format!("opening scores {}", path.display()))?;
            let mut table =
                read_scores_csv(file).with_context(|| format!("reading {}", path.display()))?;
            if !include_zero_scores {
                table = table.matched_only();
            }
            let seq = mutual_sequence(&table, *ranked_by, *read_off).values;
            let curve = mutual_sequence(&table, *ranked_by, *ranked_by).values;
            Ok((seq, curve))
        }
        AnalyzeInput::Series { path } => {
            let file =
                File::open(path).with_context(|| format!("opening series {}", path.display()))?;
            let seq = read_series_csv(BufReader::new(file))
                .with_context(|| format!("reading {}", path.display()))?;
            let mut curve = seq.clone();
            curve.sort_by(|a, b| b.total_cmp(a));
            Ok((seq, curve))
        }
    }
}

fn unit_scaled(seq: &[f64]) -> (Vec<f64>, &'static str) {
    if seq.iter().all(|v| (0.0..=1.0).contains(v)) {
        return (seq.to_vec(), "none");
    }
    let lo = seq.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = seq.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let span = hi - lo;
    let scaled = seq
        .iter()
        .map(|v| if span > 0.0 { (v - lo) / span } else { 0.0 })
        .collect();
    (scaled, "minmax")
}

/// Runs every estimator and returns the config with window grids resolved.
pub fn analyze(cfg: &AnalyzeConfig, out: &mut OutDir) -> Result<AnalyzeConfig> {
    let (seq, curve) = load_sequence(&cfg.input)?;
    let n = seq.len();
    let dfa_windows = cfg
        .dfa_windows
        .clone()
        .unwrap_or_else(|| default_dfa_windows(n));
    let rs_windows = cfg
        .rs_windows
        .clone()
        .unwrap_or_else(|| default_rs_windows(n));

    let fluct = dfa(&seq, &dfa_windows).context("estimator `dfa` failed")?;
    let hurst =
        hurst_regression(&seq, &rs_windows).context("estimator `hurst_regression` failed")?;
    let (unit, scaling) = unit_scaled(&seq);
    let poincare = poincare_map(&unit).context("estimator `poincare_map` failed")?;
    let occupancy =
        occupancy_stats(&poincare, cfg.grid).context("estimator `occupancy_stats` failed")?;
    let (zipf, zipf_error) = match zipf_fit(&curve, cfg.trim) {
        Ok(z) => (
            Some(ZipfSummary {
                trim_fraction: z.trim_fraction,
                semilog_slope: round_sig(z.semilog_slope),
                semilog_r2: round_sig(z.semilog_r2),
                loglog_slope: round_sig(z.loglog_slope),
                loglog_r2: round_sig(z.loglog_r2),
                n_used: z.n_used,
            }),
            None,
        ),
        Err(e) => (None, Some(e.to_string())),
    };

    out.write("sequence.csv", |w| Ok(write_series_csv(&seq, w)?))?;
    out.write("dfa.csv", |w| {
        Ok(write_pairs_csv(("n", "d"), &widen(&fluct.points), w)?)
    })?;
    out.write("hurst_pointwise.csv", |w| {
        Ok(write_pairs_csv(("N", "h"), &widen(&hurst.pointwise.points), w)?)
    })?;
    out.write("hurst_rs.csv", |w| {
        Ok(write_pairs_csv(("w", "rs"), &widen(&hurst.rs_points), w)?)
    })?;
    out.write("poincare.csv", |w| {
        Ok(write_pairs_csv(("x", "y"), &poincare.points, w)?)
    })?;
    out.write_json_line(
        "summary.json",
        &AnalyzeSummary {
            n,
            dfa: DfaSummary {
                alpha: round_sig(fluct.alpha),
                alpha_r2: round_sig(fluct.alpha_r2),
                windows: fluct.points.len(),
            },
            hurst: HurstSummary {
                h: round_sig(hurst.h_regression),
                h_r2: round_sig(hurst.h_r2),
                fractal_dim: round_sig(hurst.fractal_dim),
                h_pointwise_full: hurst.pointwise.points.last().map(|p| round_sig(p.1)),
                pointwise_skipped: hurst.pointwise.skipped.clone(),
            },
            zipf,
            zipf_error,
            occupancy: OccupancySummary {
                grid_size: occupancy.grid_size,
                occupied_cells: occupancy.occupied_cells,
                occupied_fraction: round_sig(occupancy.occupied_fraction),
                chi2_uniform: round_sig(occupancy.chi2_uniform),
                scaling,
            },
        },
    )?;

    Ok(AnalyzeConfig {
        dfa_windows: Some(dfa_windows),
        rs_windows: Some(rs_windows),
        ..cfg.clone()
    })
}

pub fn synth(cfg: &SynthConfig, out: &mut OutDir) -> Result<()> {
    let series = match cfg.spec.generate() {
        Ok(s) => s,
        Err(e) => bail!("generator failed: {e}"),
    };
    out.write("series.csv", |w| Ok(write_series_csv(&series, w)?))
}
