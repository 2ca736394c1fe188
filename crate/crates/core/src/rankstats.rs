//! Rank-curve fits (generalized Zipf law) and lag-1 Poincaré sections with
//! grid-occupancy statistics.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::regression::fit_line;

/// Default fraction of ranks dropped from each end before fitting.
pub const DEFAULT_TRIM: f64 = 0.05;
/// Largest admissible trim fraction.
pub const MAX_TRIM: f64 = 0.25;
/// Fewest points a rank fit may use.
pub const MIN_FIT_POINTS: usize = 4;

/// Semilog (`ln value` vs rank) and log-log (`ln value` vs `ln rank`) fits
/// of a non-increasing rank curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZipfFit {
    pub trim_fraction: f64,
    pub semilog_slope: f64,
    pub semilog_r2: f64,
    pub loglog_slope: f64,
    pub loglog_r2: f64,
    pub n_used: usize,
}

/// Fits a sorted non-increasing rank curve after trimming
/// `floor(trim_fraction * N)` ranks from each end. Ranks are 1-based and
/// keep their original positions after trimming.
pub fn zipf_fit(sequence: &[f64], trim_fraction: f64) -> Result<ZipfFit> {
    if !(0.0..=MAX_TRIM).contains(&trim_fraction) {
        return Err(Error::InvalidParameter {
            name: "trim_fraction",
            reason: format!("{trim_fraction} not in [0, {MAX_TRIM}]"),
        });
    }
    let n = sequence.len();
    let cut = (trim_fraction * n as f64).floor() as usize;
    let n_used = n.saturating_sub(2 * cut);
    if n_used < MIN_FIT_POINTS {
        return Err(Error::SeriesTooShort {
            estimator: "zipf_fit",
            required: MIN_FIT_POINTS,
            actual: n_used,
        });
    }
    if let Some(i) = sequence.windows(2).position(|w| w[1] > w[0]) {
        return Err(Error::InvalidParameter {
            name: "sequence",
            reason: format!("not non-increasing at rank {}", i + 2),
        });
    }
    let window = &sequence[cut..n - cut];
    let mut rank = Vec::with_capacity(n_used);
    let mut log_rank = Vec::with_capacity(n_used);
    let mut log_value = Vec::with_capacity(n_used);
    for (i, &v) in window.iter().enumerate() {
        let r = cut + i + 1;
        if v.is_nan() || v <= 0.0 {
            return Err(Error::NonPositiveValue { rank: r, value: v });
        }
        rank.push(r as f64);
        log_rank.push((r as f64).ln());
        log_value.push(v.ln());
    }
    let semilog = fit_line(&rank, &log_value).expect("ranks are distinct");
    let loglog = fit_line(&log_rank, &log_value).expect("ranks are distinct");
    Ok(ZipfFit {
        trim_fraction,
        semilog_slope: semilog.slope,
        semilog_r2: semilog.r2,
        loglog_slope: loglog.slope,
        loglog_r2: loglog.r2,
        n_used,
    })
}

/// Lag-1 return map `(v(n), v(n+1))`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PoincarePoints {
    pub points: Vec<(f64, f64)>,
}

impl PoincarePoints {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn poincare_map(sequence: &[f64]) -> Result<PoincarePoints> {
    if sequence.len() < 2 {
        return Err(Error::SeriesTooShort {
            estimator: "poincare_map",
            required: 2,
            actual: sequence.len(),
        });
    }
    if let Some((i, &v)) = sequence
        .iter()
        .enumerate()
        .find(|(_, v)| !(0.0..=1.0).contains(*v))
    {
        return Err(Error::OutOfUnitInterval { index: i, value: v });
    }
    Ok(PoincarePoints {
        points: sequence.windows(2).map(|w| (w[0], w[1])).collect(),
    })
}

/// How evenly a Poincaré section fills the unit square.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OccupancyReport {
    pub grid_size: usize,
    pub occupied_cells: usize,
    pub occupied_fraction: f64,
    /// Pearson chi-square of the cell counts against a uniform expectation.
    pub chi2_uniform: f64,
}

/// 1-based cell of `v` on a `g`-cell axis over `(0, 1]`: `ceil(v*g)` clamped.
fn cell(v: f64, g: usize) -> usize {
    ((v * g as f64).ceil() as usize).clamp(1, g)
}

/// Bins the points into a `G x G` grid and reports occupancy and the
/// chi-square statistic against `len / G^2` points per cell.
pub fn occupancy_stats(points: &PoincarePoints, grid_size: usize) -> Result<OccupancyReport> {
    if grid_size == 0 {
        return Err(Error::InvalidParameter {
            name: "grid_size",
            reason: "must be positive".into(),
        });
    }
    if points.is_empty() {
        return Err(Error::SeriesTooShort {
            estimator: "occupancy_stats",
            required: 1,
            actual: 0,
        });
    }
    let g = grid_size;
    let mut counts = vec![0usize; g * g];
    for (i, &(x, y)) in points.points.iter().enumerate() {
        for v in [x, y] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::OutOfUnitInterval { index: i, value: v });
            }
        }
        counts[(cell(x, g) - 1) * g + cell(y, g) - 1] += 1;
    }
    let expected = points.len() as f64 / (g * g) as f64;
    let chi2_uniform = counts
        .iter()
        .map(|&c| {
            let d = c as f64 - expected;
            d * d / expected
        })
        .sum();
    let occupied_cells = counts.iter().filter(|&&c| c > 0).count();
    Ok(OccupancyReport {
        grid_size: g,
        occupied_cells,
        occupied_fraction: occupied_cells as f64 / (g * g) as f64,
        chi2_uniform,
    })
}
