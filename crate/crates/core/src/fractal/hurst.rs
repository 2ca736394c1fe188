use serde::{Deserialize, Serialize};

use super::grid::{geometric_grid, DEFAULT_GRID_POINTS};
use super::is_constant;
use crate::error::{Error, Result};
use crate::regression::fit_line;

/// Shortest series accepted by [`hurst_pointwise`]; also the first prefix length.
pub const MIN_POINTWISE_LEN: usize = 16;
/// Shortest series accepted by [`hurst_regression`].
pub const MIN_REGRESSION_LEN: usize = 64;
/// Smallest admissible R/S window.
pub const MIN_RS_WINDOW: usize = 4;
/// Usable windows needed for a regression estimate.
pub const MIN_USABLE_WINDOWS: usize = 4;

/// Rescaled range `R/S` of a series.
///
/// `S` is the population standard deviation (divides by `N`); `R` is the
/// range of the cumulative deviations from the mean.
pub fn rs_statistic(series: &[f64]) -> Result<f64> {
    let n = series.len();
    if n < 2 {
        return Err(Error::SeriesTooShort {
            estimator: "rs_statistic",
            required: 2,
            actual: n,
        });
    }
    if is_constant(series) {
        return Err(Error::DegenerateSeries {
            estimator: "rs_statistic",
        });
    }
    let nf = n as f64;
    let mean = series.iter().sum::<f64>() / nf;
    let (mut acc, mut lo, mut hi, mut ss) = (0.0f64, f64::INFINITY, f64::NEG_INFINITY, 0.0);
    for &x in series {
        let dev = x - mean;
        acc += dev;
        lo = lo.min(acc);
        hi = hi.max(acc);
        ss += dev * dev;
    }
    let s = (ss / nf).sqrt();
    if s.is_nan() || s <= 0.0 {
        return Err(Error::DegenerateSeries {
            estimator: "rs_statistic",
        });
    }
    Ok((hi - lo) / s)
}

/// `H(N) = ln(R/S) / ln(N/2)` evaluated on growing prefixes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointwiseHurst {
    /// `(prefix length, H)`.
    pub points: Vec<(usize, f64)>,
    /// Prefix lengths whose R/S was undefined.
    pub skipped: Vec<usize>,
}

/// Single-point Hurst estimates on prefixes geometrically spaced from 16
/// to the full length.
pub fn hurst_pointwise(series: &[f64]) -> Result<PointwiseHurst> {
    let len = series.len();
    if len < MIN_POINTWISE_LEN {
        return Err(Error::SeriesTooShort {
            estimator: "hurst_pointwise",
            required: MIN_POINTWISE_LEN,
            actual: len,
        });
    }
    let mut points = Vec::new();
    let mut skipped = Vec::new();
    for n in geometric_grid(MIN_POINTWISE_LEN, len, DEFAULT_GRID_POINTS) {
        match rs_statistic(&series[..n]) {
            Ok(rs) if rs > 0.0 && rs.is_finite() => {
                points.push((n, rs.ln() / (n as f64 / 2.0).ln()));
            }
            _ => skipped.push(n),
        }
    }
    Ok(PointwiseHurst { points, skipped })
}

/// Fractal dimension of a self-affine record with Hurst index `h`.
pub fn fractal_dimension(h: f64) -> f64 {
    2.0 - h
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HurstResult {
    pub pointwise: PointwiseHurst,
    /// `(window w, mean R/S over the blocks of length w)`.
    pub rs_points: Vec<(usize, f64)>,
    /// Slope of `ln(mean R/S)` against `ln w`.
    pub h_regression: f64,
    pub h_r2: f64,
    /// Always `2 - h_regression`.
    pub fractal_dim: f64,
}

/// Classical multi-window R/S estimate.
///
/// For each window `w` the series is cut into `floor(N/w)` non-overlapping
/// blocks and R/S is averaged over the non-degenerate ones. A window with no
/// usable block is dropped from the fit.
pub fn hurst_regression(series: &[f64], windows: &[usize]) -> Result<HurstResult> {
    let len = series.len();
    if len < MIN_REGRESSION_LEN {
        return Err(Error::SeriesTooShort {
            estimator: "hurst_regression",
            required: MIN_REGRESSION_LEN,
            actual: len,
        });
    }
    if windows.is_empty() {
        return Err(Error::EmptyWindowGrid);
    }
    let mut grid = windows.to_vec();
    grid.sort_unstable();
    grid.dedup();
    let max_window = len / 2;
    if let Some(&bad) = grid
        .iter()
        .find(|&&w| !(MIN_RS_WINDOW..=max_window).contains(&w))
    {
        return Err(Error::WindowOutOfRange {
            window: bad,
            min: MIN_RS_WINDOW,
            max: max_window,
        });
    }
    if is_constant(series) {
        return Err(Error::DegenerateSeries {
            estimator: "hurst_regression",
        });
    }

    let mut rs_points = Vec::with_capacity(grid.len());
    for &w in &grid {
        let (mut total, mut used) = (0.0, 0usize);
        for block in series.chunks_exact(w) {
            if let Ok(rs) = rs_statistic(block) {
                total += rs;
                used += 1;
            }
        }
        if used > 0 {
            rs_points.push((w, total / used as f64));
        }
    }
    if rs_points.len() < MIN_USABLE_WINDOWS {
        return Err(Error::InsufficientScalingRange {
            usable: rs_points.len(),
            required: MIN_USABLE_WINDOWS,
        });
    }
    let (log_w, log_rs): (Vec<f64>, Vec<f64>) = rs_points
        .iter()
        .map(|&(w, rs)| ((w as f64).ln(), rs.ln()))
        .unzip();
    let fit = fit_line(&log_w, &log_rs).ok_or(Error::InsufficientScalingRange {
        usable: rs_points.len(),
        required: MIN_USABLE_WINDOWS,
    })?;
    Ok(HurstResult {
        pointwise: hurst_pointwise(series)?,
        rs_points,
        h_regression: fit.slope,
        h_r2: fit.r2,
        fractal_dim: fractal_dimension(fit.slope),
    })
}
