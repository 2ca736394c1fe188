use serde::{Deserialize, Serialize};

use super::is_constant;
use crate::error::{Error, Result};
use crate::regression::fit_line;

/// Smallest admissible DFA window.
pub const MIN_WINDOW: usize = 4;
/// Shortest series accepted by [`dfa`].
pub const MIN_SERIES_LEN: usize = 16;

/// Cumulative sum of the mean-centered series (the "random walk").
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    pub mean: f64,
    pub y: Vec<f64>,
}

/// `y(k) = sum_{u<=k} (x(u) - mean)` for `k = 1..N`.
pub fn profile(series: &[f64]) -> Result<Profile> {
    if series.len() < 2 {
        return Err(Error::SeriesTooShort {
            estimator: "profile",
            required: 2,
            actual: series.len(),
        });
    }
    let mean = series.iter().sum::<f64>() / series.len() as f64;
    let mut acc = 0.0;
    let y = series
        .iter()
        .map(|&x| {
            acc += x - mean;
            acc
        })
        .collect();
    Ok(Profile { mean, y })
}

/// Least-squares line `a*k + b` over the local index `k = 1..n`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrendCoefficients {
    pub a: f64,
    pub b: f64,
}

impl TrendCoefficients {
    /// Trend value at the 1-based local index `k`.
    pub fn at(&self, k: usize) -> f64 {
        self.a * k as f64 + self.b
    }

    /// Sum of squared residuals of `segment` about this line.
    pub fn residual_ss(&self, segment: &[f64]) -> f64 {
        segment
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let r = v - self.at(i + 1);
                r * r
            })
            .sum()
    }
}

/// Fits the local linear trend of `segment` with the closed-form normal
/// equations in raw index sums.
pub fn local_trend(segment: &[f64]) -> Result<TrendCoefficients> {
    let n = segment.len();
    if n < 2 {
        return Err(Error::SeriesTooShort {
            estimator: "local_trend",
            required: 2,
            actual: n,
        });
    }
    let nf = n as f64;
    let sum_k = nf * (nf + 1.0) / 2.0;
    let sum_k2 = nf * (nf + 1.0) * (2.0 * nf + 1.0) / 6.0;
    let (mut sum_y, mut sum_ky) = (0.0, 0.0);
    for (i, &v) in segment.iter().enumerate() {
        sum_y += v;
        sum_ky += (i + 1) as f64 * v;
    }
    let denom = nf * sum_k2 - sum_k * sum_k;
    let a = (nf * sum_ky - sum_k * sum_y) / denom;
    let b = (sum_y * sum_k2 - sum_k * sum_ky) / denom;
    Ok(TrendCoefficients { a, b })
}

/// Fluctuation function `D(n)` over a window grid and its log-log fit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FluctuationCurve {
    /// `(n, D(n))`, windows strictly increasing.
    pub points: Vec<(usize, f64)>,
    /// Slope of `log10 D` against `log10 n`.
    pub alpha: f64,
    pub alpha_r2: f64,
}

/// First-order detrended fluctuation analysis.
///
/// The profile is cut into `floor(N/n)` non-overlapping windows from the
/// start; the short tail is discarded. `D(n)` is the root mean square of the
/// residuals about each window's own linear trend.
pub fn dfa(series: &[f64], windows: &[usize]) -> Result<FluctuationCurve> {
    let len = series.len();
    if len < MIN_SERIES_LEN {
        return Err(Error::SeriesTooShort {
            estimator: "dfa",
            required: MIN_SERIES_LEN,
            actual: len,
        });
    }
    if windows.is_empty() {
        return Err(Error::EmptyWindowGrid);
    }
    let max_window = len / 4;
    let mut grid = windows.to_vec();
    grid.sort_unstable();
    grid.dedup();
    if let Some(&bad) = grid.iter().find(|&&n| !(MIN_WINDOW..=max_window).contains(&n)) {
        return Err(Error::WindowOutOfRange {
            window: bad,
            min: MIN_WINDOW,
            max: max_window,
        });
    }
    if is_constant(series) {
        return Err(Error::ZeroFluctuation { estimator: "dfa" });
    }

    let walk = profile(series)?.y;
    let mut points = Vec::with_capacity(grid.len());
    for &n in &grid {
        let segments = len / n;
        let mut ss = 0.0;
        for segment in walk.chunks_exact(n).take(segments) {
            ss += local_trend(segment)?.residual_ss(segment);
        }
        let d = (ss / (segments * n) as f64).sqrt();
        if d.is_nan() || d <= 0.0 {
            return Err(Error::ZeroFluctuation { estimator: "dfa" });
        }
        points.push((n, d));
    }

    let (log_n, log_d): (Vec<f64>, Vec<f64>) = points
        .iter()
        .map(|&(n, d)| ((n as f64).log10(), d.log10()))
        .unzip();
    let fit = fit_line(&log_n, &log_d).ok_or(Error::InsufficientScalingRange {
        usable: points.len(),
        required: 2,
    })?;
    Ok(FluctuationCurve {
        points,
        alpha: fit.slope,
        alpha_r2: fit.r2,
    })
}
