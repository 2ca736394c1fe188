//! Long-range correlation estimators: detrended fluctuation analysis and
//! rescaled-range (R/S) Hurst analysis.

mod dfa;
mod grid;
mod hurst;

pub use dfa::{dfa, local_trend, profile, FluctuationCurve, Profile, TrendCoefficients};
pub use grid::{default_dfa_windows, default_rs_windows, geometric_grid, DEFAULT_GRID_POINTS};
pub use hurst::{
    fractal_dimension, hurst_pointwise, hurst_regression, rs_statistic, HurstResult,
    PointwiseHurst,
};

pub(crate) fn is_constant(series: &[f64]) -> bool {
    series.windows(2).all(|w| w[0] == w[1])
}
