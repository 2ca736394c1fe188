//! Mutual-relevance analysis of document collections.
//!
//! Documents are scored against a query with two relevance measures: `F`,
//! the normalized sum of query-term entry counts, and `Q`, the normalized
//! length-scaled sum of `ln(count + 1)`. Ranking by one measure and reading
//! off the other yields a *mutual-relevance sequence*, whose long-range
//! correlation structure is then measured with detrended fluctuation
//! analysis, rescaled-range Hurst estimates, rank-curve (Zipf) fits and
//! Poincaré-section occupancy.
//!
//! The [`synth`] module supplies seeded reference signals (white noise,
//! fractional Gaussian noise, exact trends and power laws) for validating
//! the estimators.

pub mod corpus;
pub mod error;
pub mod format;
pub mod fractal;
pub mod io;
pub mod rankstats;
pub mod regression;
pub mod relevance;
pub mod synth;

pub use corpus::{ingest_jsonl, tokenize, Corpus, Document, Query};
pub use error::{Error, Result};
pub use fractal::{
    dfa, fractal_dimension, hurst_pointwise, hurst_regression, local_trend, profile,
    rs_statistic, FluctuationCurve, HurstResult, PointwiseHurst, Profile, TrendCoefficients,
};
pub use rankstats::{
    occupancy_stats, poincare_map, zipf_fit, OccupancyReport, PoincarePoints, ZipfFit,
};
pub use regression::{fit_line, LineFit};
pub use relevance::{
    mutual_sequence, rank_by, score_corpus, Measure, MutualSequence, RankPermutation,
    RelevanceRow, RelevanceTable,
};
pub use synth::GeneratorSpec;
