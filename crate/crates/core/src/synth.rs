//! Seeded generators of synthetic series with known statistical character.
//!
//! All randomness comes from `ChaCha20Rng` (crate `rand_chacha` 0.9) seeded
//! with `SeedableRng::seed_from_u64(seed)`, and Gaussian variates from
//! `rand_distr::StandardNormal` (crate `rand_distr` 0.5, ziggurat method).
//! A given [`GeneratorSpec`] reproduces its series bit for bit as long as
//! these crate versions are unchanged. Implementations in other languages
//! will produce different streams with the same distribution.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Shortest fGn series; lengths must also be powers of two.
pub const MIN_FGN_LEN: usize = 64;

/// Relative tolerance for negative circulant eigenvalues caused by rounding.
const EIGEN_TOLERANCE: f64 = 1e-10;

/// A fully specified generator; serializing it is enough to regenerate the series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorSpec {
    WhiteNoise { length: usize, seed: u64 },
    Fgn { length: usize, h: f64, seed: u64 },
    LinearTrend { length: usize, slope: f64, intercept: f64 },
    PowerLawRanks { length: usize, beta: f64, noise: f64, seed: u64 },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Vec<f64>> {
        match *self {
            GeneratorSpec::WhiteNoise { length, seed } => white_noise(length, seed),
            GeneratorSpec::Fgn { length, h, seed } => fgn(length, h, seed),
            GeneratorSpec::LinearTrend {
                length,
                slope,
                intercept,
            } => linear_trend(length, slope, intercept),
            GeneratorSpec::PowerLawRanks {
                length,
                beta,
                noise,
                seed,
            } => power_law_ranks(length, beta, noise, seed),
        }
    }
}

fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

fn check_length(length: usize) -> Result<()> {
    if length < 2 {
        return Err(Error::InvalidParameter {
            name: "length",
            reason: format!("{length} < 2"),
        });
    }
    Ok(())
}

/// I.i.d. standard Gaussian draws.
pub fn white_noise(length: usize, seed: u64) -> Result<Vec<f64>> {
    check_length(length)?;
    let mut rng = rng(seed);
    Ok((0..length).map(|_| rng.sample(StandardNormal)).collect())
}

/// Autocovariance of unit-variance fractional Gaussian noise at lag `k`.
pub fn fgn_autocovariance(k: usize, h: f64) -> f64 {
    let k = k as f64;
    let e = 2.0 * h;
    0.5 * ((k + 1.0).powf(e) - 2.0 * k.powf(e) + (k - 1.0).abs().powf(e))
}

/// Fractional Gaussian noise by circulant embedding (Davies-Harte).
///
/// The covariance of the first `length` lags is embedded in a circulant of
/// size `2 * length`, whose eigenvalues come from one FFT. A second FFT of
/// complex Gaussian weights scaled by the square-rooted eigenvalues yields an
/// exact sample.
pub fn fgn(length: usize, h: f64, seed: u64) -> Result<Vec<f64>> {
    if !(h > 0.0 && h < 1.0) {
        return Err(Error::InvalidParameter {
            name: "h",
            reason: format!("{h} not in (0, 1)"),
        });
    }
    if length < MIN_FGN_LEN || !length.is_power_of_two() {
        return Err(Error::InvalidParameter {
            name: "length",
            reason: format!("{length} is not a power of two >= {MIN_FGN_LEN}"),
        });
    }
    let n = length;
    let m = 2 * n;
    let mut planner = FftPlanner::<f64>::new();
    let fft = planner.plan_fft_forward(m);

    let mut eig: Vec<Complex<f64>> = (0..m)
        .map(|j| {
            let lag = if j <= n { j } else { m - j };
            Complex::new(fgn_autocovariance(lag, h), 0.0)
        })
        .collect();
    fft.process(&mut eig);
    let lambda_max = eig.iter().map(|c| c.re).fold(0.0, f64::max);
    let mut lambda = Vec::with_capacity(m);
    for (i, c) in eig.iter().enumerate() {
        if c.re < -EIGEN_TOLERANCE * lambda_max {
            return Err(Error::NegativeEigenvalue {
                index: i,
                value: c.re,
            });
        }
        lambda.push(c.re.max(0.0));
    }

    let mut rng = rng(seed);
    let mut normal = || -> f64 { rng.sample(StandardNormal) };
    let mf = m as f64;
    let mut w = vec![Complex::new(0.0, 0.0); m];
    w[0] = Complex::new((lambda[0] / mf).sqrt() * normal(), 0.0);
    w[n] = Complex::new((lambda[n] / mf).sqrt() * normal(), 0.0);
    for k in 1..n {
        let scale = (lambda[k] / (2.0 * mf)).sqrt();
        let z = Complex::new(normal(), normal()) * scale;
        w[k] = z;
        w[m - k] = z.conj();
    }
    fft.process(&mut w);
    Ok(w[..n].iter().map(|c| c.re).collect())
}

/// `value(k) = slope * k + intercept` for `k = 1..=length`.
pub fn linear_trend(length: usize, slope: f64, intercept: f64) -> Result<Vec<f64>> {
    check_length(length)?;
    Ok((1..=length)
        .map(|k| slope * k as f64 + intercept)
        .collect())
}

/// `r^-beta * exp(noise * g_r)` for ranks `r = 1..=length`, sorted non-increasing.
pub fn power_law_ranks(length: usize, beta: f64, noise: f64, seed: u64) -> Result<Vec<f64>> {
    check_length(length)?;
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "beta",
            reason: format!("{beta} must be positive"),
        });
    }
    if !(noise >= 0.0 && noise.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "noise",
            reason: format!("{noise} must be nonnegative"),
        });
    }
    let mut rng = rng(seed);
    let mut values: Vec<f64> = (1..=length)
        .map(|r| {
            let g: f64 = rng.sample(StandardNormal);
            (r as f64).powf(-beta) * (noise * g).exp()
        })
        .collect();
    values.sort_by(|a, b| b.total_cmp(a));
    Ok(values)
}
