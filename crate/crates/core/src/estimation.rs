//! Estimating the geometric parameter theta from observed extremes.
//!
//! For the correlated model the likelihood is `(theta / (1 - theta))^n`
//! times a theta-free factor on a support that shrinks with theta, so the
//! maximum-likelihood estimate is the largest admissible theta: one minus
//! the sample maximum, or the sample minimum. The uniform-geometric
//! likelihood has no closed-form maximizer and is maximized numerically;
//! its mean can also be inverted.

use std::fmt;

use crate::closed_form::{csug_mean_var, sug_mean_var, Catalogue};
use crate::error::{Error, Result};
use crate::law::Kind;
use crate::numeric::{bisect_increasing, maximize_1d, Tolerance};

/// Search range for numerical estimators.
pub const THETA_SEARCH_LO: f64 = 1e-9;
pub const THETA_SEARCH_HI: f64 = 1.0 - 1e-9;

/// Estimates closer than this to 0 or 1 are flagged.
const BOUNDARY_MARGIN: f64 = 1e-4;

const MONOTONICITY_GRID: usize = 1000;

/// Observed extremes, all in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    values: Vec<f64>,
    declared_model: Option<Catalogue>,
}

impl Sample {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::DegenerateSample("sample is empty".into()));
        }
        if let Some(&bad) = values.iter().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(Error::Domain {
                what: "sample value",
                value: bad,
                domain: "[0, 1]",
            });
        }
        Ok(Self {
            values,
            declared_model: None,
        })
    }

    pub fn with_model(mut self, model: Catalogue) -> Self {
        self.declared_model = Some(model);
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn declared_model(&self) -> Option<Catalogue> {
        self.declared_model
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn mean(&self) -> f64 {
        self.values.iter().sum::<f64>() / self.values.len() as f64
    }

    fn max(&self) -> f64 {
        self.values
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedFormMle,
    NumericMle,
    MomentInversion,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ClosedFormMle => "closed-form-mle",
            Method::NumericMle => "numeric-mle",
            Method::MomentInversion => "moment-inversion",
        })
    }
}

/// Which geometric model a mean map belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelFamily {
    Sug,
    Csug,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimateResult {
    pub theta_hat: f64,
    pub method: Method,
    /// Log-likelihood at `theta_hat`; absent for moment inversion.
    pub loglik: Option<f64>,
    /// Objective (or mean-map) evaluations spent.
    pub evals: usize,
    /// `theta_hat` is within 1e-4 of 0 or 1.
    pub near_boundary: bool,
}

fn near_boundary(theta: f64) -> bool {
    !(BOUNDARY_MARGIN..=1.0 - BOUNDARY_MARGIN).contains(&theta)
}

/// Log-likelihood of the correlated model at `theta`.
pub fn csug_loglik(kind: Kind, sample: &Sample, theta: f64) -> f64 {
    let n = sample.len() as f64;
    let (lo, hi) = match kind {
        Kind::Max => (0.0, 1.0 - theta),
        Kind::Min => (theta, 1.0),
    };
    if sample.values.iter().any(|&v| v < lo || v > hi) {
        return f64::NEG_INFINITY;
    }
    let free: f64 = match kind {
        Kind::Max => sample.values.iter().map(|&y| (-y).ln_1p()).sum(),
        Kind::Min => sample.values.iter().map(|&z| z.ln()).sum(),
    };
    n * (theta / (1.0 - theta)).ln() - 2.0 * free
}

/// Maximum-likelihood estimate for the correlated model: `1 - max` for the
/// maximum, `min` for the minimum.
pub fn csug_mle(kind: Kind, sample: &Sample) -> Result<EstimateResult> {
    let theta_hat = match kind {
        Kind::Max => 1.0 - sample.max(),
        Kind::Min => sample.min(),
    };
    if !(theta_hat > 0.0 && theta_hat < 1.0) {
        return Err(Error::DegenerateSample(format!(
            "estimate {theta_hat} is outside (0, 1)"
        )));
    }
    Ok(EstimateResult {
        theta_hat,
        method: Method::ClosedFormMle,
        loglik: Some(csug_loglik(kind, sample, theta_hat)),
        evals: 1,
        near_boundary: near_boundary(theta_hat),
    })
}

/// Log-likelihood of the uniform-geometric model at `theta`.
///
/// `n ln theta - 2 sum ln(1 - (1 - theta) y_i)` for the maximum; the minimum
/// uses `1 - z_i` in place of `y_i`.
pub fn sug_loglik(kind: Kind, sample: &Sample, theta: f64) -> f64 {
    let q = 1.0 - theta;
    let tail: f64 = match kind {
        Kind::Max => sample.values.iter().map(|&y| (-q * y).ln_1p()).sum(),
        Kind::Min => sample
            .values
            .iter()
            .map(|&z| (-q * (1.0 - z)).ln_1p())
            .sum(),
    };
    sample.len() as f64 * theta.ln() - 2.0 * tail
}

/// Numerical maximum-likelihood estimate for the uniform-geometric model,
/// searched over `[1e-9, 1 - 1e-9]`.
pub fn sug_mle_numeric(kind: Kind, sample: &Sample) -> Result<EstimateResult> {
    if sample.values.iter().any(|&v| v == 0.0 || v == 1.0) {
        return Err(Error::DegenerateSample(
            "values of exactly 0 or 1 give a non-finite likelihood".into(),
        ));
    }
    let best = maximize_1d(
        |theta| sug_loglik(kind, sample, theta),
        THETA_SEARCH_LO,
        THETA_SEARCH_HI,
        Tolerance::optimizer(),
    )?;
    if !best.value.is_finite() {
        return Err(Error::NonFinite {
            at: best.argmax,
            value: best.value,
        });
    }
    Ok(EstimateResult {
        theta_hat: best.argmax,
        method: Method::NumericMle,
        loglik: Some(best.value),
        evals: best.evals,
        near_boundary: best.at_boundary || near_boundary(best.argmax),
    })
}

/// The mean of a geometric model as a function of theta.
pub fn model_mean(kind: Kind, family: ModelFamily, theta: f64) -> Result<f64> {
    Ok(match family {
        ModelFamily::Sug => sug_mean_var(kind, theta)?.mean,
        ModelFamily::Csug => csug_mean_var(kind, theta)?.mean,
    })
}

/// Solves `model_mean(theta) = sample_mean` by bisection.
///
/// The mean map is checked for strict monotonicity on a 1000-point grid
/// first; a target outside its range is reported as
/// [`Error::MeanOutOfRange`].
pub fn moment_inversion(
    kind: Kind,
    family: ModelFamily,
    sample_mean: f64,
) -> Result<EstimateResult> {
    let mean = |theta: f64| model_mean(kind, family, theta).expect("theta inside search range");
    let mut evals = 0usize;
    let grid: Vec<f64> = (0..MONOTONICITY_GRID)
        .map(|i| {
            let t = THETA_SEARCH_LO
                + (THETA_SEARCH_HI - THETA_SEARCH_LO) * i as f64 / (MONOTONICITY_GRID - 1) as f64;
            evals += 1;
            mean(t)
        })
        .collect();
    let increasing = grid[MONOTONICITY_GRID - 1] > grid[0];
    let monotone = grid
        .windows(2)
        .all(|w| if increasing { w[1] > w[0] } else { w[1] < w[0] });
    assert!(monotone, "mean map of {family:?} {kind} is not monotone");

    let (lo, hi) = if increasing {
        (grid[0], grid[MONOTONICITY_GRID - 1])
    } else {
        (grid[MONOTONICITY_GRID - 1], grid[0])
    };
    if !(sample_mean > lo && sample_mean < hi) {
        return Err(Error::MeanOutOfRange {
            mean: sample_mean,
            lo,
            hi,
        });
    }
    let sign = if increasing { 1.0 } else { -1.0 };
    let theta_hat = bisect_increasing(
        |t| {
            evals += 1;
            sign * mean(t)
        },
        sign * sample_mean,
        THETA_SEARCH_LO,
        THETA_SEARCH_HI,
        1e-15,
    );
    Ok(EstimateResult {
        theta_hat,
        method: Method::MomentInversion,
        loglik: None,
        evals,
        near_boundary: near_boundary(theta_hat),
    })
}
