//! Shared numerical machinery: adaptive quadrature, guarded series
//! summation, one-dimensional maximization and a seedable random source.

mod optimize;
mod quadrature;
mod rng;
mod series;
pub(crate) mod special;

pub use optimize::{bisect_increasing, maximize_1d, Maximum};
pub use quadrature::{integrate, try_integrate, Integral};
pub use rng::RandomSource;
pub use series::{sum_series, try_sum_series};

use crate::error::{Error, Result};

/// Stopping rule shared by quadrature, series summation and the optimizer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_evals: usize,
}

impl Tolerance {
    pub fn new(abs_tol: f64, rel_tol: f64, max_evals: usize) -> Result<Self> {
        if !(abs_tol > 0.0 && abs_tol.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "abs_tol",
                value: abs_tol,
                reason: "must be positive and finite",
            });
        }
        if !(rel_tol >= 0.0 && rel_tol.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "rel_tol",
                value: rel_tol,
                reason: "must be non-negative and finite",
            });
        }
        if max_evals == 0 {
            return Err(Error::InvalidParameter {
                name: "max_evals",
                value: 0.0,
                reason: "must be at least 1",
            });
        }
        Ok(Self {
            abs_tol,
            rel_tol,
            max_evals,
        })
    }

    /// Default series rule: absolute tail bound 1e-12, no relative slack.
    pub const fn series() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 0.0,
            max_evals: 1_000_000,
        }
    }

    /// Default optimizer rule: argmax located to 1e-10.
    pub const fn optimizer() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 0.0,
            max_evals: 10_000,
        }
    }

    pub(crate) fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

impl Default for Tolerance {
    /// Quadrature default: abs 1e-10, rel 1e-10, 10^6 evaluations.
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_evals: 1_000_000,
        }
    }
}
