use std::fmt;

use crate::error::{Error, Result};
use crate::numeric::{try_integrate, RandomSource, Tolerance};

/// Which extreme of the N inputs is observed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Max,
    Min,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Max => "max",
            Kind::Min => "min",
        })
    }
}

/// Common surface of every extreme-value law in the crate, whether it is
/// evaluated from a printed closed form or from the general series scheme.
pub trait ExtremeLaw {
    /// Closed interval carrying all the mass.
    fn support(&self) -> (f64, f64);

    fn pdf(&self, x: f64) -> Result<f64>;

    fn cdf(&self, x: f64) -> Result<f64>;

    fn sample(&self, src: &mut RandomSource) -> f64;

    /// `E(X^k)` for `k >= 1`, by quadrature of `x^k pdf(x)` over the support.
    fn moment(&self, k: u32) -> Result<f64> {
        if k == 0 {
            return Err(Error::Domain {
                what: "moment order",
                value: 0.0,
                domain: "{1, 2, ...}",
            });
        }
        let (lo, hi) = self.support();
        try_integrate(
            |x| Ok(x.powi(k as i32) * self.pdf(x)?),
            lo,
            hi,
            Tolerance::default(),
        )
        .map(|r| r.value)
    }

    /// `E(exp(tX))` by quadrature.
    fn mgf(&self, t: f64) -> Result<f64> {
        let (lo, hi) = self.support();
        try_integrate(
            |x| Ok((t * x).exp() * self.pdf(x)?),
            lo,
            hi,
            Tolerance::default(),
        )
        .map(|r| r.value)
    }

    /// Total mass by quadrature; one up to numerical error.
    fn normalization(&self) -> Result<f64> {
        let (lo, hi) = self.support();
        try_integrate(|x| self.pdf(x), lo, hi, Tolerance::default()).map(|r| r.value)
    }
}
