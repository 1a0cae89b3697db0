//! The general scheme: the maximum or minimum of a random number N of
//! i.i.d. inputs, with N independent of the inputs.
//!
//! Conditioning on N gives `P(Y <= y) = E[F(y)^N] = P(F(y))` with `P` the
//! pgf of N, so the density is `f(y) P'(F(y))`. For the minimum the survival
//! function `1 - F` takes the place of `F`. These models are the oracle every
//! closed form is checked against.

use std::fmt;

use crate::count::CountDistribution;
use crate::error::{check_unit, Result};
use crate::input::InputDistribution;
use crate::law::{ExtremeLaw, Kind};
use crate::numeric::RandomSource;

/// Counts up to this size are simulated draw by draw; larger ones use the
/// distribution of the extreme of `n` uniforms directly.
const LITERAL_SIMULATION_LIMIT: u64 = 32;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremeModel {
    pub input: InputDistribution,
    pub count: CountDistribution,
    pub kind: Kind,
}

impl ExtremeModel {
    pub fn new(input: InputDistribution, count: CountDistribution, kind: Kind) -> Self {
        Self { input, count, kind }
    }

    /// Argument fed to the pgf: `F(x)` for the maximum, `1 - F(x)` for the
    /// minimum.
    fn pgf_argument(&self, x: f64) -> f64 {
        self.pgf_arguments(x).0
    }

    /// The pgf argument together with its complement, each computed
    /// directly rather than as one minus the other.
    fn pgf_arguments(&self, x: f64) -> (f64, f64) {
        let (cdf, sf) = (self.input.cdf_unchecked(x), self.input.sf_unchecked(x));
        match self.kind {
            Kind::Max => (cdf, sf),
            Kind::Min => (sf, cdf),
        }
    }

    /// Density using the closed-form pgf derivative where the count family
    /// has one and the guarded series otherwise.
    pub fn pdf_auto(&self, x: f64) -> Result<f64> {
        check_unit("x", x)?;
        let f = self.input.pdf_unchecked(x);
        if f == 0.0 {
            return Ok(0.0);
        }
        let (s, c) = self.pgf_arguments(x);
        Ok(f * self.count.pgf_derivative_split(s, c)?)
    }

    /// Density by direct summation of `f(x) sum n s^(n-1) p(n)`, never
    /// touching a closed form.
    pub fn pdf_series(&self, x: f64) -> Result<f64> {
        check_unit("x", x)?;
        let f = self.input.pdf_unchecked(x);
        if f == 0.0 {
            return Ok(0.0);
        }
        Ok(f * self.count.pgf_derivative_series(self.pgf_argument(x))?)
    }

    fn draw_literal(&self, n: u64, src: &mut RandomSource) -> f64 {
        let mut draws = (0..n).map(|_| self.input.quantile_unchecked(src.next_uniform()));
        let first = draws.next().expect("count is at least one");
        match self.kind {
            Kind::Max => draws.fold(first, f64::max),
            Kind::Min => draws.fold(first, f64::min),
        }
    }
}

impl ExtremeLaw for ExtremeModel {
    fn support(&self) -> (f64, f64) {
        (0.0, 1.0)
    }

    fn pdf(&self, x: f64) -> Result<f64> {
        self.pdf_auto(x)
    }

    fn cdf(&self, x: f64) -> Result<f64> {
        check_unit("x", x)?;
        match self.kind {
            Kind::Max => self.count.pgf(self.input.cdf_unchecked(x)),
            Kind::Min => Ok(1.0 - self.count.pgf(self.input.sf_unchecked(x))?),
        }
    }

    fn sample(&self, src: &mut RandomSource) -> f64 {
        let n = self.count.sample(src);
        if n <= LITERAL_SIMULATION_LIMIT {
            return self.draw_literal(n, src);
        }
        // The extreme of n uniforms: its distance from the far end, w, solves
        // (1 - w)^n = U.
        let w = -(src.next_open_uniform().ln() / n as f64).exp_m1();
        match self.kind {
            Kind::Max => self.input.upper_quantile_unchecked(w),
            Kind::Min => self.input.quantile_unchecked(w),
        }
    }
}

impl fmt::Display for ExtremeModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} of {} draws from {}",
            self.kind, self.count, self.input
        )
    }
}
