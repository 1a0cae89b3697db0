//! Continuous laws on `[0, 1]` used as the i.i.d. inputs.

use std::f64::consts::{FRAC_2_PI, PI};
use std::fmt;

use crate::error::{check_unit, Error, Result};
use crate::numeric::bisect_increasing;

/// Family tag, without parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InputFamily {
    Uniform,
    Beta22,
    Arcsine,
    ToppLeone,
}

/// An input law X on `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InputDistribution {
    Uniform,
    /// Beta(2, 2)
    Beta22,
    /// Beta(1/2, 1/2)
    Arcsine,
    /// Topp-Leone with shape `a > 0`, cdf `x^a (2 - x)^a`.
    ToppLeone {
        a: f64,
    },
}

impl InputDistribution {
    pub fn topp_leone(a: f64) -> Result<Self> {
        if a > 0.0 && a.is_finite() {
            Ok(Self::ToppLeone { a })
        } else {
            Err(Error::InvalidParameter {
                name: "a",
                value: a,
                reason: "Topp-Leone shape must be positive and finite",
            })
        }
    }

    pub fn family(&self) -> InputFamily {
        match self {
            Self::Uniform => InputFamily::Uniform,
            Self::Beta22 => InputFamily::Beta22,
            Self::Arcsine => InputFamily::Arcsine,
            Self::ToppLeone { .. } => InputFamily::ToppLeone,
        }
    }

    pub fn pdf(&self, x: f64) -> Result<f64> {
        check_unit("x", x)?;
        Ok(self.pdf_unchecked(x))
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        check_unit("x", x)?;
        Ok(self.cdf_unchecked(x))
    }

    /// `1 - cdf(x)`, computed without cancellation where the family allows.
    pub fn sf(&self, x: f64) -> Result<f64> {
        check_unit("x", x)?;
        Ok(self.sf_unchecked(x))
    }

    pub fn quantile(&self, u: f64) -> Result<f64> {
        check_unit("u", u)?;
        Ok(self.quantile_unchecked(u))
    }

    /// Arcsine density is infinite at both ends, Topp-Leone with `a < 1` at
    /// zero; those values come back as `f64::INFINITY`.
    pub(crate) fn pdf_unchecked(&self, x: f64) -> f64 {
        match *self {
            Self::Uniform => 1.0,
            Self::Beta22 => 6.0 * x * (1.0 - x),
            Self::Arcsine => 1.0 / (PI * (x * (1.0 - x)).sqrt()),
            Self::ToppLeone { a } => {
                if a == 1.0 {
                    2.0 * (1.0 - x)
                } else {
                    2.0 * a * (1.0 - x) * x.powf(a - 1.0) * (2.0 - x).powf(a - 1.0)
                }
            }
        }
    }

    pub(crate) fn cdf_unchecked(&self, x: f64) -> f64 {
        match *self {
            Self::Uniform => x,
            Self::Beta22 => x * x * (3.0 - 2.0 * x),
            Self::Arcsine => FRAC_2_PI * x.sqrt().asin(),
            Self::ToppLeone { a } => (x * (2.0 - x)).powf(a),
        }
    }

    pub(crate) fn sf_unchecked(&self, x: f64) -> f64 {
        match *self {
            Self::Uniform => 1.0 - x,
            Self::Beta22 => {
                let y = 1.0 - x;
                y * y * (3.0 - 2.0 * y)
            }
            Self::Arcsine => FRAC_2_PI * (1.0 - x).sqrt().asin(),
            Self::ToppLeone { a } => {
                // x (2 - x) = 1 - (1 - x)^2
                let y = 1.0 - x;
                -(a * (-y * y).ln_1p()).exp_m1()
            }
        }
    }

    pub(crate) fn quantile_unchecked(&self, u: f64) -> f64 {
        match *self {
            Self::Uniform => u,
            Self::Arcsine => {
                let s = (0.5 * PI * u).sin();
                s * s
            }
            Self::Beta22 => {
                if u <= 0.0 {
                    0.0
                } else if u >= 1.0 {
                    1.0
                } else {
                    bisect_increasing(|x| x * x * (3.0 - 2.0 * x), u, 0.0, 1.0, 1e-15)
                }
            }
            Self::ToppLeone { a } => {
                // x (2 - x) = v  =>  x = 1 - sqrt(1 - v) = v / (1 + sqrt(1 - v))
                let v = u.powf(1.0 / a);
                v / (1.0 + (1.0 - v).sqrt())
            }
        }
    }

    /// Inverse of the survival function: the `x` with `1 - cdf(x) = w`.
    /// Keeps precision when `w` is tiny, i.e. for points close to one.
    pub(crate) fn upper_quantile_unchecked(&self, w: f64) -> f64 {
        match *self {
            Self::Uniform => 1.0 - w,
            Self::Arcsine => {
                let c = (0.5 * PI * w).sin();
                1.0 - c * c
            }
            // Both are symmetric about 1/2 or have no precision issue worth
            // a dedicated branch.
            Self::Beta22 => 1.0 - self.quantile_unchecked(w),
            Self::ToppLeone { .. } => self.quantile_unchecked(1.0 - w),
        }
    }
}

impl fmt::Display for InputDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Uniform => write!(f, "uniform"),
            Self::Beta22 => write!(f, "beta22"),
            Self::Arcsine => write!(f, "arcsine"),
            Self::ToppLeone { a } => write!(f, "topp-leone(a={a})"),
        }
    }
}
