//! Discrete laws for the random sample size N.
//!
//! Each family exposes its pmf, its probability generating function
//! `P(s) = sum p(n) s^n` and the derivative `P'(s) = sum n p(n) s^(n-1)`,
//! which is the series that turns an input law into the density of the
//! extreme. Closed forms are used where they exist; the guarded series
//! versions are always available as an independent route.

use std::fmt;

use crate::error::{check_unit, Error, Result};
use crate::numeric::special::{dilog, ln_factorial, zeta};
use crate::numeric::{try_sum_series, RandomSource, Tolerance};

/// Smallest and largest admissible geometric success probability.
pub const THETA_MIN: f64 = 1e-12;
pub const THETA_MAX: f64 = 1.0 - 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountFamily {
    Geometric,
    ShiftedGeometric,
    TruncPoisson,
    Zipf,
}

/// Law of N on the positive integers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CountDistribution {
    /// `theta (1 - theta)^(n-1)`, n >= 1.
    Geometric { theta: f64 },
    /// `theta (1 - theta)^(n-2)`, n >= 2: one plus a geometric count.
    ShiftedGeometric { theta: f64 },
    /// Poisson conditioned on n >= 1.
    TruncPoisson { lambda: f64 },
    /// `n^(-k) / zeta(k)`.
    Zipf { k: f64, zeta_k: f64 },
}

pub(crate) fn check_theta(theta: f64) -> Result<f64> {
    if (THETA_MIN..=THETA_MAX).contains(&theta) {
        Ok(theta)
    } else {
        Err(Error::InvalidParameter {
            name: "theta",
            value: theta,
            reason: "must lie in [1e-12, 1 - 1e-12]",
        })
    }
}

pub(crate) fn check_lambda(lambda: f64) -> Result<f64> {
    if lambda > 0.0 && lambda.is_finite() {
        Ok(lambda)
    } else {
        Err(Error::InvalidParameter {
            name: "lambda",
            value: lambda,
            reason: "must be positive and finite",
        })
    }
}

impl CountDistribution {
    pub fn geometric(theta: f64) -> Result<Self> {
        Ok(Self::Geometric {
            theta: check_theta(theta)?,
        })
    }

    pub fn shifted_geometric(theta: f64) -> Result<Self> {
        Ok(Self::ShiftedGeometric {
            theta: check_theta(theta)?,
        })
    }

    pub fn trunc_poisson(lambda: f64) -> Result<Self> {
        Ok(Self::TruncPoisson {
            lambda: check_lambda(lambda)?,
        })
    }

    pub fn zipf(k: f64) -> Result<Self> {
        if !(k > 1.0 && k.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "k",
                value: k,
                reason: "Zipf exponent must exceed 1",
            });
        }
        Ok(Self::Zipf { k, zeta_k: zeta(k) })
    }

    pub fn family(&self) -> CountFamily {
        match self {
            Self::Geometric { .. } => CountFamily::Geometric,
            Self::ShiftedGeometric { .. } => CountFamily::ShiftedGeometric,
            Self::TruncPoisson { .. } => CountFamily::TruncPoisson,
            Self::Zipf { .. } => CountFamily::Zipf,
        }
    }

    /// Smallest n with positive mass.
    pub fn min_support(&self) -> u64 {
        match self {
            Self::ShiftedGeometric { .. } => 2,
            _ => 1,
        }
    }

    pub fn pmf(&self, n: u64) -> Result<f64> {
        if n < 1 {
            return Err(Error::Domain {
                what: "n",
                value: n as f64,
                domain: "{1, 2, ...}",
            });
        }
        Ok(self.pmf_unchecked(n))
    }

    fn pmf_unchecked(&self, n: u64) -> f64 {
        match *self {
            Self::Geometric { theta } => theta * (1.0 - theta).powf((n - 1) as f64),
            Self::ShiftedGeometric { theta } => {
                if n < 2 {
                    0.0
                } else {
                    theta * (1.0 - theta).powf((n - 2) as f64)
                }
            }
            Self::TruncPoisson { lambda } => {
                (n as f64 * lambda.ln() - lambda - ln_factorial(n)).exp() / -(-lambda).exp_m1()
            }
            Self::Zipf { k, zeta_k } => (n as f64).powf(-k) / zeta_k,
        }
    }

    /// Mean of N; infinite for Zipf with `k <= 2`.
    pub fn mean(&self) -> f64 {
        match *self {
            Self::Geometric { theta } => 1.0 / theta,
            Self::ShiftedGeometric { theta } => 1.0 + 1.0 / theta,
            Self::TruncPoisson { lambda } => lambda / -(-lambda).exp_m1(),
            Self::Zipf { k, zeta_k } => {
                if k > 2.0 {
                    zeta(k - 1.0) / zeta_k
                } else {
                    f64::INFINITY
                }
            }
        }
    }

    /// `E(s^N)`.
    pub fn pgf(&self, s: f64) -> Result<f64> {
        check_unit("s", s)?;
        if s == 1.0 {
            return Ok(1.0);
        }
        Ok(match *self {
            Self::Geometric { theta } => theta * s / (1.0 - (1.0 - theta) * s),
            Self::ShiftedGeometric { theta } => theta * s * s / (1.0 - (1.0 - theta) * s),
            Self::TruncPoisson { lambda } => (lambda * s).exp_m1() / lambda.exp_m1(),
            Self::Zipf { k: 2.0, zeta_k } => dilog(s) / zeta_k,
            Self::Zipf { .. } => return self.pgf_series(s),
        })
    }

    /// `E(N s^(N-1))`, the derivative of the pgf.
    pub fn pgf_derivative(&self, s: f64) -> Result<f64> {
        check_unit("s", s)?;
        self.pgf_derivative_split(s, 1.0 - s)
    }

    /// `pgf_derivative(s)` with `c = 1 - s` supplied by the caller, who can
    /// often compute it without the cancellation `1.0 - s` suffers near 1.
    pub(crate) fn pgf_derivative_split(&self, s: f64, c: f64) -> Result<f64> {
        Ok(match *self {
            Self::Geometric { theta } => theta / (theta + (1.0 - theta) * c).powi(2),
            Self::ShiftedGeometric { theta } => {
                let q = 1.0 - theta;
                theta * s * (2.0 - q * s) / (theta + q * c).powi(2)
            }
            Self::TruncPoisson { lambda } => lambda * (-lambda * c).exp() / -(-lambda).exp_m1(),
            Self::Zipf { k: 2.0, zeta_k } => {
                if c == 0.0 {
                    f64::INFINITY
                } else if s < 1e-8 {
                    (1.0 + 0.5 * s) / zeta_k
                } else {
                    -c.ln() / s / zeta_k
                }
            }
            Self::Zipf { k, .. } if k <= 2.0 && c == 0.0 => f64::INFINITY,
            Self::Zipf { .. } => return self.pgf_derivative_series(s),
        })
    }

    /// Direct tail-bounded summation of `sum p(n) s^n`.
    pub fn pgf_series(&self, s: f64) -> Result<f64> {
        check_unit("s", s)?;
        try_sum_series(
            |n| Ok(self.pmf_unchecked(n) * s.powf(n as f64)),
            |n| self.pgf_tail(s, n),
            Tolerance::series(),
        )
    }

    /// Direct tail-bounded summation of `sum n p(n) s^(n-1)`.
    pub fn pgf_derivative_series(&self, s: f64) -> Result<f64> {
        check_unit("s", s)?;
        try_sum_series(
            |n| Ok(n as f64 * self.pmf_unchecked(n) * s.powf((n - 1) as f64)),
            |n| self.pgf_derivative_tail(s, n),
            Tolerance::series(),
        )
    }

    /// Upper bound on `sum_{m > n} p(m) s^m`.
    fn pgf_tail(&self, s: f64, n: u64) -> f64 {
        let nf = n as f64;
        match *self {
            Self::Geometric { theta } => {
                let r = (1.0 - theta) * s;
                theta * s * r.powf(nf) / (1.0 - r)
            }
            Self::ShiftedGeometric { theta } => {
                let r = (1.0 - theta) * s;
                theta * s * s * r.powf(nf - 1.0) / (1.0 - r)
            }
            Self::TruncPoisson { lambda } => {
                // Successive ratios are lambda s / (m + 1), decreasing in m.
                let ratio = lambda * s / (nf + 2.0);
                if ratio >= 1.0 {
                    f64::INFINITY
                } else {
                    self.pmf_unchecked(n + 1) * s.powf(nf + 1.0) / (1.0 - ratio)
                }
            }
            Self::Zipf { k, zeta_k } => {
                let geometric = if s < 1.0 {
                    (nf + 1.0).powf(-k) * s.powf(nf + 1.0) / (1.0 - s)
                } else {
                    f64::INFINITY
                };
                let integral = s.powf(nf + 1.0) * nf.powf(1.0 - k) / (k - 1.0);
                geometric.min(integral) / zeta_k
            }
        }
    }

    /// Upper bound on `sum_{m > n} m p(m) s^(m-1)`.
    fn pgf_derivative_tail(&self, s: f64, n: u64) -> f64 {
        let nf = n as f64;
        match *self {
            Self::Geometric { theta } => {
                // sum_{m>n} m r^(m-1) = r^n ((n+1) - n r) / (1-r)^2
                let r = (1.0 - theta) * s;
                theta * r.powf(nf) * ((nf + 1.0) - nf * r) / (1.0 - r).powi(2)
            }
            Self::ShiftedGeometric { theta } => {
                // m p(m) s^(m-1) = theta s m r^(m-2); same sum shifted by one.
                let r = (1.0 - theta) * s;
                if n < 1 {
                    return f64::INFINITY;
                }
                let j = nf - 1.0;
                let inner =
                    r.powf(j) * ((j + 1.0) - j * r) / (1.0 - r).powi(2) + r.powf(j) / (1.0 - r);
                theta * s * inner
            }
            Self::TruncPoisson { lambda } => {
                // Ratios of consecutive terms are lambda s / m.
                let ratio = lambda * s / (nf + 1.0);
                if ratio >= 1.0 {
                    f64::INFINITY
                } else {
                    (nf + 1.0) * self.pmf_unchecked(n + 1) * s.powf(nf) / (1.0 - ratio)
                }
            }
            Self::Zipf { k, zeta_k } => {
                let geometric = if s < 1.0 {
                    (nf + 1.0).powf(1.0 - k) * s.powf(nf) / (1.0 - s)
                } else {
                    f64::INFINITY
                };
                let integral = if k > 2.0 {
                    s.powf(nf) * nf.powf(2.0 - k) / (k - 2.0)
                } else {
                    f64::INFINITY
                };
                geometric.min(integral) / zeta_k
            }
        }
    }

    /// Draws one value of N.
    pub fn sample(&self, src: &mut RandomSource) -> u64 {
        match *self {
            Self::Geometric { theta } => sample_geometric(theta, src),
            Self::ShiftedGeometric { theta } => 1 + sample_geometric(theta, src),
            Self::TruncPoisson { lambda } => {
                // Sequential inversion on the truncated pmf.
                let u = src.next_uniform();
                let mut n = 1u64;
                let mut p = self.pmf_unchecked(1);
                let mut cum = p;
                while u >= cum && p > 0.0 {
                    n += 1;
                    p *= lambda / n as f64;
                    cum += p;
                }
                n
            }
            Self::Zipf { k, .. } => sample_zeta(k, src),
        }
    }
}

fn sample_geometric(theta: f64, src: &mut RandomSource) -> u64 {
    let u = src.next_open_uniform();
    let n = (u.ln() / (-theta).ln_1p()).ceil();
    if n < 1.0 {
        1
    } else if n >= u64::MAX as f64 {
        u64::MAX
    } else {
        n as u64
    }
}

// Devroye's rejection sampler for the zeta law (Non-Uniform Random Variate
// Generation, X.6.1). Exact and with bounded expected work for every k > 1.
fn sample_zeta(k: f64, src: &mut RandomSource) -> u64 {
    let b = 2f64.powf(k - 1.0);
    loop {
        let u = src.next_open_uniform();
        let v = src.next_uniform();
        let x = u.powf(-1.0 / (k - 1.0)).floor();
        if x.is_nan() || x < 1.0 || x >= u64::MAX as f64 {
            continue;
        }
        let t = (1.0 + 1.0 / x).powf(k - 1.0);
        if v * x * (t - 1.0) / (b - 1.0) <= t / b {
            return x as u64;
        }
    }
}

impl fmt::Display for CountDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Geometric { theta } => write!(f, "geometric(theta={theta})"),
            Self::ShiftedGeometric { theta } => write!(f, "shifted-geometric(theta={theta})"),
            Self::TruncPoisson { lambda } => write!(f, "trunc-poisson(lambda={lambda})"),
            Self::Zipf { k, .. } => write!(f, "zipf(k={k})"),
        }
    }
}
