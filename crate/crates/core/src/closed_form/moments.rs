//! Raw moments, means and variances of the geometric-count models with
//! uniform inputs, and the full set of uniform-Poisson statistics.
//!
//! The raw-moment sums are evaluated term by term; every term is an integral
//! `int_theta^1 u^p du`, and the `p = -1` term is the exact `-ln theta`.
//!
//! The mean and variance functions are algebraic rearrangements of the
//! published expressions in terms of `h(e) = (-ln(1-e) - e) / e^2` with
//! `e = 1 - theta`. The published forms cancel catastrophically as theta
//! approaches 1 (the variance numerator is `O(e^4)`); the rearranged ones
//! stay accurate across the whole admissible range.

use crate::count::{check_lambda, check_theta};
use crate::error::Result;
use crate::law::Kind;
use crate::numeric::special::{log_excess, log_excess2};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeanVar {
    pub mean: f64,
    pub var: f64,
}

// int_theta^1 u^p du
fn power_integral(theta: f64, p: i32) -> f64 {
    if p == -1 {
        -theta.ln()
    } else {
        let q = (p + 1) as f64;
        -(q * theta.ln()).exp_m1() / q
    }
}

fn binomial(k: u32, j: u32) -> f64 {
    (0..j).fold(1.0, |acc, i| acc * (k - i) as f64 / (i + 1) as f64)
}

fn check_order(k: u32) -> Result<()> {
    if k == 0 {
        Err(crate::Error::Domain {
            what: "moment order",
            value: 0.0,
            domain: "{1, 2, ...}",
        })
    } else {
        Ok(())
    }
}

/// `E(X^k)` for the uniform-geometric maximum or minimum.
pub fn sug_moment(kind: Kind, k: u32, theta: f64) -> Result<f64> {
    check_order(k)?;
    let theta = check_theta(theta)?;
    let sum: f64 = match kind {
        Kind::Max => (0..=k)
            .map(|j| {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                binomial(k, j) * sign * power_integral(theta, j as i32 - 2)
            })
            .sum(),
        Kind::Min => (0..=k)
            .map(|j| {
                binomial(k, j)
                    * (-theta).powi(j as i32)
                    * power_integral(theta, k as i32 - j as i32 - 2)
            })
            .sum(),
    };
    Ok(theta / (1.0 - theta).powi(k as i32 + 1) * sum)
}

/// `E(X^k)` for the correlated uniform-geometric maximum or minimum.
pub fn csug_moment(kind: Kind, k: u32, theta: f64) -> Result<f64> {
    check_order(k)?;
    let theta = check_theta(theta)?;
    let sum: f64 = match kind {
        Kind::Max => (0..=k)
            .map(|j| {
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                binomial(k, j) * sign * power_integral(theta, j as i32 - 2)
            })
            .sum(),
        Kind::Min => power_integral(theta, k as i32 - 2),
    };
    Ok(theta / (1.0 - theta) * sum)
}

// Shared variance of both uniform-geometric extremes:
// (theta^3 - 2 theta^2 - theta^2 ln^2 theta + theta) / (1 - theta)^4.
fn sug_variance(theta: f64) -> f64 {
    let e = 1.0 - theta;
    let h = log_excess(e);
    let h2 = log_excess2(e);
    theta * (-2.0 * h2 + 2.0 * h - h * h + e * h * h)
}

/// Mean and variance of the uniform-geometric extremes. Both kinds share
/// one variance; the means sum to one.
pub fn sug_mean_var(kind: Kind, theta: f64) -> Result<MeanVar> {
    let theta = check_theta(theta)?;
    let e = 1.0 - theta;
    // theta (ln theta + 1/theta - 1) / e^2 = 1 - theta h(e)
    let min_mean = theta * log_excess(e);
    let mean = match kind {
        Kind::Max => 1.0 - min_mean,
        Kind::Min => min_mean,
    };
    Ok(MeanVar {
        mean,
        var: sug_variance(theta),
    })
}

/// Mean and variance of the correlated uniform-geometric extremes. The
/// variance is the uniform-geometric one scaled by `(1 - theta)^2`.
pub fn csug_mean_var(kind: Kind, theta: f64) -> Result<MeanVar> {
    let theta = check_theta(theta)?;
    let e = 1.0 - theta;
    // -theta ln theta / (1 - theta) = theta (1 + e h(e))
    let min_mean = theta * (1.0 + e * log_excess(e));
    let mean = match kind {
        Kind::Max => 1.0 - min_mean,
        Kind::Min => min_mean,
    };
    Ok(MeanVar {
        mean,
        var: sug_variance(theta) * e * e,
    })
}

/// Mean, variance and moment generating function of the uniform-input,
/// zero-truncated Poisson count model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UniformPoissonStats {
    pub kind: Kind,
    pub lambda: f64,
    pub mean: f64,
    pub var: f64,
}

pub fn uniform_poisson_stats(kind: Kind, lambda: f64) -> Result<UniformPoissonStats> {
    let l = check_lambda(lambda)?;
    let q = (-l).exp();
    let c = 1.0 / (1.0 - q);
    let (mean, var) = match kind {
        Kind::Max => (c - 1.0 / l, 1.0 / (l * l) + c - c * c),
        // Y and 1 - Z have the same law, so the variances agree.
        Kind::Min => (1.0 / l - q * c, 1.0 / (l * l) + c - c * c),
    };
    Ok(UniformPoissonStats {
        kind,
        lambda: l,
        mean,
        var,
    })
}

/// A commonly quoted misprint of the minimum's variance,
/// `1/l^2 - e^-l / (l (1 - e^-l)) - e^-2l / (1 - e^-l)^2`. It agrees with
/// the true variance only at `lambda = 1` and goes negative for small
/// `lambda`; kept so the discrepancy can be measured.
pub fn uniform_poisson_min_variance_as_printed(lambda: f64) -> Result<f64> {
    let l = check_lambda(lambda)?;
    let q = (-l).exp();
    let c = 1.0 / (1.0 - q);
    Ok(1.0 / (l * l) - q * c / l - q * q * c * c)
}

impl UniformPoissonStats {
    /// `E(exp(tX))`. The published expressions have a removable singularity
    /// at `t = -lambda` (max) or `t = lambda` (min); a Taylor branch covers
    /// `|t -/+ lambda| < 1e-6`, and `t = 0` returns exactly one.
    pub fn mgf(&self, t: f64) -> f64 {
        if t == 0.0 {
            return 1.0;
        }
        let l = self.lambda;
        let norm = l / -(-l).exp_m1();
        let (scale, u) = match self.kind {
            Kind::Max => ((-l).exp(), t + l),
            Kind::Min => ((-l).exp(), t - l),
        };
        let ratio = if u.abs() < 1e-6 {
            1.0 + u / 2.0 + u * u / 6.0
        } else {
            u.exp_m1() / u
        };
        match self.kind {
            // lambda e^-lambda (e^(t+lambda) - 1) / ((t + lambda)(1 - e^-lambda))
            Kind::Max => norm * scale * ratio,
            // lambda (e^(t-lambda) - 1) / ((t - lambda)(1 - e^-lambda))
            Kind::Min => norm * ratio,
        }
    }
}
