//! Oracle cross-checks for one resolved model.
//!
//! - normalization: |quadrature of the density over its support - 1| < 1e-8
//! - series: max |density - pgf-series density| over 999 interior points
//!   < 1e-8 (skipped for the correlated entries, which have no series form)
//! - moments k = 1, 2: |quadrature moment - reference| < 1e-8, where the
//!   reference is the printed formula when one exists and the pgf-scheme
//!   moment otherwise
//! - Monte Carlo: |z| < 4 for the sample mean of seeded draws

use std::f64::consts::PI;

use randext_core::closed_form::{csug_moment, sug_moment, uniform_poisson_stats};
use randext_core::numeric::try_integrate;
use randext_core::{Catalogue, ExtremeLaw, RandomSource, Tolerance};
use serde::Serialize;

use crate::model::Resolved;

pub const NORMALIZATION_TOL: f64 = 1e-8;
pub const SERIES_TOL: f64 = 1e-8;
pub const MOMENT_TOL: f64 = 1e-8;
pub const MC_Z_LIMIT: f64 = 4.0;
pub const SERIES_GRID: usize = 1000;

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum SeriesCheck {
    MaxAbsDiff(f64),
    Skipped(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct MomentCheck {
    pub k: u32,
    pub quadrature: f64,
    pub reference: f64,
    pub reference_source: &'static str,
    pub abs_diff: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonteCarloCheck {
    pub n: usize,
    pub seed: u64,
    pub stream: u64,
    pub sample_mean: f64,
    pub expected: f64,
    pub z: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub model: String,
    pub normalization_error: Option<f64>,
    pub series_max_abs_diff: Option<SeriesCheck>,
    pub moments: Vec<MomentCheck>,
    pub monte_carlo: Option<MonteCarloCheck>,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// NaN is never within tolerance.
fn within(v: f64, tol: f64) -> bool {
    v < tol
}

pub fn check(model: &Resolved, mc_n: usize, seed: u64, stream: u64) -> CheckReport {
    let law = model.law();
    let mut failures = Vec::new();
    let mut fail = |what: &str, e: &dyn std::fmt::Display| failures.push(format!("{what}: {e}"));

    let normalization_error = match law.normalization() {
        Ok(v) => {
            let err = (v - 1.0).abs();
            if !within(err, NORMALIZATION_TOL) {
                fail("normalization", &format!("error {err:e}"));
            }
            Some(err)
        }
        Err(e) => {
            fail("normalization", &e);
            None
        }
    };

    let series_max_abs_diff = match series_diff(model) {
        Ok(SeriesCheck::MaxAbsDiff(d)) => {
            if !within(d, SERIES_TOL) {
                fail("series", &format!("max difference {d:e}"));
            }
            Some(SeriesCheck::MaxAbsDiff(d))
        }
        Ok(skipped) => Some(skipped),
        Err(e) => {
            fail("series", &e);
            None
        }
    };

    let mut moments = Vec::new();
    for k in 1..=2 {
        match moment_check(model, k) {
            Ok(m) => {
                if !within(m.abs_diff, MOMENT_TOL) {
                    fail(
                        &format!("moment {k}"),
                        &format!("difference {:e}", m.abs_diff),
                    );
                }
                moments.push(m);
            }
            Err(e) => fail(&format!("moment {k}"), &e),
        }
    }

    let monte_carlo = match monte_carlo(law, mc_n, seed, stream) {
        Ok(mc) => {
            if !within(mc.z.abs(), MC_Z_LIMIT) {
                fail("monte carlo", &format!("z = {}", mc.z));
            }
            Some(mc)
        }
        Err(e) => {
            fail("monte carlo", &e);
            None
        }
    };

    CheckReport {
        model: model.to_string(),
        normalization_error,
        series_max_abs_diff,
        moments,
        monte_carlo,
        pass: failures.is_empty(),
        failures,
    }
}

fn series_diff(model: &Resolved) -> randext_core::Result<SeriesCheck> {
    let (reference, scheme): (&dyn Fn(f64) -> randext_core::Result<f64>, _) = match model {
        Resolved::Catalogue(m) => match m.scheme_model() {
            Some(s) => (&|x| Ok(m.cf_pdf(x)), s),
            None => return Ok(SeriesCheck::Skipped("skipped: correlated model".into())),
        },
        Resolved::Scheme(s) => (&|x| s.pdf_auto(x), *s),
    };
    let mut worst = 0.0f64;
    for i in 1..SERIES_GRID {
        let x = i as f64 / SERIES_GRID as f64;
        let d = (reference(x)? - scheme.pdf_series(x)?).abs();
        worst = worst.max(if d.is_nan() { f64::INFINITY } else { d });
    }
    Ok(SeriesCheck::MaxAbsDiff(worst))
}

fn moment_check(model: &Resolved, k: u32) -> randext_core::Result<MomentCheck> {
    let quadrature = model.law().moment(k)?;
    let (reference, reference_source) = reference_moment(model, k)?;
    Ok(MomentCheck {
        k,
        quadrature,
        reference,
        reference_source,
        abs_diff: (quadrature - reference).abs(),
    })
}

fn reference_moment(model: &Resolved, k: u32) -> randext_core::Result<(f64, &'static str)> {
    let scheme = match model {
        Resolved::Catalogue(m) => {
            let p = m.params();
            match m.entry() {
                Catalogue::SugMax | Catalogue::SugMin => {
                    let theta = p.theta.expect("validated");
                    return Ok((sug_moment(m.kind(), k, theta)?, "printed formula"));
                }
                Catalogue::CsugMax | Catalogue::CsugMin => {
                    let theta = p.theta.expect("validated");
                    return Ok((csug_moment(m.kind(), k, theta)?, "printed formula"));
                }
                Catalogue::UniformPoissonMax | Catalogue::UniformPoissonMin => {
                    let s = uniform_poisson_stats(m.kind(), p.lambda.expect("validated"))?;
                    return Ok(if k == 1 {
                        (s.mean, "printed formula")
                    } else {
                        (s.var + s.mean * s.mean, "closed form")
                    });
                }
                Catalogue::ZipfUniformMax if k == 1 => {
                    return Ok((6.0 / (PI * PI), "printed formula"));
                }
                // (6 / pi^2) * integral of -y ln(1 - y) over [0, 1], which is 3/4.
                Catalogue::ZipfUniformMax => {
                    return Ok((4.5 / (PI * PI), "closed form"));
                }
                _ => m.scheme_model().expect("independent entry"),
            }
        }
        Resolved::Scheme(s) => *s,
    };
    let v = try_integrate(
        |x| Ok(x.powi(k as i32) * scheme.pdf_series(x)?),
        0.0,
        1.0,
        Tolerance::default(),
    )?
    .value;
    Ok((v, "pgf series quadrature"))
}

fn monte_carlo(
    law: &dyn ExtremeLaw,
    n: usize,
    seed: u64,
    stream: u64,
) -> randext_core::Result<MonteCarloCheck> {
    let expected = law.moment(1)?;
    let mut src = RandomSource::new(seed, stream);
    let (mut sum, mut sum_sq) = (0.0, 0.0);
    for _ in 0..n {
        let x = law.sample(&mut src) - expected;
        sum += x;
        sum_sq += x * x;
    }
    let nf = n as f64;
    let centred_mean = sum / nf;
    let var = (sum_sq - nf * centred_mean * centred_mean) / (nf - 1.0);
    let z = centred_mean / (var / nf).sqrt();
    Ok(MonteCarloCheck {
        n,
        seed,
        stream,
        sample_mean: expected + centred_mean,
        expected,
        z,
    })
}
