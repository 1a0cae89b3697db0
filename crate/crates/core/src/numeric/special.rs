//! Special functions needed by the count laws and the moment formulas.

use std::f64::consts::PI;

/// Riemann zeta for real `k > 1`: a direct sum of the first 99 terms plus an
/// Euler-Maclaurin tail.
pub(crate) fn zeta(k: f64) -> f64 {
    const N: f64 = 100.0;
    let head: f64 = (1..100).map(|n| (n as f64).powf(-k)).sum();
    let fk = N.powf(-k);
    let tail = N.powf(1.0 - k) / (k - 1.0) + 0.5 * fk + k * fk / (12.0 * N)
        - k * (k + 1.0) * (k + 2.0) * fk / (720.0 * N.powi(3))
        + k * (k + 1.0) * (k + 2.0) * (k + 3.0) * (k + 4.0) * fk / (30240.0 * N.powi(5));
    head + tail
}

/// Dilogarithm `Li2(s) = sum s^n / n^2` on `[0, 1]`.
pub(crate) fn dilog(s: f64) -> f64 {
    if s == 1.0 {
        return PI * PI / 6.0;
    }
    if s <= 0.5 {
        dilog_series(s)
    } else {
        // Euler reflection.
        PI * PI / 6.0 - s.ln() * (-s).ln_1p() - dilog_series(1.0 - s)
    }
}

fn dilog_series(s: f64) -> f64 {
    let mut sum: f64 = 0.0;
    let mut power = s;
    let mut n = 1.0;
    while power > 1e-18 * sum.max(f64::MIN_POSITIVE) || n < 2.0 {
        sum += power / (n * n);
        power *= s;
        n += 1.0;
        if power == 0.0 {
            break;
        }
    }
    sum
}

/// `(-ln(1 - e) - e) / e^2`, accurate for all `e` in `(0, 1)`.
pub(crate) fn log_excess(e: f64) -> f64 {
    if e < 0.1 {
        power_series(e, 2.0)
    } else {
        (-(-e).ln_1p() - e) / (e * e)
    }
}

/// `(log_excess(e) - 1/2) / e`.
pub(crate) fn log_excess2(e: f64) -> f64 {
    if e < 0.1 {
        power_series(e, 3.0)
    } else {
        (log_excess(e) - 0.5) / e
    }
}

// sum_{j >= 0} e^j / (j + offset)
fn power_series(e: f64, offset: f64) -> f64 {
    let mut sum = 0.0;
    let mut power = 1.0;
    let mut j = 0.0;
    while power > 1e-18 {
        sum += power / (j + offset);
        power *= e;
        j += 1.0;
    }
    sum
}

pub(crate) fn ln_factorial(n: u64) -> f64 {
    libm::lgamma(n as f64 + 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_two_and_four() {
        assert!((zeta(2.0) - PI * PI / 6.0).abs() < 1e-14);
        assert!((zeta(4.0) - PI.powi(4) / 90.0).abs() < 1e-14);
    }

    #[test]
    fn zeta_two_against_brute_force_sum() {
        // 10^7 terms plus the integral bounds on the remainder.
        let n = 10_000_000u64;
        let partial: f64 = (1..=n).rev().map(|m| 1.0 / (m as f64 * m as f64)).sum();
        let lower = partial + 1.0 / (n as f64 + 1.0);
        let upper = partial + 1.0 / n as f64;
        let z = zeta(2.0);
        assert!(
            z >= lower - 1e-15 && z <= upper + 1e-15,
            "{lower} {z} {upper}"
        );
    }

    #[test]
    fn dilog_known_values() {
        assert!((dilog(0.5) - (PI * PI / 12.0 - 0.5 * 2f64.ln().powi(2))).abs() < 1e-15);
        assert_eq!(dilog(0.0), 0.0);
        assert!((dilog(1.0 - 1e-12) - PI * PI / 6.0).abs() < 1e-10);
        // direct series at 0.9 to many terms
        let direct: f64 = (1..5000).map(|n| 0.9f64.powi(n) / (n as f64).powi(2)).sum();
        assert!((dilog(0.9) - direct).abs() < 1e-14);
    }

    #[test]
    fn log_excess_is_continuous_across_branch() {
        let below = log_excess(0.1 - 1e-12);
        let above = log_excess(0.1 + 1e-12);
        assert!((below - above).abs() < 1e-12);
        let below = log_excess2(0.1 - 1e-12);
        let above = log_excess2(0.1 + 1e-12);
        assert!((below - above).abs() < 1e-10);
        assert!((log_excess(1e-9) - 0.5).abs() < 1e-9);
        assert!((log_excess2(1e-9) - 1.0 / 3.0).abs() < 1e-9);
    }

    #[test]
    fn ln_factorial_small() {
        assert!((ln_factorial(0)).abs() < 1e-15);
        assert!((ln_factorial(5) - 120f64.ln()).abs() < 1e-13);
    }
}
