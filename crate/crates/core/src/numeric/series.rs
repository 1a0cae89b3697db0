use super::Tolerance;
use crate::error::{Error, Result};

/// Sums `term(1) + term(2) + ...` until `tail_bound(n)`, an upper bound on
/// `|sum_{m > n} term(m)|`, drops below the tolerance.
///
/// The relative part of the tolerance is applied to the running partial sum.
pub fn sum_series<T, B>(mut term: T, tail_bound: B, tol: Tolerance) -> Result<f64>
where
    T: FnMut(u64) -> f64,
    B: FnMut(u64) -> f64,
{
    try_sum_series(|n| Ok(term(n)), tail_bound, tol)
}

pub fn try_sum_series<T, B>(mut term: T, mut tail_bound: B, tol: Tolerance) -> Result<f64>
where
    T: FnMut(u64) -> Result<f64>,
    B: FnMut(u64) -> f64,
{
    let mut sum = 0.0;
    // Kahan compensation; slowly converging series add up many small terms.
    let mut carry = 0.0;
    let mut bound = f64::INFINITY;
    for n in 1..=tol.max_evals as u64 {
        let t = term(n)?;
        if !t.is_finite() {
            return Err(Error::NonFinite {
                at: n as f64,
                value: t,
            });
        }
        let y = t - carry;
        let s = sum + y;
        carry = (s - sum) - y;
        sum = s;
        bound = tail_bound(n);
        if bound <= tol.target(sum) {
            return Ok(sum);
        }
    }
    Err(Error::BudgetExceeded {
        estimate: sum,
        error_bound: bound,
        evals: tol.max_evals,
    })
}
