use super::Tolerance;
use crate::error::{Error, Result};

const GRID_POINTS: usize = 256;
const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Location and value of a maximum found by [`maximize_1d`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Maximum {
    pub argmax: f64,
    pub value: f64,
    pub evals: usize,
    /// The winning point is one of the interval ends.
    pub at_boundary: bool,
}

/// Maximizes `f` on `[lo, hi]`.
///
/// A 256-point grid (both ends included) picks the best cell, ties going to
/// the smaller abscissa; golden-section search then refines inside the two
/// neighbouring cells until the bracket is narrower than `tol.abs_tol`.
/// For unimodal `f` the result is within `abs_tol` of the true argmax.
pub fn maximize_1d<F>(mut f: F, lo: f64, hi: f64, tol: Tolerance) -> Result<Maximum>
where
    F: FnMut(f64) -> f64,
{
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Domain {
            what: "search interval",
            value: hi - lo,
            domain: "finite lo < hi",
        });
    }
    let mut evals = 0usize;
    let mut eval = |x: f64, evals: &mut usize| -> Result<f64> {
        *evals += 1;
        let y = f(x);
        if y.is_nan() || y == f64::INFINITY {
            Err(Error::NonFinite { at: x, value: y })
        } else {
            Ok(y)
        }
    };

    let step = (hi - lo) / (GRID_POINTS - 1) as f64;
    let grid_x = |i: usize| {
        if i == GRID_POINTS - 1 {
            hi
        } else {
            lo + step * i as f64
        }
    };
    let mut best_i = 0;
    let mut best_y = f64::NEG_INFINITY;
    for i in 0..GRID_POINTS {
        let y = eval(grid_x(i), &mut evals)?;
        if y > best_y {
            best_y = y;
            best_i = i;
        }
    }
    if best_y == f64::NEG_INFINITY {
        return Err(Error::NonFinite {
            at: grid_x(0),
            value: best_y,
        });
    }

    let mut a = grid_x(best_i.saturating_sub(1));
    let mut b = grid_x((best_i + 1).min(GRID_POINTS - 1));
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = eval(c, &mut evals)?;
    let mut fd = eval(d, &mut evals)?;
    while b - a > tol.abs_tol && evals < tol.max_evals {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = eval(c, &mut evals)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = eval(d, &mut evals)?;
        }
    }
    let (mut argmax, mut value) = if fc >= fd { (c, fc) } else { (d, fd) };
    let grid_best = grid_x(best_i);
    if best_y > value || (best_y == value && grid_best < argmax) {
        argmax = grid_best;
        value = best_y;
    }
    let at_boundary = argmax == lo || argmax == hi;
    Ok(Maximum {
        argmax,
        value,
        evals,
        at_boundary,
    })
}

/// Solves `f(x) = target` for nondecreasing `f` on `[lo, hi]` by bisection,
/// stopping once the bracket is narrower than `x_tol`.
///
/// The caller guarantees `f(lo) <= target <= f(hi)`; outside that range the
/// nearer end is returned.
pub fn bisect_increasing<F>(mut f: F, target: f64, mut lo: f64, mut hi: f64, x_tol: f64) -> f64
where
    F: FnMut(f64) -> f64,
{
    for _ in 0..200 {
        if hi - lo <= x_tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
