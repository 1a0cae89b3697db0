use crate::count::CountDistribution;
use crate::law::Kind;
use crate::numeric::RandomSource;

const LITERAL_LIMIT: u64 = 32;

/// One draw from the correlated geometric model.
///
/// Trials stop at the first exceedance of the threshold, so N - 1 is
/// geometric on `{1, 2, ...}` and, given N, the earlier trials are uniform on
/// the side of the threshold they fell on. The maximum is taken over that
/// many draws from `U[0, 1 - theta]`, the minimum over draws from
/// `U[theta, 1]`.
///
/// `theta` must already be validated (see [`crate::ClosedFormModel::new`]).
pub fn csug_sample(kind: Kind, theta: f64, src: &mut RandomSource) -> f64 {
    let pre_threshold = CountDistribution::Geometric { theta }.sample(src);
    let width = 1.0 - theta;
    // Standard-uniform extreme on [0, 1): max for Kind::Max, min for Kind::Min.
    let unit = if pre_threshold <= LITERAL_LIMIT {
        let draws = (0..pre_threshold).map(|_| src.next_uniform());
        match kind {
            Kind::Max => draws.fold(0.0, f64::max),
            Kind::Min => draws.fold(1.0, f64::min),
        }
    } else {
        let w = -(src.next_open_uniform().ln() / pre_threshold as f64).exp_m1();
        match kind {
            Kind::Max => 1.0 - w,
            Kind::Min => w,
        }
    };
    match kind {
        Kind::Max => (width * unit).min(width),
        Kind::Min => (theta + width * unit).clamp(theta, 1.0),
    }
}
