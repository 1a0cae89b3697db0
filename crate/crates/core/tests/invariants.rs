//! Normalization, moment and shape invariants of the catalogue.

mod common;

use common::grid_models;
use proptest::prelude::*;
use randext_core::closed_form::{csug_mean_var, csug_moment, sug_mean_var, sug_moment};
use randext_core::{Catalogue, ClosedFormModel, ExtremeLaw, Kind, Params};

const MOMENT_THETAS: [f64; 5] = [0.1, 0.3, 0.5, 0.7, 0.9];

#[test]
fn every_catalogue_density_integrates_to_one() {
    for model in grid_models() {
        let v = model.normalization().unwrap();
        assert!((v - 1.0).abs() <= 1e-8, "{model}: {v}");
    }
}

#[test]
fn printed_arcsine_min_is_not_a_density() {
    let m = ClosedFormModel::new(Catalogue::GeomArcsineMin, Params::theta(0.5))
        .unwrap()
        .with_printed_arcsine_min();
    assert!((m.normalization().unwrap() - 1.0).abs() > 1e-3);
}

#[test]
fn moment_sums_match_quadrature() {
    for theta in MOMENT_THETAS {
        for (entry, printed) in [
            (Catalogue::SugMax, sug_moment as fn(Kind, u32, f64) -> _),
            (Catalogue::SugMin, sug_moment),
            (Catalogue::CsugMax, csug_moment),
            (Catalogue::CsugMin, csug_moment),
        ] {
            let model = ClosedFormModel::new(entry, Params::theta(theta)).unwrap();
            for k in 1..=5 {
                let sum = printed(entry.kind(), k, theta).unwrap();
                let quad = model.moment(k).unwrap();
                assert!((sum - quad).abs() < 1e-8, "{model} k={k}: {sum} vs {quad}");
            }
        }
    }
}

#[test]
fn mean_and_variance_match_first_two_moments() {
    for theta in MOMENT_THETAS {
        for kind in [Kind::Max, Kind::Min] {
            for (mv, moment) in [
                (
                    sug_mean_var(kind, theta).unwrap(),
                    sug_moment as fn(Kind, u32, f64) -> _,
                ),
                (csug_mean_var(kind, theta).unwrap(), csug_moment),
            ] {
                let m1 = moment(kind, 1, theta).unwrap();
                let m2 = moment(kind, 2, theta).unwrap();
                assert!((mv.mean - m1).abs() < 1e-10);
                assert!((mv.var - (m2 - m1 * m1)).abs() < 1e-10, "{kind} {theta}");
            }
        }
    }
}

#[test]
fn variance_identities() {
    for i in 1..100 {
        let theta = i as f64 / 100.0;
        let sug_max = sug_mean_var(Kind::Max, theta).unwrap().var;
        let sug_min = sug_mean_var(Kind::Min, theta).unwrap().var;
        let csug_max = csug_mean_var(Kind::Max, theta).unwrap().var;
        let csug_min = csug_mean_var(Kind::Min, theta).unwrap().var;
        assert!((sug_max - sug_min).abs() < 1e-12);
        assert!((csug_max - csug_min).abs() < 1e-12);
        assert!((csug_max - sug_max * (1.0 - theta).powi(2)).abs() < 1e-12);
        assert!(csug_max < sug_max);
    }
}

#[test]
fn figure_shapes() {
    for theta in [0.1, 0.2, 0.5, 0.8, 0.95] {
        let p = Params::theta(theta);
        let sug_max = ClosedFormModel::new(Catalogue::SugMax, p).unwrap();
        let sug_min = ClosedFormModel::new(Catalogue::SugMin, p).unwrap();
        let csug_max = ClosedFormModel::new(Catalogue::CsugMax, p).unwrap();
        let csug_min = ClosedFormModel::new(Catalogue::CsugMin, p).unwrap();
        let n = 500;
        let on = |lo: f64, hi: f64| (0..=n).map(move |i| lo + (hi - lo) * i as f64 / n as f64);
        let pairs = |m: &ClosedFormModel, lo: f64, hi: f64| {
            let ys: Vec<f64> = on(lo, hi).map(|x| m.cf_pdf(x)).collect();
            ys.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>()
        };
        assert!(pairs(&sug_max, 0.0, 1.0).iter().all(|(a, b)| b >= a));
        assert!(pairs(&sug_min, 0.0, 1.0).iter().all(|(a, b)| b <= a));
        assert!(pairs(&csug_max, 0.0, 1.0 - theta)
            .iter()
            .all(|(a, b)| b > a));
        assert!(pairs(&csug_min, theta, 1.0).iter().all(|(a, b)| b < a));
    }
}

proptest! {
    #[test]
    fn cdfs_are_monotone_probabilities(
        idx in 0usize..19,
        theta in 0.01f64..0.99,
        lambda in 0.1f64..5.0,
        a in 0.3f64..3.0,
        x in 0.0f64..1.0,
        dx in 0.0f64..0.5,
    ) {
        let entry = Catalogue::ALL[idx];
        let p = Params { theta: Some(theta), lambda: Some(lambda), a: Some(a) };
        let m = ClosedFormModel::new(entry, p).unwrap();
        let lo = m.cdf(x).unwrap();
        let hi = m.cdf((x + dx).min(1.0)).unwrap();
        prop_assert!((0.0..=1.0).contains(&lo));
        prop_assert!(hi >= lo - 1e-12);
        prop_assert!(m.cf_pdf(x) >= 0.0);
    }

    #[test]
    fn mean_lies_in_support(theta in 1e-6f64..(1.0 - 1e-6)) {
        for kind in [Kind::Max, Kind::Min] {
            let s = sug_mean_var(kind, theta).unwrap();
            let c = csug_mean_var(kind, theta).unwrap();
            prop_assert!(s.mean > 0.0 && s.mean < 1.0 && s.var > 0.0);
            prop_assert!(c.mean > 0.0 && c.mean < 1.0 && c.var >= 0.0);
            match kind {
                Kind::Max => prop_assert!(c.mean <= 1.0 - theta),
                Kind::Min => prop_assert!(c.mean >= theta),
            }
        }
    }
}
