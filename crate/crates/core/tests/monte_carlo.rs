//! Seeded sampling against quadrature moments.

mod common;

use common::representative;
use randext_core::{Catalogue, ExtremeLaw, RandomSource};

fn mean_sd(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

#[test]
fn sample_means_match_quadrature_means() {
    let n = 200_000;
    for (stream, &entry) in Catalogue::ALL.iter().enumerate() {
        let model = representative(entry);
        let mut src = RandomSource::new(17, stream as u64);
        let xs: Vec<f64> = (0..n).map(|_| model.sample(&mut src)).collect();
        let (mean, sd) = mean_sd(&xs);
        let target = model.moment(1).unwrap();
        let z = (mean - target) / (sd / (n as f64).sqrt());
        assert!(z.abs() < 4.0, "{model}: mean {mean} vs {target}, z = {z}");
    }
}

#[test]
fn draws_stay_in_support() {
    for entry in Catalogue::ALL {
        let model = representative(entry);
        let (lo, hi) = model.support();
        let mut src = RandomSource::new(3, 0);
        for _ in 0..100_000 {
            let x = model.sample(&mut src);
            assert!((lo..=hi).contains(&x), "{model}: {x}");
        }
    }
}

#[test]
fn empirical_cdf_tracks_model_cdf() {
    let n = 100_000;
    for entry in Catalogue::ALL {
        let model = representative(entry);
        let mut src = RandomSource::new(5, 1);
        let mut xs: Vec<f64> = (0..n).map(|_| model.sample(&mut src)).collect();
        xs.sort_by(f64::total_cmp);
        let mut d = 0.0f64;
        for (i, &x) in xs.iter().enumerate().step_by(97) {
            let f = model.cdf(x).unwrap();
            d = d.max((f - i as f64 / n as f64).abs());
            d = d.max((f - (i + 1) as f64 / n as f64).abs());
        }
        // 1.63 / sqrt(n) is the 1% Kolmogorov-Smirnov critical value.
        assert!(d < 1.63 / (n as f64).sqrt(), "{model}: D = {d}");
    }
}

#[test]
fn same_seed_same_stream_same_draws() {
    let model = representative(Catalogue::ZipfUniformMax);
    let draw = |seed, stream| {
        let mut src = RandomSource::new(seed, stream);
        (0..1000)
            .map(|_| model.sample(&mut src))
            .collect::<Vec<_>>()
    };
    assert_eq!(draw(9, 2), draw(9, 2));
    assert_ne!(draw(9, 2), draw(9, 3));
}
