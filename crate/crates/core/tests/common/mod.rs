#![allow(dead_code)]

use randext_core::{Catalogue, ClosedFormModel, Params};

pub const THETAS: [f64; 3] = [0.2, 0.5, 0.8];
pub const LAMBDAS: [f64; 3] = [0.5, 1.0, 3.0];
pub const SHAPES: [f64; 3] = [0.5, 1.0, 2.0];

/// Every catalogue entry at every point of the default parameter grid.
pub fn grid_models() -> Vec<ClosedFormModel> {
    Catalogue::ALL.iter().flat_map(|&e| models_for(e)).collect()
}

pub fn models_for(entry: Catalogue) -> Vec<ClosedFormModel> {
    let mut base: Vec<Params> = if entry.needs_theta() {
        THETAS.iter().map(|&t| Params::theta(t)).collect()
    } else if entry.needs_lambda() {
        LAMBDAS.iter().map(|&l| Params::lambda(l)).collect()
    } else {
        vec![Params::default()]
    };
    if entry.needs_shape() {
        base = base
            .into_iter()
            .flat_map(|p| SHAPES.iter().map(move |&a| p.with_a(a)))
            .collect();
    }
    base.into_iter()
        .map(|p| ClosedFormModel::new(entry, p).unwrap())
        .collect()
}

/// One representative parameter point per entry.
pub fn representative(entry: Catalogue) -> ClosedFormModel {
    let p = Params {
        theta: Some(0.5),
        lambda: Some(1.0),
        a: Some(2.0),
    };
    ClosedFormModel::new(entry, p).unwrap()
}

/// `n - 1` interior points `i / n`.
pub fn interior(n: usize) -> impl Iterator<Item = f64> {
    (1..n).map(move |i| i as f64 / n as f64)
}
