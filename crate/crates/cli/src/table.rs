//! Grids and CSV tables.
//!
//! Tables carry `#`-prefixed metadata lines, then a single header line, then
//! rows. Reals are written in scientific notation with 17 significant
//! digits, which round-trips every `f64` exactly.

use crate::CliError;

const MAX_GRID_POINTS: usize = 10_000_000;

/// Parses `start:stop:step`. Both ends are included when the step divides
/// the range (up to rounding); otherwise the grid stops at the last point
/// not beyond `stop`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let bad = || CliError::Invalid(format!("grid '{spec}' must look like start:stop:step"));
    let parts: Vec<f64> = spec
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    let [start, stop, step] = parts[..] else {
        return Err(bad());
    };
    if !(start.is_finite() && stop.is_finite() && step.is_finite()) || step <= 0.0 || stop < start {
        return Err(CliError::Invalid(format!(
            "grid '{spec}' needs finite start <= stop and step > 0"
        )));
    }
    let steps = ((stop - start) / step + 1e-9).floor();
    if steps >= MAX_GRID_POINTS as f64 {
        return Err(CliError::Invalid(format!(
            "grid '{spec}' has too many points"
        )));
    }
    let steps = steps as usize;
    let mut xs: Vec<f64> = (0..=steps).map(|i| start + i as f64 * step).collect();
    if let Some(last) = xs.last_mut() {
        if (*last - stop).abs() <= 1e-9 * step {
            *last = stop;
        }
    }
    Ok(xs)
}

/// Parses a comma-separated list of reals.
pub fn parse_list(spec: &str) -> Result<Vec<f64>, CliError> {
    spec.split(',')
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Invalid(format!("'{p}' in '{spec}' is not a number")))
        })
        .collect()
}

pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    meta: Vec<(String, String)>,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self {
            header: header.iter().map(|h| h.to_string()).collect(),
            ..Self::default()
        }
    }

    pub fn meta(mut self, key: &str, value: impl ToString) -> Self {
        self.meta.push((key.to_string(), value.to_string()));
        self
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}
