//! Reading observed extremes from a file.

use std::fs;
use std::path::Path;

use randext_core::estimation::Sample;

use crate::CliError;

/// Reads values separated by newlines and/or commas. Blank lines and lines
/// starting with `#` are skipped, and so is a first data line that does not
/// parse as numbers (a header). Values must lie in `[0, 1]`.
pub fn read_sample(path: &Path) -> Result<Sample, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let values = parse_values(&text).map_err(|e| match e {
        CliError::Invalid(msg) => CliError::Invalid(format!("{}: {msg}", path.display())),
        other => other,
    })?;
    Ok(Sample::new(values)?)
}

pub fn parse_values(text: &str) -> Result<Vec<f64>, CliError> {
    let mut values = Vec::new();
    let mut first_data_line = true;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parsed: Result<Vec<f64>, _> = line
            .split(',')
            .map(str::trim)
            .filter(|f| !f.is_empty())
            .map(str::parse::<f64>)
            .collect();
        match parsed {
            Ok(row) => values.extend(row),
            Err(_) if first_data_line => {}
            Err(_) => {
                return Err(CliError::Invalid(format!(
                    "line {}: '{line}' is not a list of numbers",
                    lineno + 1
                )))
            }
        }
        first_data_line = false;
    }
    if values.is_empty() {
        return Err(CliError::Invalid("no values found".into()));
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepted_layouts() {
        assert_eq!(
            parse_values("0.2,0.4,0.35\n").unwrap(),
            vec![0.2, 0.4, 0.35]
        );
        assert_eq!(parse_values("value\n0.2\n0.4\n").unwrap(), vec![0.2, 0.4]);
        assert_eq!(
            parse_values("# generated\n\nvalue\n1e-1\n 0.3 \n").unwrap(),
            vec![0.1, 0.3]
        );
    }

    #[test]
    fn rejected_layouts() {
        assert!(parse_values("0.1\nabc\n").is_err());
        assert!(parse_values("header only\n").is_err());
        assert!(parse_values("").is_err());
    }
}
