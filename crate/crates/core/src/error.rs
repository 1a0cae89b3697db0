use thiserror::Error;

/// Errors produced by evaluators, samplers and estimators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument fell outside the domain of the operation.
    #[error("{what} = {value} is outside the domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    /// A model parameter is missing, non-finite or out of range.
    #[error("invalid parameter {name} = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// A required model parameter was not supplied.
    #[error("model {model} requires parameter {name}")]
    MissingParameter {
        model: &'static str,
        name: &'static str,
    },

    /// Quadrature or series summation hit its evaluation budget before
    /// reaching the requested tolerance.
    #[error(
        "evaluation budget of {evals} exhausted: best estimate {estimate}, error bound {error_bound}"
    )]
    BudgetExceeded {
        estimate: f64,
        error_bound: f64,
        evals: usize,
    },

    /// A function returned NaN or an infinity where a finite value is needed.
    #[error("non-finite value {value} at x = {at}")]
    NonFinite { at: f64, value: f64 },

    /// The sample cannot produce an estimate inside (0, 1).
    #[error("degenerate sample: {0}")]
    DegenerateSample(String),

    /// The target of a moment inversion lies outside the range of the mean map.
    #[error("mean {mean} is outside the attainable range ({lo}, {hi})")]
    MeanOutOfRange { mean: f64, lo: f64, hi: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for failures of the numerical machinery, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::NonFinite { .. })
    }
}

pub(crate) fn check_unit(what: &'static str, x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain {
            what,
            value: x,
            domain: "[0, 1]",
        })
    }
}
