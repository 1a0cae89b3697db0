use std::fmt;

use clap::{Args, ValueEnum};
use randext_core::{
    Catalogue, ClosedFormModel, CountDistribution, ExtremeLaw, ExtremeModel, InputDistribution,
    Kind, Params,
};

use crate::CliError;

/// Default parameter grid used when a model is named without parameters.
pub const GRID_THETAS: [f64; 3] = [0.2, 0.5, 0.8];
pub const GRID_LAMBDAS: [f64; 3] = [0.5, 1.0, 3.0];
pub const GRID_SHAPES: [f64; 3] = [0.5, 1.0, 2.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputLaw {
    Uniform,
    Beta22,
    Arcsine,
    ToppLeone,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountLaw {
    Geometric,
    ShiftedGeometric,
    Poisson,
    Zipf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Max,
    Min,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Max => Kind::Max,
            KindArg::Min => Kind::Min,
        }
    }
}

/// Selects a model either by catalogue name or as an
/// (input law, count law, extreme) triple.
#[derive(Debug, Clone, Default, Args)]
pub struct ModelArgs {
    /// Catalogue entry, e.g. sug-max, csug-min, geom-arcsine-min
    #[arg(long, conflicts_with_all = ["input_law", "count_law", "kind"])]
    pub model: Option<String>,

    /// Law of the i.i.d. inputs (with --count-law and --kind)
    #[arg(long, value_enum, requires_all = ["count_law", "kind"])]
    pub input_law: Option<InputLaw>,

    /// Law of the sample size N (with --input-law and --kind)
    #[arg(long, value_enum, requires_all = ["input_law", "kind"])]
    pub count_law: Option<CountLaw>,

    /// Which extreme (with --input-law and --count-law)
    #[arg(long, value_enum, requires_all = ["input_law", "count_law"])]
    pub kind: Option<KindArg>,

    /// Geometric parameter in (0, 1)
    #[arg(long)]
    pub theta: Option<f64>,

    /// Poisson rate, > 0
    #[arg(long)]
    pub lambda: Option<f64>,

    /// Topp-Leone shape, > 0
    #[arg(long)]
    pub a: Option<f64>,

    /// Zipf exponent, > 1
    #[arg(long, default_value_t = 2.0)]
    pub zipf_k: f64,

    /// Use the unnormalized misprinted variant of the geom-arcsine-min density
    #[arg(long)]
    pub as_printed: bool,
}

/// A fully resolved model.
#[derive(Debug, Clone, Copy)]
pub enum Resolved {
    Catalogue(ClosedFormModel),
    Scheme(ExtremeModel),
}

impl Resolved {
    pub fn law(&self) -> &dyn ExtremeLaw {
        match self {
            Resolved::Catalogue(m) => m,
            Resolved::Scheme(m) => m,
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Resolved::Catalogue(m) => m.kind(),
            Resolved::Scheme(m) => m.kind,
        }
    }
}

impl fmt::Display for Resolved {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Resolved::Catalogue(m) => write!(f, "{m}"),
            Resolved::Scheme(m) => write!(f, "{m}"),
        }
    }
}

impl ModelArgs {
    pub fn catalogue_entry(&self) -> Result<Option<Catalogue>, CliError> {
        self.model
            .as_deref()
            .map(|name| name.parse::<Catalogue>().map_err(CliError::Invalid))
            .transpose()
    }

    fn params(&self) -> Params {
        Params {
            theta: self.theta,
            lambda: self.lambda,
            a: self.a,
        }
    }

    /// Exactly one model from the flags as given.
    pub fn resolve(&self) -> Result<Resolved, CliError> {
        if let Some(entry) = self.catalogue_entry()? {
            return self.catalogue(entry, self.params());
        }
        let (Some(input), Some(count), Some(kind)) = (self.input_law, self.count_law, self.kind)
        else {
            return Err(CliError::Usage(
                "a model is required: --model <name> or --input-law/--count-law/--kind".into(),
            ));
        };
        let need = |v: Option<f64>, flag: &str| {
            v.ok_or_else(|| CliError::Invalid(format!("--{flag} is required for this model")))
        };
        let input = match input {
            InputLaw::Uniform => InputDistribution::Uniform,
            InputLaw::Beta22 => InputDistribution::Beta22,
            InputLaw::Arcsine => InputDistribution::Arcsine,
            InputLaw::ToppLeone => InputDistribution::topp_leone(need(self.a, "a")?)?,
        };
        let count = match count {
            CountLaw::Geometric => CountDistribution::geometric(need(self.theta, "theta")?)?,
            CountLaw::ShiftedGeometric => {
                CountDistribution::shifted_geometric(need(self.theta, "theta")?)?
            }
            CountLaw::Poisson => CountDistribution::trunc_poisson(need(self.lambda, "lambda")?)?,
            CountLaw::Zipf => CountDistribution::zipf(self.zipf_k)?,
        };
        Ok(Resolved::Scheme(ExtremeModel::new(
            input,
            count,
            kind.into(),
        )))
    }

    fn catalogue(&self, entry: Catalogue, params: Params) -> Result<Resolved, CliError> {
        let mut model = ClosedFormModel::new(entry, params)?;
        if self.as_printed {
            if entry != Catalogue::GeomArcsineMin {
                return Err(CliError::Invalid(
                    "--as-printed only applies to geom-arcsine-min".into(),
                ));
            }
            model = model.with_printed_arcsine_min();
        }
        Ok(Resolved::Catalogue(model))
    }

    /// The models a `check` run covers: the named model, expanded over the
    /// default grid for every required parameter that was not given; every
    /// catalogue entry on that grid when no model is named.
    pub fn resolve_grid(&self) -> Result<Vec<Resolved>, CliError> {
        if self.input_law.is_some() {
            return Ok(vec![self.resolve()?]);
        }
        let entries = match self.catalogue_entry()? {
            Some(e) => vec![e],
            None if self.as_printed => {
                return Err(CliError::Usage(
                    "--as-printed requires --model geom-arcsine-min".into(),
                ))
            }
            None => Catalogue::ALL.to_vec(),
        };
        let mut out = Vec::new();
        for entry in entries {
            for params in self.expand(entry) {
                out.push(self.catalogue(entry, params)?);
            }
        }
        Ok(out)
    }

    fn expand(&self, entry: Catalogue) -> Vec<Params> {
        let pick = |given: Option<f64>, needed: bool, grid: &[f64]| -> Vec<Option<f64>> {
            match (needed, given) {
                (false, _) => vec![None],
                (true, Some(v)) => vec![Some(v)],
                (true, None) => grid.iter().map(|&v| Some(v)).collect(),
            }
        };
        let mut out = Vec::new();
        for theta in pick(self.theta, entry.needs_theta(), &GRID_THETAS) {
            for lambda in pick(self.lambda, entry.needs_lambda(), &GRID_LAMBDAS) {
                for a in pick(self.a, entry.needs_shape(), &GRID_SHAPES) {
                    out.push(Params { theta, lambda, a });
                }
            }
        }
        out
    }
}
