//! Catalogue of extreme-value laws with analytic densities.
//!
//! Densities are transcribed term for term from their published forms rather
//! than assembled from [`crate::input`] and [`crate::count`], so that
//! comparing them with [`ExtremeModel`] is a genuine two-route check. The two
//! correlated geometric entries (`CsugMax`, `CsugMin`) have no counterpart in
//! the general scheme and are checked against quadrature and simulation only.

mod csug;
mod moments;

pub use csug::csug_sample;
pub use moments::{
    csug_mean_var, csug_moment, sug_mean_var, sug_moment, uniform_poisson_min_variance_as_printed,
    uniform_poisson_stats, MeanVar, UniformPoissonStats,
};

use std::f64::consts::{FRAC_1_PI, FRAC_2_PI, PI};
use std::fmt;
use std::str::FromStr;

use crate::compound::ExtremeModel;
use crate::count::{check_lambda, check_theta, CountDistribution};
use crate::error::{Error, Result};
use crate::input::InputDistribution;
use crate::law::{ExtremeLaw, Kind};
use crate::numeric::{try_integrate, RandomSource, Tolerance};

/// Tag of a catalogue entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Catalogue {
    SugMax,
    SugMin,
    CsugMax,
    CsugMin,
    UniformPoissonMax,
    UniformPoissonMin,
    ZipfUniformMax,
    GeomBeta22Max,
    GeomBeta22Min,
    PoissonBeta22Max,
    PoissonBeta22Min,
    GeomArcsineMax,
    GeomArcsineMin,
    PoissonArcsineMax,
    PoissonArcsineMin,
    GeomTlMax,
    GeomTlMin,
    PoissonTlMax,
    PoissonTlMin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum InputTag {
    Uniform,
    Beta22,
    Arcsine,
    ToppLeone,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CountTag {
    Geometric,
    CorrelatedGeometric,
    Poisson,
    Zipf2,
}

impl Catalogue {
    pub const ALL: [Catalogue; 19] = [
        Catalogue::SugMax,
        Catalogue::SugMin,
        Catalogue::CsugMax,
        Catalogue::CsugMin,
        Catalogue::UniformPoissonMax,
        Catalogue::UniformPoissonMin,
        Catalogue::ZipfUniformMax,
        Catalogue::GeomBeta22Max,
        Catalogue::GeomBeta22Min,
        Catalogue::PoissonBeta22Max,
        Catalogue::PoissonBeta22Min,
        Catalogue::GeomArcsineMax,
        Catalogue::GeomArcsineMin,
        Catalogue::PoissonArcsineMax,
        Catalogue::PoissonArcsineMin,
        Catalogue::GeomTlMax,
        Catalogue::GeomTlMin,
        Catalogue::PoissonTlMax,
        Catalogue::PoissonTlMin,
    ];

    pub fn name(self) -> &'static str {
        use Catalogue::*;
        match self {
            SugMax => "sug-max",
            SugMin => "sug-min",
            CsugMax => "csug-max",
            CsugMin => "csug-min",
            UniformPoissonMax => "uniform-poisson-max",
            UniformPoissonMin => "uniform-poisson-min",
            ZipfUniformMax => "zipf-uniform-max",
            GeomBeta22Max => "geom-beta22-max",
            GeomBeta22Min => "geom-beta22-min",
            PoissonBeta22Max => "poisson-beta22-max",
            PoissonBeta22Min => "poisson-beta22-min",
            GeomArcsineMax => "geom-arcsine-max",
            GeomArcsineMin => "geom-arcsine-min",
            PoissonArcsineMax => "poisson-arcsine-max",
            PoissonArcsineMin => "poisson-arcsine-min",
            GeomTlMax => "geom-tl-max",
            GeomTlMin => "geom-tl-min",
            PoissonTlMax => "poisson-tl-max",
            PoissonTlMin => "poisson-tl-min",
        }
    }

    pub fn kind(self) -> Kind {
        use Catalogue::*;
        match self {
            SugMax | CsugMax | UniformPoissonMax | ZipfUniformMax | GeomBeta22Max
            | PoissonBeta22Max | GeomArcsineMax | PoissonArcsineMax | GeomTlMax | PoissonTlMax => {
                Kind::Max
            }
            _ => Kind::Min,
        }
    }

    fn input_tag(self) -> InputTag {
        use Catalogue::*;
        match self {
            GeomBeta22Max | GeomBeta22Min | PoissonBeta22Max | PoissonBeta22Min => InputTag::Beta22,
            GeomArcsineMax | GeomArcsineMin | PoissonArcsineMax | PoissonArcsineMin => {
                InputTag::Arcsine
            }
            GeomTlMax | GeomTlMin | PoissonTlMax | PoissonTlMin => InputTag::ToppLeone,
            _ => InputTag::Uniform,
        }
    }

    fn count_tag(self) -> CountTag {
        use Catalogue::*;
        match self {
            CsugMax | CsugMin => CountTag::CorrelatedGeometric,
            ZipfUniformMax => CountTag::Zipf2,
            UniformPoissonMax | UniformPoissonMin | PoissonBeta22Max | PoissonBeta22Min
            | PoissonArcsineMax | PoissonArcsineMin | PoissonTlMax | PoissonTlMin => {
                CountTag::Poisson
            }
            _ => CountTag::Geometric,
        }
    }

    /// The count is built from the inputs themselves, so the general scheme
    /// does not apply.
    pub fn is_correlated(self) -> bool {
        self.count_tag() == CountTag::CorrelatedGeometric
    }

    pub fn needs_theta(self) -> bool {
        matches!(
            self.count_tag(),
            CountTag::Geometric | CountTag::CorrelatedGeometric
        )
    }

    /// Rate of the zero-truncated Poisson count.
    pub fn needs_lambda(self) -> bool {
        self.count_tag() == CountTag::Poisson
    }

    /// Topp-Leone shape.
    pub fn needs_shape(self) -> bool {
        self.input_tag() == InputTag::ToppLeone
    }
}

impl fmt::Display for Catalogue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Catalogue {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Catalogue::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown model '{s}'"))
    }
}

/// Parameter bundle; only the entries a model needs are read.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Params {
    pub theta: Option<f64>,
    pub lambda: Option<f64>,
    /// Topp-Leone shape.
    pub a: Option<f64>,
}

impl Params {
    pub fn theta(theta: f64) -> Self {
        Self {
            theta: Some(theta),
            ..Self::default()
        }
    }

    pub fn lambda(lambda: f64) -> Self {
        Self {
            lambda: Some(lambda),
            ..Self::default()
        }
    }

    pub fn with_a(mut self, a: f64) -> Self {
        self.a = Some(a);
        self
    }
}

/// A validated catalogue entry with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormModel {
    entry: Catalogue,
    params: Params,
    printed_arcsine_min: bool,
}

impl ClosedFormModel {
    pub fn new(entry: Catalogue, params: Params) -> Result<Self> {
        let model = entry.name();
        let mut kept = Params::default();
        if entry.needs_theta() {
            let theta = params.theta.ok_or(Error::MissingParameter {
                model,
                name: "theta",
            })?;
            kept.theta = Some(check_theta(theta)?);
        }
        if entry.needs_lambda() {
            let lambda = params.lambda.ok_or(Error::MissingParameter {
                model,
                name: "lambda",
            })?;
            kept.lambda = Some(check_lambda(lambda)?);
        }
        if entry.needs_shape() {
            let a = params
                .a
                .ok_or(Error::MissingParameter { model, name: "a" })?;
            InputDistribution::topp_leone(a)?;
            kept.a = Some(a);
        }
        Ok(Self {
            entry,
            params: kept,
            printed_arcsine_min: false,
        })
    }

    /// Switches `GeomArcsineMin` to a commonly quoted misprint of its
    /// density, whose denominator reads `(1-theta)(1-2/pi) arcsin(sqrt z)`
    /// where the general scheme gives `(1-theta)(1 - (2/pi) arcsin(sqrt z))`.
    /// The printed variant does not integrate to one; it exists so the
    /// discrepancy can be measured. No effect on other entries.
    pub fn with_printed_arcsine_min(mut self) -> Self {
        self.printed_arcsine_min = self.entry == Catalogue::GeomArcsineMin;
        self
    }

    pub fn is_printed_variant(&self) -> bool {
        self.printed_arcsine_min
    }

    pub fn entry(&self) -> Catalogue {
        self.entry
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn kind(&self) -> Kind {
        self.entry.kind()
    }

    fn theta(&self) -> f64 {
        self.params.theta.expect("validated at construction")
    }

    fn lambda(&self) -> f64 {
        self.params.lambda.expect("validated at construction")
    }

    fn shape(&self) -> f64 {
        self.params.a.expect("validated at construction")
    }

    /// The equivalent independent (input, count, kind) model, or `None` for
    /// the correlated entries.
    pub fn scheme_model(&self) -> Option<ExtremeModel> {
        let input = match self.entry.input_tag() {
            InputTag::Uniform => InputDistribution::Uniform,
            InputTag::Beta22 => InputDistribution::Beta22,
            InputTag::Arcsine => InputDistribution::Arcsine,
            InputTag::ToppLeone => InputDistribution::ToppLeone { a: self.shape() },
        };
        let count = match self.entry.count_tag() {
            CountTag::CorrelatedGeometric => return None,
            CountTag::Geometric => CountDistribution::Geometric {
                theta: self.theta(),
            },
            CountTag::Poisson => CountDistribution::TruncPoisson {
                lambda: self.lambda(),
            },
            CountTag::Zipf2 => CountDistribution::zipf(2.0).expect("k = 2 is valid"),
        };
        Some(ExtremeModel::new(input, count, self.kind()))
    }

    /// Density as published. Zero outside the support.
    pub fn cf_pdf(&self, x: f64) -> f64 {
        let (lo, hi) = self.support();
        if !(lo..=hi).contains(&x) {
            return 0.0;
        }
        use Catalogue::*;
        match self.entry {
            SugMax => {
                let t = self.theta();
                t / (1.0 - (1.0 - t) * x).powi(2)
            }
            SugMin => {
                let t = self.theta();
                t / (t + (1.0 - t) * x).powi(2)
            }
            CsugMax => {
                let t = self.theta();
                t / ((1.0 - t) * (1.0 - x).powi(2))
            }
            CsugMin => {
                let t = self.theta();
                t / ((1.0 - t) * x * x)
            }
            UniformPoissonMax => {
                let l = self.lambda();
                l * (-l).exp() * (l * x).exp() / (1.0 - (-l).exp())
            }
            UniformPoissonMin => {
                let l = self.lambda();
                l * (-l * x).exp() / (1.0 - (-l).exp())
            }
            ZipfUniformMax => {
                let c = 6.0 / (PI * PI);
                if x == 0.0 {
                    c
                } else {
                    // (1/y) ln(1/(1-y))
                    c / x * -(-x).ln_1p()
                }
            }
            GeomBeta22Max => {
                let t = self.theta();
                6.0 * x * (1.0 - x) * t / (1.0 - (1.0 - t) * x * x * (3.0 - 2.0 * x)).powi(2)
            }
            GeomBeta22Min => {
                let t = self.theta();
                let z = x;
                6.0 * z * (1.0 - z) * t
                    / (1.0 - (1.0 - t) * (2.0 * z.powi(3) - 3.0 * z * z + 1.0)).powi(2)
            }
            PoissonBeta22Max => {
                let l = self.lambda();
                6.0 * l * x * (1.0 - x) * (-l * (2.0 * x.powi(3) - 3.0 * x * x + 1.0)).exp()
                    / (1.0 - (-l).exp())
            }
            PoissonBeta22Min => {
                let l = self.lambda();
                6.0 * l * x * (1.0 - x) * (-l * (3.0 * x * x - 2.0 * x.powi(3))).exp()
                    / (1.0 - (-l).exp())
            }
            GeomArcsineMax => {
                let t = self.theta();
                t * FRAC_1_PI * (x * (1.0 - x)).powf(-0.5)
                    / (1.0 - (1.0 - t) * FRAC_2_PI * x.sqrt().asin()).powi(2)
            }
            GeomArcsineMin => {
                let t = self.theta();
                let head = t * FRAC_1_PI * (x * (1.0 - x)).powf(-0.5);
                if self.printed_arcsine_min {
                    head / (1.0 - (1.0 - t) * (1.0 - FRAC_2_PI) * x.sqrt().asin()).powi(2)
                } else {
                    head / (1.0 - (1.0 - t) * (1.0 - FRAC_2_PI * x.sqrt().asin())).powi(2)
                }
            }
            PoissonArcsineMax => {
                let l = self.lambda();
                l * FRAC_1_PI
                    * (x * (1.0 - x)).powf(-0.5)
                    * (-l * (1.0 - FRAC_2_PI * x.sqrt().asin())).exp()
                    / (1.0 - (-l).exp())
            }
            PoissonArcsineMin => {
                let l = self.lambda();
                l * FRAC_1_PI * (x * (1.0 - x)).powf(-0.5) * (-2.0 * l * x.sqrt().asin() / PI).exp()
                    / (1.0 - (-l).exp())
            }
            GeomTlMax => {
                let (t, a) = (self.theta(), self.shape());
                2.0 * a * (1.0 - x) * x.powf(a - 1.0) * (2.0 - x).powf(a - 1.0) * t
                    / (1.0 - (1.0 - t) * x.powf(a) * (2.0 - x).powf(a)).powi(2)
            }
            GeomTlMin => {
                let (t, a) = (self.theta(), self.shape());
                2.0 * a * (1.0 - x) * x.powf(a - 1.0) * (2.0 - x).powf(a - 1.0) * t
                    / (1.0 - (1.0 - t) * (1.0 - x.powf(a) * (2.0 - x).powf(a))).powi(2)
            }
            PoissonTlMax => {
                let (l, a) = (self.lambda(), self.shape());
                2.0 * l
                    * a
                    * (1.0 - x)
                    * x.powf(a - 1.0)
                    * (2.0 - x).powf(a - 1.0)
                    * (-l * (1.0 - x.powf(a) * (2.0 - x).powf(a))).exp()
                    / (1.0 - (-l).exp())
            }
            PoissonTlMin => {
                let (l, a) = (self.lambda(), self.shape());
                2.0 * l
                    * a
                    * (1.0 - x)
                    * x.powf(a - 1.0)
                    * (2.0 - x).powf(a - 1.0)
                    * (-l * x.powf(a) * (2.0 - x).powf(a)).exp()
                    / (1.0 - (-l).exp())
            }
        }
    }

    /// Distribution function: an antiderivative where one is elementary,
    /// quadrature of [`Self::cf_pdf`] otherwise. Clamped to 0 and 1 outside
    /// the support.
    pub fn cf_cdf(&self, x: f64) -> Result<f64> {
        let (lo, hi) = self.support();
        if x.is_nan() {
            return Err(Error::Domain {
                what: "x",
                value: x,
                domain: "real numbers",
            });
        }
        if x <= lo {
            return Ok(0.0);
        }
        if x >= hi {
            return Ok(1.0);
        }
        use Catalogue::*;
        Ok(match self.entry {
            SugMax => {
                let t = self.theta();
                t * x / (1.0 - (1.0 - t) * x)
            }
            SugMin => {
                let t = self.theta();
                x / (t + (1.0 - t) * x)
            }
            CsugMax => {
                let t = self.theta();
                t * x / ((1.0 - t) * (1.0 - x))
            }
            CsugMin => {
                let t = self.theta();
                (x - t) / ((1.0 - t) * x)
            }
            UniformPoissonMax => {
                let l = self.lambda();
                (l * x).exp_m1() / l.exp_m1()
            }
            UniformPoissonMin => {
                let l = self.lambda();
                (-l * x).exp_m1() / (-l).exp_m1()
            }
            _ => {
                let area =
                    try_integrate(|y| Ok(self.cf_pdf(y)), lo, x, Tolerance::default())?.value;
                area.clamp(0.0, 1.0)
            }
        })
    }
}

impl ExtremeLaw for ClosedFormModel {
    fn support(&self) -> (f64, f64) {
        match self.entry {
            Catalogue::CsugMax => (0.0, 1.0 - self.theta()),
            Catalogue::CsugMin => (self.theta(), 1.0),
            _ => (0.0, 1.0),
        }
    }

    fn pdf(&self, x: f64) -> Result<f64> {
        Ok(self.cf_pdf(x))
    }

    fn cdf(&self, x: f64) -> Result<f64> {
        self.cf_cdf(x)
    }

    /// Correlated entries use the geometric-count construction; every other
    /// entry simulates its independent (input, count) process.
    fn sample(&self, src: &mut RandomSource) -> f64 {
        match self.scheme_model() {
            Some(model) => model.sample(src),
            None => csug_sample(self.kind(), self.theta(), src),
        }
    }
}

impl fmt::Display for ClosedFormModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entry)?;
        if let Some(t) = self.params.theta {
            write!(f, " theta={t}")?;
        }
        if let Some(l) = self.params.lambda {
            write!(f, " lambda={l}")?;
        }
        if let Some(a) = self.params.a {
            write!(f, " a={a}")?;
        }
        if self.printed_arcsine_min {
            write!(f, " (as printed)")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn default_params() -> Params {
        Params {
            theta: Some(0.5),
            lambda: Some(1.0),
            a: Some(2.0),
        }
    }

    fn model(entry: Catalogue) -> ClosedFormModel {
        ClosedFormModel::new(entry, default_params()).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for c in Catalogue::ALL {
            assert_eq!(c.name().parse::<Catalogue>().unwrap(), c);
        }
        assert!("sug".parse::<Catalogue>().is_err());
    }

    #[test]
    fn missing_and_invalid_parameters() {
        assert!(matches!(
            ClosedFormModel::new(Catalogue::SugMax, Params::default()),
            Err(Error::MissingParameter { name: "theta", .. })
        ));
        assert!(matches!(
            ClosedFormModel::new(Catalogue::PoissonTlMin, Params::lambda(1.0)),
            Err(Error::MissingParameter { name: "a", .. })
        ));
        assert!(ClosedFormModel::new(Catalogue::SugMax, Params::theta(1.0)).is_err());
        assert!(ClosedFormModel::new(Catalogue::UniformPoissonMax, Params::lambda(-1.0)).is_err());
        assert!(ClosedFormModel::new(Catalogue::ZipfUniformMax, Params::default()).is_ok());
        // extraneous parameters are dropped
        let m = ClosedFormModel::new(Catalogue::SugMax, default_params()).unwrap();
        assert_eq!(m.params(), Params::theta(0.5));
    }

    #[test]
    fn pdf_examples() {
        assert_eq!(model(Catalogue::SugMax).cf_pdf(0.0), 0.5);
        let v = model(Catalogue::CsugMax).cf_pdf(0.25);
        assert!((v - 0.5 / (0.5 * 0.5625)).abs() < 1e-15);
        assert!((v - 1.777_778).abs() < 1e-6);
        let z = model(Catalogue::ZipfUniformMax).cf_pdf(0.5);
        assert!((z - 0.842_766).abs() < 1e-6);
        // outside the support
        assert_eq!(model(Catalogue::CsugMax).cf_pdf(0.75), 0.0);
        assert_eq!(model(Catalogue::CsugMin).cf_pdf(0.25), 0.0);
        assert_eq!(model(Catalogue::SugMax).cf_pdf(1.5), 0.0);
    }

    #[test]
    fn cdf_examples() {
        assert_eq!(model(Catalogue::CsugMax).cf_cdf(0.5).unwrap(), 1.0);
        assert!((model(Catalogue::SugMax).cf_cdf(0.5).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(model(Catalogue::CsugMin).cf_cdf(1.0).unwrap(), 1.0);
        assert_eq!(model(Catalogue::CsugMin).cf_cdf(0.2).unwrap(), 0.0);
        assert!(model(Catalogue::SugMax).cf_cdf(f64::NAN).is_err());
    }

    #[test]
    fn cdf_matches_scheme_pgf_form() {
        for entry in Catalogue::ALL {
            let m = model(entry);
            let Some(scheme) = m.scheme_model() else {
                continue;
            };
            for i in 1..20 {
                let x = i as f64 / 20.0;
                let a = m.cf_cdf(x).unwrap();
                let b = scheme.cdf(x).unwrap();
                assert!((a - b).abs() < 1e-9, "{m} at {x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn pdf_matches_scheme() {
        for entry in Catalogue::ALL {
            let m = model(entry);
            let Some(scheme) = m.scheme_model() else {
                continue;
            };
            for i in 1..200 {
                let x = i as f64 / 200.0;
                let a = m.cf_pdf(x);
                let b = scheme.pdf(x).unwrap();
                assert!((a - b).abs() < 1e-10 * b.max(1.0), "{m} at {x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn printed_arcsine_min_differs_from_scheme() {
        let scheme_form = model(Catalogue::GeomArcsineMin);
        let printed = scheme_form.with_printed_arcsine_min();
        let scheme = scheme_form.scheme_model().unwrap();
        let worst = (1..100)
            .map(|i| {
                let x = i as f64 / 100.0;
                (printed.cf_pdf(x) - scheme.pdf(x).unwrap()).abs()
            })
            .fold(0.0, f64::max);
        assert!(worst > 0.1, "{worst}");
        assert!((printed.normalization().unwrap() - 1.0).abs() > 1e-3);
        // flag ignored elsewhere
        assert!(!model(Catalogue::SugMax)
            .with_printed_arcsine_min()
            .is_printed_variant());
    }

    #[test]
    fn csug_supports() {
        assert_eq!(model(Catalogue::CsugMax).support(), (0.0, 0.5));
        assert_eq!(model(Catalogue::CsugMin).support(), (0.5, 1.0));
        assert!(model(Catalogue::CsugMax).scheme_model().is_none());
    }
}
