//! Distributions of the maximum and minimum of a random number N of i.i.d.
//! variables supported on `[0, 1]`.
//!
//! - [`input`] and [`count`] hold the laws of the inputs and of N.
//! - [`compound`] builds any independent (input, count, extreme) model from
//!   the pgf of N; it doubles as the oracle for the closed forms.
//! - [`closed_form`] is the catalogue of analytic models, including the
//!   correlated geometric construction that the general scheme cannot express.
//! - [`estimation`] recovers the geometric parameter from observed extremes.

pub mod closed_form;
pub mod compound;
pub mod count;
mod error;
pub mod estimation;
pub mod input;
mod law;
pub mod numeric;

pub use closed_form::{Catalogue, ClosedFormModel, Params};
pub use compound::ExtremeModel;
pub use count::CountDistribution;
pub use error::{Error, Result};
pub use input::InputDistribution;
pub use law::{ExtremeLaw, Kind};
pub use numeric::{RandomSource, Tolerance};
