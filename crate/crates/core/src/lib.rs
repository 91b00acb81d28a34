//! Exact q-series arithmetic for Eisenstein series of level 1 and level 2.
//!
//! The crate builds `E_{2k}`, `E*_{2k}`, `Δ`, `θ3` and friends over exact
//! rationals, works in the graded rings `Q[E2, E4, E6]` and `Q[A, B, C]`
//! with their Serre derivatives, and runs a registry of identity checks
//! ([`verify`]) coefficient by coefficient up to a chosen truncation order.
//!
//! ```
//! use eisenstein::series::eisenstein_level2;
//!
//! let a = eisenstein_level2(1, 8);
//! let b = eisenstein_level2(2, 8);
//! // q A' = (A² - B) / 4
//! let rhs = (&(&a * &a) - &b).scale(&eisenstein::scalars::rat(1, 4));
//! assert_eq!(a.theta(), rhs);
//! ```

pub mod arith;
pub mod error;
pub mod export;
pub mod graded;
pub mod linalg;
pub mod qseries;
pub mod scalars;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use graded::{GradedPoly, Ring};
pub use qseries::QSeries;
pub use scalars::PiScaled;
pub use series::{SeriesCatalog, SeriesName};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub(crate) fn serialize_rational<S: serde::Serializer>(
    r: &Rational,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    serializer.collect_str(r)
}
