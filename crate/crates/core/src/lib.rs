//! Exact computations with motions of subsets of low-dimensional spaces:
//! piecewise-linear flows of the interval, line and circle; motions of
//! compact subsets of the interval; braids and strand sets of planar points;
//! groupoid quotients; and SVG schematics.
//!
//! Everything is generic over [`scalar::Scalar`]; the aliases below fix the
//! exact rational instantiation used throughout the tests and the CLI.

pub mod braid;
pub mod error;
pub mod groupoid;
pub mod interval;
pub mod io;
pub mod pl;
pub mod render;
pub mod sample;
pub mod scalar;
pub mod strands;
pub mod subset;

pub use error::{Error, Result};
pub use pl::Ambient;

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
pub type Homeo = pl::PlHomeo<Rational>;
pub type Flow = pl::PlFlow<Rational>;
pub type Worldline = pl::Worldline<Rational>;
pub type Subset = subset::CompactSubset<Rational>;

/// Floating-point instantiations, for previews only: equality is not decidable.
pub type Homeo64 = pl::PlHomeo<f64>;
pub type Flow64 = pl::PlFlow<f64>;
pub type Config = strands::PointConfig<Rational>;
pub type Strands = strands::StrandSet<Rational>;
