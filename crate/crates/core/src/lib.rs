//! Starlike functions with respect to a generator: power series, growth and
//! distortion bounds, radius problems and membership checks for the classes
//! `F(ψ) = { f : z f'(z)/f(z) − 1 ≺ ψ(z) }`.

pub mod error;
pub mod fixtures;
pub mod generator;
pub mod growth;
pub mod membership;
pub mod numerics;
pub mod output;
pub mod radii;
pub mod run;
pub mod series;
pub mod special;
pub mod winding;

pub use error::{Error, Result};
pub use generator::GeneratorSpec;
pub use num_complex::Complex64 as Complex;
pub use series::PowerSeries;

/// `2 − √3`.
pub const TWO_MINUS_SQRT3: f64 = 0.267_949_192_431_122_7;
/// `3 − 2√2`.
pub const THREE_MINUS_TWO_SQRT2: f64 = 0.171_572_875_253_809_9;
