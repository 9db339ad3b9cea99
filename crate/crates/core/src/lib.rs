//! Exact arithmetic for the ternary algebra of a binary quadratic form.

pub mod cli;
pub mod compose;
pub mod conic;
pub mod error;
pub mod numeric;
pub mod oracle;
pub mod matalg;
pub mod quadform;
pub mod ternary;
pub mod values;

pub use error::{Error, Result};
pub use numeric::{PrimeField, PrimeFieldElement, Rational, Scalar};
pub use quadform::{FormInvariants, QuadraticForm};
