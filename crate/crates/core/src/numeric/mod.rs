//! Exact scalar domains.
//!
//! Everything above this module is generic over [`Scalar`], which is
//! implemented by [`Rational`] (the main domain) and by
//! [`PrimeFieldElement`] (odd prime fields, used by the exhaustive oracles).

mod prime_field;
mod rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use prime_field::{PrimeField, PrimeFieldElement};
pub use rational::Rational;

use crate::error::Result;

/// A field of characteristic different from 2 with exact arithmetic.
///
/// Constants are produced relative to an existing value (`zero_like`,
/// `int_like`) so that domains whose elements carry runtime context,
/// such as the modulus of a prime field, fit the same interface.
///
/// The operator impls are infallible; for `PrimeFieldElement` they panic
/// on a modulus mismatch, which the generic code never produces because
/// every constant is derived from an operand.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn int_like(&self, n: i64) -> Self;

    fn is_zero(&self) -> bool;

    /// Multiplicative inverse, `Error::DivisionByZero` for zero.
    fn try_inv(&self) -> Result<Self>;

    fn zero_like(&self) -> Self {
        self.int_like(0)
    }

    fn one_like(&self) -> Self {
        self.int_like(1)
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self.clone() * rhs.try_inv()?)
    }

    /// `self / 2`; always defined since the characteristic is odd or zero.
    fn half(&self) -> Self {
        self.try_div(&self.int_like(2))
            .expect("2 is invertible in characteristic ≠ 2")
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}
