//! Exact coefficient fields.
//!
//! Two fields cover every computation in this crate: arbitrary-precision
//! rationals [`Rational`], and the real quadratic extension [`QuadExt`]
//! of elements `r + s*sqrt5`, which houses the golden ratio. The
//! [`Field`] trait is what the polynomial and linear-algebra layers are
//! generic over; values are immutable and arithmetic is total except for
//! division by zero, which is an explicit error, never a panic on the
//! checked paths.

mod quadext;
mod rational;

pub use quadext::QuadExt;
pub use rational::Rational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?} as a field element")]
    Parse(String),
}

/// An exact field of characteristic zero with a canonical representation:
/// two elements are equal iff their representations are identical.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + FromStr
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    /// Short name used in report metadata, e.g. `QQ`.
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_int(n: i64) -> Self;

    /// Multiplicative inverse; `Err(DivisionByZero)` on zero.
    fn inv(&self) -> Result<Self, FieldError>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self.clone() * rhs.inv()?)
    }

    /// Division that panics on a zero divisor. Callers are expected to
    /// have established the divisor is nonzero.
    fn div_exact(&self, rhs: &Self) -> Self {
        self.checked_div(rhs).expect("division by zero")
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}
