//! Scalar abstraction for exact arithmetic.
//!
//! Everything that can grow (weights, pairings, Weyl dimensions, slopes) is
//! written against [`Scalar`], an exact signed integer type. Rationals are
//! `Ratio<T>`. `BigInt` never overflows; `i64` is faster and reports
//! overflow as [`Error::Overflow`](crate::Error::Overflow) through checked
//! operations.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

pub trait Scalar:
    Integer
    + Signed
    + Clone
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + FromPrimitive
        + ToPrimitive
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

pub(crate) fn int<T: Scalar>(v: i64) -> Result<T> {
    T::from_i64(v).ok_or(Error::Overflow)
}

pub(crate) fn ratio<T: Scalar>(numer: i64, denom: i64) -> Result<Ratio<T>> {
    Ok(Ratio::new(int(numer)?, int(denom)?))
}

pub(crate) fn mul<T: Scalar>(a: &Ratio<T>, b: &Ratio<T>) -> Result<Ratio<T>> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

pub(crate) fn add<T: Scalar>(a: &Ratio<T>, b: &Ratio<T>) -> Result<Ratio<T>> {
    a.checked_add(b).ok_or(Error::Overflow)
}

/// Converts an integral rational to `i64`, if it fits.
pub fn ratio_to_i64<T: Scalar>(r: &Ratio<T>) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}
