use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Unsigned};

use crate::{Error, Result};

/// Nonnegative integer type a count can be accumulated in.
///
/// Implemented for every unsigned primitive and for [`crate::Count`].
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Integer
    + Unsigned
    + CheckedAdd
    + CheckedMul
    + CheckedSub
    + FromPrimitive
    + Send
    + Sync
{
}

impl<T> Scalar for T where
    T: Clone
        + Debug
        + Display
        + Integer
        + Unsigned
        + CheckedAdd
        + CheckedMul
        + CheckedSub
        + FromPrimitive
        + Send
        + Sync
{
}

pub(crate) fn lift<T: Scalar>(v: u64, what: &'static str) -> Result<T> {
    T::from_u64(v).ok_or(Error::Overflow(what))
}

pub(crate) fn add<T: Scalar>(x: &T, y: &T, what: &'static str) -> Result<T> {
    x.checked_add(y).ok_or(Error::Overflow(what))
}

pub(crate) fn mul<T: Scalar>(x: &T, y: &T, what: &'static str) -> Result<T> {
    x.checked_mul(y).ok_or(Error::Overflow(what))
}

/// Division that must be exact; a remainder is a bug, not an input error.
pub(crate) fn exact_div<T: Scalar>(num: &T, den: &T, what: &'static str) -> T {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "{what}: inexact division {num} / {den}");
    q
}
