//! Numeric traits the exact formulas and series code are generic over.
//!
//! Counts use [`CountInt`]: anything with checked ring operations, so fixed
//! words (`u64`, `u128`) surface overflow as [`Error::Overflow`] while
//! `BigUint` never does. Polynomial coefficients use [`Coefficient`], a
//! commutative ring with negation (`i64`, `BigInt`, `Ratio<BigInt>`).

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Num, One, Zero};

use crate::error::{Error, Result};

/// Exact integer type usable for counts.
pub trait CountInt:
    Clone + Ord + Debug + Display + Zero + One + CheckedAdd + CheckedSub + CheckedMul + FromPrimitive
{
}

impl<T> CountInt for T where
    T: Clone
        + Ord
        + Debug
        + Display
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
{
}

/// Commutative ring element usable as a polynomial coefficient.
pub trait Coefficient: Num + Neg<Output = Self> + Clone + Debug {}

impl<T> Coefficient for T where T: Num + Neg<Output = T> + Clone + Debug {}

pub(crate) fn lift<T: CountInt>(v: u64, what: &'static str) -> Result<T> {
    T::from_u64(v).ok_or(Error::Overflow(what))
}

pub(crate) fn add<T: CountInt>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

pub(crate) fn mul<T: CountInt>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

pub(crate) fn sub<T: CountInt>(a: &T, b: &T, what: &'static str) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow(what))
}

/// `2^e`, checked.
pub(crate) fn pow2<T: CountInt>(e: u32, what: &'static str) -> Result<T> {
    let two = lift::<T>(2, what)?;
    let mut acc = T::one();
    for _ in 0..e {
        acc = mul(&acc, &two, what)?;
    }
    Ok(acc)
}

/// `k * v`, checked, for a small non-negative multiplier.
pub(crate) fn scale<T: CountInt>(k: u64, v: &T, what: &'static str) -> Result<T> {
    mul(&lift::<T>(k, what)?, v, what)
}
