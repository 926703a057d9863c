//! Scalar traits shared by the generic linear algebra and cone code.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer as NumInteger;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact, signed integer ring usable as the coordinate type of lattices.
///
/// Implemented for `i64`, `i128` and `num_bigint::BigInt`. Machine integers
/// are only safe when the caller knows entries stay small; the crate-level
/// aliases all use `BigInt`.
pub trait Integer:
    NumInteger
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("integer type cannot represent i64 value")
    }
}

impl<T> Integer for T where
    T: NumInteger
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Rationals over an exact integer type, always in lowest terms with a
/// positive denominator.
pub type Rational<T> = Ratio<T>;

pub(crate) fn gcd_all<'a, T: Integer + 'a>(values: impl IntoIterator<Item = &'a T>) -> T {
    values
        .into_iter()
        .fold(T::zero(), |acc, v| acc.gcd(v))
}

pub(crate) fn lcm_all<'a, T: Integer + 'a>(values: impl IntoIterator<Item = &'a T>) -> T {
    values.into_iter().fold(T::one(), |acc, v| acc.lcm(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn gcd_and_lcm_fold() {
        let v: Vec<BigInt> = [12, -18, 30].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(gcd_all(&v), BigInt::from(6));
        let d: Vec<i64> = vec![4, 6, 10];
        assert_eq!(lcm_all(&d), 60);
        assert_eq!(gcd_all::<i64>(&[]), 0);
    }
}
