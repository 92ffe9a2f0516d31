//! Scalar abstraction: the linear algebra kernels are generic over any
//! exact field, instantiated at `Q` (arbitrary-precision rationals) and at
//! `Qt` (univariate rational functions over `Q`).

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::BigRational;
use num_traits::{One, Zero};

/// An exact field: arithmetic never rounds, equality is decidable.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// The ground field of the toolkit: exact rationals in lowest terms.
pub type Q = BigRational;

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Rational `p/q`. Panics on zero denominator.
pub fn q(p: i64, den: i64) -> Q {
    Q::new(p.into(), den.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(-3, -6), q(1, 2));
        assert_eq!(q(1, -2), q(-1, 2));
    }
}
