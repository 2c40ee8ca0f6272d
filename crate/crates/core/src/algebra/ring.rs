use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Scalar;

/// Commutative ring with a canonical embedding of the rationals.
///
/// Group laws, brackets and chart maps are written once against this trait
/// and then evaluated on scalars, jets or polynomials.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_scalar(c: &Scalar) -> Self;

    fn scale(&self, c: &Scalar) -> Self {
        self.clone() * Self::from_scalar(c)
    }
}

pub trait Field: Ring + Div<Output = Self> {
    /// Whether division by `self` is defined.
    fn is_invertible(&self) -> bool;
}

impl Ring for Scalar {
    fn from_scalar(c: &Scalar) -> Self {
        c.clone()
    }
}

impl Field for Scalar {
    fn is_invertible(&self) -> bool {
        !self.is_zero()
    }
}
