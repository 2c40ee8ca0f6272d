use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Field, Ring, Scalar};

/// First-order jet `value + Σ partials[i] ε_i` with `ε_i ε_j = 0`.
///
/// Partials past the end of the vector are zero, so constants carry an empty
/// list and mix freely with jets over any number of directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet1 {
    pub value: Scalar,
    pub partials: Vec<Scalar>,
}

impl Jet1 {
    pub fn constant(value: Scalar) -> Self {
        Jet1 {
            value,
            partials: Vec::new(),
        }
    }

    /// The jet of the coordinate `value + ε_direction`.
    pub fn variable(value: Scalar, direction: usize, ndirs: usize) -> Self {
        let mut partials = vec![Scalar::zero(); ndirs.max(direction + 1)];
        partials[direction] = Scalar::one();
        Jet1 { value, partials }
    }

    /// The jet of `value + ε · velocity` along a single direction.
    pub fn along(value: Scalar, velocity: Scalar) -> Self {
        Jet1 {
            value,
            partials: vec![velocity],
        }
    }

    pub fn partial(&self, direction: usize) -> Scalar {
        self.partials
            .get(direction)
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    fn zip_partials(&self, other: &Jet1, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Vec<Scalar> {
        let zero = Scalar::zero();
        let n = self.partials.len().max(other.partials.len());
        (0..n)
            .map(|i| {
                f(
                    self.partials.get(i).unwrap_or(&zero),
                    other.partials.get(i).unwrap_or(&zero),
                )
            })
            .collect()
    }
}

impl Add for Jet1 {
    type Output = Jet1;

    fn add(self, rhs: Jet1) -> Jet1 {
        Jet1 {
            partials: self.zip_partials(&rhs, |a, b| a + b),
            value: self.value + rhs.value,
        }
    }
}

impl Sub for Jet1 {
    type Output = Jet1;

    fn sub(self, rhs: Jet1) -> Jet1 {
        Jet1 {
            partials: self.zip_partials(&rhs, |a, b| a - b),
            value: self.value - rhs.value,
        }
    }
}

impl Neg for Jet1 {
    type Output = Jet1;

    fn neg(self) -> Jet1 {
        Jet1 {
            value: -self.value,
            partials: self.partials.into_iter().map(|p| -p).collect(),
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Jet1 {
    type Output = Jet1;

    fn mul(self, rhs: Jet1) -> Jet1 {
        let (a, b) = (&self.value, &rhs.value);
        Jet1 {
            partials: self.zip_partials(&rhs, |da, db| da * b + a * db),
            value: a * b,
        }
    }
}

impl Div for Jet1 {
    type Output = Jet1;

    /// Panics if the divisor's value is zero.
    fn div(self, rhs: Jet1) -> Jet1 {
        assert!(!rhs.value.is_zero(), "jet division by zero value");
        let (a, b) = (&self.value, &rhs.value);
        let b2 = b * b;
        Jet1 {
            partials: self.zip_partials(&rhs, |da, db| (da * b - a * db) / &b2),
            value: a / b,
        }
    }
}

impl Zero for Jet1 {
    fn zero() -> Self {
        Jet1::constant(Scalar::zero())
    }

    fn is_zero(&self) -> bool {
        self.value.is_zero() && self.partials.iter().all(Zero::is_zero)
    }
}

impl One for Jet1 {
    fn one() -> Self {
        Jet1::constant(Scalar::one())
    }
}

impl Ring for Jet1 {
    fn from_scalar(c: &Scalar) -> Self {
        Jet1::constant(c.clone())
    }

    fn scale(&self, c: &Scalar) -> Self {
        Jet1 {
            value: &self.value * c,
            partials: self.partials.iter().map(|p| p * c).collect(),
        }
    }
}

impl Field for Jet1 {
    fn is_invertible(&self) -> bool {
        !self.value.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, q, MultiPoly};

    #[test]
    fn epsilon_squares_to_zero() {
        let e = Jet1::variable(int(0), 0, 1);
        let sq = e.clone() * e;
        assert!(sq.is_zero());
    }

    #[test]
    fn quotient_rule() {
        // d/dx (x / (1 + x)) at x = 1 is 1/4
        let x = Jet1::variable(int(1), 0, 1);
        let f = x.clone() / (Jet1::one() + x);
        assert_eq!(f.value, q(1, 2));
        assert_eq!(f.partial(0), q(1, 4));
    }

    #[test]
    fn polynomial_gradient() {
        let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
        let p = MultiPoly::parse("x^2*y - 3*y^3", &vars).unwrap();
        let point = [
            Jet1::variable(int(2), 0, 2),
            Jet1::variable(q(-1, 3), 1, 2),
        ];
        let j = p.eval(&point);
        assert_eq!(j.value, p.eval(&[int(2), q(-1, 3)]));
        assert_eq!(j.partial(0), int(2 * 2) * q(-1, 3));
        assert_eq!(j.partial(1), int(4) - int(9) * q(1, 9));
    }
}
