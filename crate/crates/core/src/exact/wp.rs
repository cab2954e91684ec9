//! Points of weighted projective space with witness-based equality.

use super::poly::MultiPoly;
use super::rational::Rational;
use crate::error::Error;
use num_traits::{One, Zero};

/// Coordinates a weighted point can carry.
pub trait WpScalar: Clone + PartialEq + std::fmt::Debug {
    fn is_zero_value(&self) -> bool;
    fn times(&self, other: &Self) -> Self;
    fn one_like(&self) -> Self;

    fn power(&self, e: u32) -> Self {
        let mut acc = self.one_like();
        for _ in 0..e {
            acc = acc.times(self);
        }
        acc
    }
}

impl WpScalar for Rational {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
}

impl WpScalar for MultiPoly {
    fn is_zero_value(&self) -> bool {
        self.is_zero()
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.vars())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WPPoint<T: WpScalar> {
    weights: Vec<u32>,
    coords: Vec<T>,
}

impl<T: WpScalar> WPPoint<T> {
    /// Rejects length mismatches and the all-zero tuple.
    pub fn new(weights: Vec<u32>, coords: Vec<T>) -> Result<Self, Error> {
        if weights.len() != coords.len() {
            return Err(Error::WeightMismatch { left: weights, right: vec![coords.len() as u32] });
        }
        if coords.iter().all(|c| c.is_zero_value()) {
            return Err(Error::DegeneratePoint);
        }
        Ok(WPPoint { weights, coords })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    /// `λ·b`, i.e. `(λ^{wᵢ} bᵢ)`.
    pub fn scaled(&self, lambda: &T) -> Self {
        WPPoint {
            weights: self.weights.clone(),
            coords: self
                .coords
                .iter()
                .zip(&self.weights)
                .map(|(c, &w)| lambda.power(w).times(c))
                .collect(),
        }
    }

    /// True iff `selfᵢ = witness^{wᵢ} · otherᵢ` for every `i`.
    pub fn eq_with_witness(&self, other: &Self, witness: &T) -> Result<bool, Error> {
        if self.weights != other.weights {
            return Err(Error::WeightMismatch { left: self.weights.clone(), right: other.weights.clone() });
        }
        Ok(other.scaled(witness).coords == self.coords)
    }

    /// Indices of vanishing coordinates.
    pub fn zero_coordinates(&self) -> Vec<usize> {
        self.coords.iter().enumerate().filter(|(_, c)| c.is_zero_value()).map(|(i, _)| i).collect()
    }
}

/// Free-function form of [`WPPoint::eq_with_witness`].
pub fn wp_eq<T: WpScalar>(a: &WPPoint<T>, b: &WPPoint<T>, witness: &T) -> Result<bool, Error> {
    a.eq_with_witness(b, witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::vars;
    use crate::exact::rational::{int, rat};

    #[test]
    fn rational_witness() {
        let a = WPPoint::new(vec![1, 2], vec![int(8), int(0)]).unwrap();
        let b = WPPoint::new(vec![1, 2], vec![int(1), int(0)]).unwrap();
        assert!(wp_eq(&b, &a, &rat(1, 8)).unwrap());
        assert!(!wp_eq(&b, &a, &rat(1, 4)).unwrap());
        let c = WPPoint::new(vec![1, 1], vec![int(1), int(1)]).unwrap();
        assert!(wp_eq(&c, &c, &int(1)).unwrap());
    }

    #[test]
    fn weight_mismatch_is_an_error() {
        let a = WPPoint::new(vec![1, 2], vec![int(1), int(1)]).unwrap();
        let b = WPPoint::new(vec![1, 3], vec![int(1), int(1)]).unwrap();
        assert!(matches!(wp_eq(&a, &b, &int(1)), Err(Error::WeightMismatch { .. })));
    }

    #[test]
    fn all_zero_rejected() {
        assert!(matches!(WPPoint::new(vec![1, 2], vec![int(0), int(0)]), Err(Error::DegeneratePoint)));
    }

    #[test]
    fn polynomial_point_scaled_by_two() {
        let r = vars(&["b0", "b1"]);
        let b0 = MultiPoly::var(&r, "b0");
        let b1 = MultiPoly::var(&r, "b1");
        let one = MultiPoly::one(&r);
        let zero = MultiPoly::zero(&r);
        let base = WPPoint::new(
            vec![1, 2, 3, 4, 5],
            vec![b0.scale(&int(-8)), &one + &b1.pow(3), zero.clone(), b1.pow(3), zero.clone()],
        )
        .unwrap();
        let expected = WPPoint::new(
            vec![1, 2, 3, 4, 5],
            vec![b0.scale(&int(-16)), (&one + &b1.pow(3)).scale(&int(4)), zero.clone(), b1.pow(3).scale(&int(16)), zero],
        )
        .unwrap();
        assert!(wp_eq(&expected, &base, &MultiPoly::int(&r, 2)).unwrap());
    }
}
