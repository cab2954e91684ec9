//! Genus-1 theta constants, `η²⁴` and Eisenstein series.

use super::chars::Scale;
use crate::exact::cone::isqrt;
use crate::exact::{int, LaurentSeries1, Rational, CONE_UNIT};
use crate::Error;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `θ_ab(sτ)`; exponent `e·A²/4` with `A = 2n + a`, sign `(-1)^{Ab/2}`.
pub fn theta1(a: u8, b: u8, scale: Scale, order: i64) -> LaurentSeries1 {
    let mut out = LaurentSeries1::zero(CONE_UNIT, order);
    if a * b % 2 == 1 || order < 0 {
        return out;
    }
    let (a, b) = (a as i64, b as i64);
    let e = scale.eighths();
    let amax = isqrt(4 * order / e);
    for big_a in (-amax..=amax).filter(|x| (x - a).rem_euclid(2) == 0) {
        let k = e * big_a * big_a / 4;
        if k > order {
            continue;
        }
        let sign = if (big_a * b).rem_euclid(4) == 0 { 1 } else { -1 };
        out.add_coeff(k, int(sign));
    }
    out
}

fn sigma(n: u64, k: u32) -> BigInt {
    (1..=n).filter(|d| n % d == 0).map(|d| BigInt::from(d).pow(k)).sum()
}

/// Step in eighths of `Q = e^{2πi sτ}`.
fn q_step(scale: Scale) -> i64 {
    2 * scale.eighths()
}

fn eisenstein(scale: Scale, order: i64, c: i64, k: u32) -> LaurentSeries1 {
    let step = q_step(scale);
    let mut out = LaurentSeries1::one(CONE_UNIT, order);
    for n in 1..=(order.max(0) / step) {
        out.add_coeff(n * step, Rational::from_integer(sigma(n as u64, k) * c));
    }
    out
}

/// `E₄(sτ) = 1 + 240 Σ σ₃(n) Qⁿ`.
pub fn e4(scale: Scale, order: i64) -> LaurentSeries1 {
    eisenstein(scale, order, 240, 3)
}

/// `E₆(sτ) = 1 − 504 Σ σ₅(n) Qⁿ`.
pub fn e6(scale: Scale, order: i64) -> LaurentSeries1 {
    eisenstein(scale, order, -504, 5)
}

/// `η(sτ)²⁴ = Q ∏ (1 − Qⁿ)²⁴`.
pub fn eta24(scale: Scale, order: i64) -> LaurentSeries1 {
    let step = q_step(scale);
    let mut out = LaurentSeries1::zero(CONE_UNIT, order);
    if order < step {
        return out;
    }
    let n = (order / step) as usize; // need Q-exponents 1..=n, i.e. product up to Q^{n-1}
    let mut c = vec![BigInt::zero(); n];
    c[0] = BigInt::one();
    for k in 1..n {
        for _ in 0..24 {
            for j in (k..n).rev() {
                let t = c[j - k].clone();
                c[j] -= t;
            }
        }
    }
    for (j, v) in c.into_iter().enumerate() {
        out.add_coeff((j as i64 + 1) * step, Rational::from_integer(v));
    }
    out
}

/// A genus-1 modular form: series plus weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusOneForm {
    pub series: LaurentSeries1,
    pub weight: i64,
}

impl GenusOneForm {
    pub fn new(series: LaurentSeries1, weight: i64) -> Self {
        GenusOneForm { series, weight }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.weight != other.weight {
            return Err(Error::FormWeightMismatch(self.weight, other.weight));
        }
        Ok(GenusOneForm::new(self.series.add(&other.series), self.weight))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        if self.weight != other.weight {
            return Err(Error::FormWeightMismatch(self.weight, other.weight));
        }
        Ok(GenusOneForm::new(self.series.sub(&other.series), self.weight))
    }

    pub fn mul(&self, other: &Self) -> Self {
        GenusOneForm::new(self.series.mul(&other.series), self.weight + other.weight)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GenusOneForm::new(self.series.scale(c), self.weight)
    }

    pub fn pow(&self, e: u32) -> Self {
        GenusOneForm::new(self.series.pow(e), self.weight * e as i64)
    }
}

/// `θ₀₀⁴` and `θ₀₁⁴` at scale one.
pub fn theta_fourths(order: i64) -> (LaurentSeries1, LaurentSeries1) {
    (theta1(0, 0, Scale::One, order).pow(4), theta1(0, 1, Scale::One, order).pow(4))
}

/// `h₁ = 4(θ₀₀⁴ + θ₀₁⁴)` of weight 2.
pub fn h1(order: i64) -> GenusOneForm {
    let (a, b) = theta_fourths(order);
    GenusOneForm::new(a.add(&b).scale(&int(4)), 2)
}

/// `h₂ = (θ₀₀⁴ − θ₀₁⁴)²/4` of weight 4.
pub fn h2(order: i64) -> GenusOneForm {
    let (a, b) = theta_fourths(order);
    GenusOneForm::new(a.sub(&b).pow(2).scale(&crate::exact::rat(1, 4)), 4)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_lattice_points() {
        let t = theta1(0, 0, Scale::One, 40);
        let v: Vec<(i64, i64)> = t.terms().map(|(k, c)| (*k, c.to_integer().try_into().unwrap())).collect();
        assert_eq!(v, vec![(0, 1), (8, 2), (32, 2)]);
        assert!(theta1(1, 1, Scale::One, 40).is_zero());
        assert_eq!(theta1(1, 0, Scale::One, 40).coeff(2), int(2));
    }

    #[test]
    fn eisenstein_and_eta() {
        let e = e4(Scale::One, 48);
        assert_eq!([0, 16, 32, 48].map(|k| e.coeff(k)), [1, 240, 2160, 6720].map(int));
        let n = eta24(Scale::One, 48);
        assert_eq!(n.valuation(), Some(16));
        assert_eq!(n.coeff(16), int(1));
        assert_eq!(n.coeff(32), int(-24));
        assert_eq!(n.coeff(48), int(252));
        assert_eq!(e6(Scale::One, 16).coeff(16), int(-504));
    }

    #[test]
    fn jacobi_quartic() {
        let d = 200;
        let lhs = theta1(0, 0, Scale::One, d).pow(4);
        let rhs = theta1(0, 1, Scale::One, d).pow(4).add(&theta1(1, 0, Scale::One, d).pow(4));
        assert_eq!(lhs, rhs);
    }
}
