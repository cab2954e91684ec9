//! Floating-point evaluation of theta sums and truncated series.

use super::chars::ThetaChar;
use crate::exact::{ConeSeries, LaurentSeries1};
use crate::Error;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use std::f64::consts::PI;

pub type C = Complex64;

/// A value together with the total magnitude of its outermost shell.
#[derive(Clone, Copy, Debug)]
pub struct Estimate {
    pub value: C,
    pub last_shell: f64,
}

fn i_pi() -> C {
    C::new(0.0, PI)
}

/// `θ_ab(τ)` summed over `|n| ≤ bound`.
pub fn theta1_numeric(a: u8, b: u8, tau: C, bound: i64) -> Result<Estimate, Error> {
    if tau.im <= 0.0 {
        return Err(Error::NotInUpperHalfSpace);
    }
    let (a, b) = (a as f64 / 2.0, b as f64 / 2.0);
    let term = |n: i64| {
        let x = n as f64 + a;
        (i_pi() * (x * x * tau + 2.0 * x * b)).exp()
    };
    let value = (-bound..=bound).map(term).sum();
    let last_shell = term(bound).norm() + term(-bound).norm();
    Ok(Estimate { value, last_shell })
}

/// `θ_c(τ)` for `τ = [[t1, t2], [t2, t3]]`, summed over the box `max|nᵢ| ≤ bound`.
pub fn theta2_numeric(c: ThetaChar, tau: [C; 3], bound: i64) -> Result<Estimate, Error> {
    let [t1, t2, t3] = tau;
    if t1.im <= 0.0 || t1.im * t3.im - t2.im * t2.im <= 0.0 {
        return Err(Error::NotInUpperHalfSpace);
    }
    let [x, y, z, w] = c.bits().map(|v| v as f64 / 2.0);
    let mut value = C::new(0.0, 0.0);
    let mut last_shell = 0.0;
    for n1 in -bound..=bound {
        for n2 in -bound..=bound {
            let (u, v) = (n1 as f64 + x, n2 as f64 + y);
            let q = u * u * t1 + 2.0 * u * v * t2 + v * v * t3;
            let t = (i_pi() * (q + 2.0 * (u * z + v * w))).exp();
            value += t;
            if n1.abs() == bound || n2.abs() == bound {
                last_shell += t.norm();
            }
        }
    }
    Ok(Estimate { value, last_shell })
}

fn to_f64(r: &crate::exact::Rational) -> f64 {
    r.to_f64().expect("finite coefficient")
}

/// `Σ c·e^{πi(p t1 + m t2 + r t3)/8}`.
pub fn eval_cone(s: &ConeSeries, tau: [C; 3]) -> C {
    s.terms()
        .map(|((p, m, r), c)| {
            let e = (*p as f64 * tau[0] + *m as f64 * tau[1] + *r as f64 * tau[2]) / 8.0;
            to_f64(c) * (i_pi() * e).exp()
        })
        .sum()
}

/// `Σ c·e^{πikτ/unit}`.
pub fn eval_series1(s: &LaurentSeries1, tau: C) -> C {
    let u = s.unit() as f64;
    s.terms().map(|(k, c)| to_f64(c) * (i_pi() * (*k as f64) * tau / u).exp()).sum()
}

/// `ϑ = (θ⁴₀₀₀₀ + θ⁴₀₀₀₁ + θ⁴₀₀₁₀ + θ⁴₀₀₁₁)/4` by direct summation.
pub fn vartheta_numeric(tau: [C; 3], bound: i64) -> Result<C, Error> {
    let mut acc = C::new(0.0, 0.0);
    for c in ["0000", "0001", "0010", "0011"] {
        acc += theta2_numeric(c.parse().expect("literal"), tau, bound)?.value.powi(4);
    }
    Ok(acc / 4.0)
}

/// `(h₁, h₂)` at a point, from `θ₀₀` and `θ₀₁` sums.
pub fn h_pair_numeric(tau: C, bound: i64) -> Result<(C, C), Error> {
    let a = theta1_numeric(0, 0, tau, bound)?.value.powi(4);
    let b = theta1_numeric(0, 1, tau, bound)?.value.powi(4);
    Ok((4.0 * (a + b), (a - b).powi(2) / 4.0))
}

/// Distance of `[h₁ : h₂]` from `[8 : 1]` in `P(1,2)`, using `λ = h₁/8`.
pub fn distance_to_8_1(h1: C, h2: C) -> f64 {
    let lambda = h1 / 8.0;
    (h2 / (lambda * lambda) - 1.0).norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_lower_half_plane() {
        assert!(theta1_numeric(0, 0, C::new(0.0, -1.0), 10).is_err());
        let z = C::new(0.0, 0.0);
        assert!(theta2_numeric("0000".parse().unwrap(), [C::new(0.0, 1.0), C::new(0.0, 2.0), C::new(0.0, 1.0)], 5).is_err());
        assert!(theta2_numeric("0000".parse().unwrap(), [z, z, z], 5).is_err());
    }

    #[test]
    fn jacobi_numerically() {
        let tau = C::new(0.1, 0.9);
        let f = |a, b| theta1_numeric(a, b, tau, 30).unwrap().value.powi(4);
        assert!((f(0, 0) - f(0, 1) - f(1, 0)).norm() < 1e-12);
    }

    #[test]
    fn cusp_values() {
        let (h1, _) = h_pair_numeric(C::new(0.0, 6.0), 20).unwrap();
        assert!((h1 - 8.0).norm() < 1e-6);
        let (h1, h2) = h_pair_numeric(C::new(0.0, 1.0 / 6.0), 60).unwrap();
        assert!(distance_to_8_1(h1, h2) < 1e-4);
    }
}
