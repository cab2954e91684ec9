//! Residue periods computed as constant terms of multinomial expansions.
//!
//! `N'(p, q, r)` is the coefficient of `x^q y^r z^p` in `(1 + x + y + z)^{−(p+q+r+1)}`,
//! read off a brute-force series expansion rather than a closed form.

use super::hypergeom::exponents;
use super::series::SeriesMulti;
use crate::exact::rational::factorial;
use crate::exact::{int, Rational};
use std::collections::HashMap;

/// Expansion of `(1 + x₁ + … + xₙ)^{−k}` to total degree `order`.
fn inverse_power(n: usize, k: u32, order: u32) -> SeriesMulti {
    let s = (0..n).fold(SeriesMulti::zero(n, order), |acc, i| acc.add(&SeriesMulti::var(n, order, i)));
    SeriesMulti::binomial_series(&s, &int(-(k as i64)))
}

/// Caches one expansion per total degree.
#[derive(Default)]
pub struct ConstantTermOracle {
    cache3: HashMap<u32, SeriesMulti>,
    cache2: HashMap<u32, SeriesMulti>,
}

impl ConstantTermOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// `N(p, q, r)/(2πi)³`.
    pub fn n3(&mut self, p: u32, q: u32, r: u32) -> Rational {
        let n = p + q + r;
        self.cache3.entry(n).or_insert_with(|| inverse_power(3, n + 1, n)).coeff(&[q, r, p])
    }

    /// The two-variable analogue for `xy(x + y + 1) + u₁y + u₂x`: the residue
    /// of `yᵖxᵠ/(xy(1 + x + y))^{n+1}` is the coefficient of `xᵖyᵠ` in `(1 + x + y)^{−(n+1)}`.
    pub fn n2(&mut self, p: u32, q: u32) -> Rational {
        let n = p + q;
        self.cache2.entry(n).or_insert_with(|| inverse_power(2, n + 1, n)).coeff(&[p, q])
    }
}

/// `(2n)!/(n! p! q! r!)`, the unsigned value stated for `N`.
pub fn printed_abs_n(p: u32, q: u32, r: u32) -> Rational {
    let n = (p + q + r) as u64;
    factorial(2 * n) / (factorial(n) * factorial(p as u64) * factorial(q as u64) * factorial(r as u64))
}

fn multinomial(parts: &[u32]) -> Rational {
    let n: u32 = parts.iter().sum();
    parts.iter().fold(factorial(n as u64), |acc, &k| acc / factorial(k as u64))
}

fn sign(n: u32) -> Rational {
    if n % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `Σ (p+q+r)!/(p!q!r!) · N'(p,q,r) · (−u₁)ᵖ(−u₂)^q(−u₃)^r`.
pub fn period_series_3d(oracle: &mut ConstantTermOracle, order: u32) -> SeriesMulti {
    let terms: Vec<(Vec<u32>, Rational)> = exponents(3, order)
        .into_iter()
        .map(|m| {
            let (p, q, r) = (m[0], m[1], m[2]);
            let c = multinomial(&m) * oracle.n3(p, q, r) * sign(p + q + r);
            (m, c)
        })
        .collect();
    SeriesMulti::from_terms(3, order, terms)
}

/// Two-variable period of `C(u)`, from the two-variable oracle.
pub fn period_series_2d(oracle: &mut ConstantTermOracle, order: u32) -> SeriesMulti {
    let terms: Vec<(Vec<u32>, Rational)> = exponents(2, order)
        .into_iter()
        .map(|m| {
            let c = multinomial(&m) * oracle.n2(m[0], m[1]) * sign(m[0] + m[1]);
            (m, c)
        })
        .collect();
    SeriesMulti::from_terms(2, order, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_values() {
        let mut o = ConstantTermOracle::new();
        assert_eq!(o.n3(0, 0, 0), int(1));
        assert_eq!(o.n3(1, 0, 0), int(-2));
        assert_eq!(o.n3(1, 1, 0), int(12));
        assert_eq!(printed_abs_n(1, 1, 0), int(12));
    }

    #[test]
    fn period_coefficients() {
        let mut o = ConstantTermOracle::new();
        let p = period_series_3d(&mut o, 4);
        assert_eq!(p.constant_term(), int(1));
        assert_eq!(p.coeff(&[1, 0, 0]), int(2));
        assert!(p.terms().all(|(_, c)| *c > int(0)));
        let p2 = period_series_2d(&mut o, 4);
        assert_eq!(p2.restrict_zero(&[1]), p.restrict_zero(&[1, 2]));
    }
}
