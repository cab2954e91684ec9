//! Genus-2 theta constants and the even-weight generators of level 2.

use super::chars::{tc, Scale, ThetaChar};
use crate::exact::cone::isqrt;
use crate::exact::{int, rat, ConeKey, ConeSeries, Rational};
use crate::Error;
use std::collections::BTreeMap;

/// Lattice sum for `θ_c(sτ)` with every `(p,m,r)` of grade at most `order`.
///
/// With `A = 2n + (x,y)` the exponent is `e·(A₁², 2A₁A₂, A₂²)/4` for `e = 8s`
/// and the sign is `(-1)^{(A₁z + A₂w)/2}`. Odd characteristics give zero.
pub fn theta2(c: ThetaChar, scale: Scale, order: i64) -> ConeSeries {
    let mut out = ConeSeries::zero(order);
    if !c.is_even() || order < 0 {
        return out;
    }
    let [x, y, z, w] = c.bits().map(i64::from);
    let e = scale.eighths();
    let amax = isqrt(4 * order / e);
    let mut acc: BTreeMap<ConeKey, i64> = BTreeMap::new();
    for a1 in (-amax..=amax).filter(|a| (a - x).rem_euclid(2) == 0) {
        let p4 = e * a1 * a1;
        assert_eq!(p4 % 4, 0, "exponent off the 1/8 grid");
        let p = p4 / 4;
        for a2 in (-amax..=amax).filter(|a| (a - y).rem_euclid(2) == 0) {
            let r = e * a2 * a2 / 4;
            if p + r > order {
                continue;
            }
            let m2 = e * a1 * a2;
            assert_eq!(m2 % 2, 0);
            let k = a1 * z + a2 * w;
            debug_assert_eq!(k % 2, 0);
            let sign = if k.rem_euclid(4) == 0 { 1 } else { -1 };
            *acc.entry((p, m2 / 2, r)).or_insert(0) += sign;
        }
    }
    for (key, v) in acc {
        out.add_coeff(key, int(v));
    }
    out
}

/// A genus-2 modular form: series plus weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SiegelForm {
    pub series: ConeSeries,
    pub weight: i64,
}

impl SiegelForm {
    pub fn new(series: ConeSeries, weight: i64) -> Self {
        SiegelForm { series, weight }
    }

    pub fn one(order: i64) -> Self {
        SiegelForm::new(ConeSeries::one(order), 0)
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.weight != other.weight {
            return Err(Error::FormWeightMismatch(self.weight, other.weight));
        }
        Ok(SiegelForm::new(self.series.add(&other.series), self.weight))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        if self.weight != other.weight {
            return Err(Error::FormWeightMismatch(self.weight, other.weight));
        }
        Ok(SiegelForm::new(self.series.sub(&other.series), self.weight))
    }

    pub fn mul(&self, other: &Self) -> Self {
        SiegelForm::new(self.series.mul(&other.series), self.weight + other.weight)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SiegelForm::new(self.series.scale(c), self.weight)
    }

    pub fn pow(&self, e: u32) -> Self {
        SiegelForm::new(self.series.pow(e), self.weight * e as i64)
    }

    pub fn order(&self) -> i64 {
        self.series.order()
    }

    /// Every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.series.terms().all(|(_, c)| c.is_integer())
    }
}

/// The level-2 generators and the two combinations used for the `W`-invariant ring.
#[derive(Clone, Debug)]
pub struct Generators {
    pub vartheta: SiegelForm,
    pub phi1: SiegelForm,
    pub phi2: SiegelForm,
    pub chi: SiegelForm,
    pub phi: SiegelForm,
    pub psi: SiegelForm,
}

impl Generators {
    pub fn named(&self) -> [(&'static str, &SiegelForm); 6] {
        [
            ("vartheta", &self.vartheta),
            ("phi1", &self.phi1),
            ("phi2", &self.phi2),
            ("chi", &self.chi),
            ("phi", &self.phi),
            ("psi", &self.psi),
        ]
    }
}

fn product(chars: &[&str], order: i64) -> ConeSeries {
    chars
        .iter()
        .map(|c| theta2(tc(c), Scale::One, order))
        .fold(ConeSeries::one(order), |acc, t| acc.mul(&t))
}

/// `ϑ, φ₁, φ₂, χ` from theta constants, then `φ = φ₁ + 1024φ₂` and `ψ = φ₁φ₂`.
pub fn generators(order: i64) -> Generators {
    let fourth = |c: &str| theta2(tc(c), Scale::One, order).pow(4);
    let ((vartheta, phi1), (phi2, chi)) = rayon::join(
        || {
            rayon::join(
                || {
                    let s = ["0000", "0001", "0010", "0011"]
                        .iter()
                        .map(|c| fourth(c))
                        .fold(ConeSeries::zero(order), |a, b| a.add(&b));
                    SiegelForm::new(s.scale(&rat(1, 4)), 2)
                },
                || SiegelForm::new(product(&["0000", "0001", "0010", "0011"], order).pow(2), 4),
            )
        },
        || {
            rayon::join(
                || {
                    let d = fourth("0100").sub(&fourth("0110"));
                    SiegelForm::new(d.pow(2).scale(&rat(1, 16384)), 4)
                },
                || {
                    let p = product(&["0100", "0110", "1000", "1001", "1100", "1111"], order);
                    SiegelForm::new(p.pow(2).scale(&rat(1, 4096)), 6)
                },
            )
        },
    );
    let phi = phi1.add(&phi2.scale(&int(1024))).expect("equal weights");
    let psi = phi1.mul(&phi2);
    Generators { vartheta, phi1, phi2, chi, phi, psi }
}

/// Weight-checked evaluation of `c₁ϑ⁴ + c₂ϑ²φ + c₃φ² + c₄ϑχ + c₅ψ` style sums.
pub fn linear_combination(terms: &[(Rational, &SiegelForm)]) -> Result<SiegelForm, Error> {
    let (first, rest) = terms.split_first().expect("at least one term");
    let mut acc = first.1.scale(&first.0);
    for (c, f) in rest {
        acc = acc.add(&f.scale(c))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::cone::in_cone;

    #[test]
    fn basic_lattice_points() {
        let t = theta2(tc("0000"), Scale::One, 24);
        assert_eq!(t.coeff((0, 0, 0)), int(1));
        assert_eq!(t.coeff((8, 16, 8)), int(2));
        let t = theta2(tc("0001"), Scale::One, 24);
        assert_eq!(t.coeff((0, 0, 0)), int(1));
        assert_eq!(t.coeff((0, 0, 8)), int(-2));
    }

    #[test]
    fn odd_characteristics_vanish() {
        for c in ThetaChar::all() {
            let t = theta2(c, Scale::One, 32);
            assert_eq!(t.is_zero(), !c.is_even(), "{c}");
        }
        assert_eq!(ThetaChar::all().iter().filter(|c| c.is_even()).count(), 10);
    }

    #[test]
    fn half_scale_stays_integral() {
        for c in ThetaChar::all().into_iter().filter(|c| c.is_even()) {
            let t = theta2(c, Scale::Half, 40);
            assert!(t.terms().all(|(k, _)| in_cone(k)));
        }
        // θ_1100(τ/2) starts at (1, 2, 1), hit by A = ±(1, 1).
        assert_eq!(theta2(tc("1100"), Scale::Half, 8).coeff((1, 2, 1)), int(2));
    }

    #[test]
    fn generator_constant_terms_and_weights() {
        let g = generators(24);
        assert_eq!(g.vartheta.series.coeff((0, 0, 0)), int(1));
        assert_eq!(g.phi2.series.coeff((0, 0, 0)), int(0));
        assert_eq!(g.chi.series.coeff((0, 0, 0)), int(0));
        let w: Vec<i64> = g.named().iter().map(|(_, f)| f.weight).collect();
        assert_eq!(w, vec![2, 4, 4, 6, 4, 8]);
        assert!(g.named().iter().all(|(_, f)| f.is_integral()));
    }

    #[test]
    fn weight_mismatch_is_an_error() {
        let g = generators(8);
        assert!(g.vartheta.add(&g.phi1).is_err());
    }
}
