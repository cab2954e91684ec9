//! Restrictions of genus-2 series: the diagonal `[[2t,t],[t,2t]]`, the product
//! locus `τ₂ = 0`, and the Siegel Φ-operator.

use super::genus1::GenusOneForm;
use super::genus2::SiegelForm;
use crate::exact::rational::rat_json;
use crate::exact::{LaurentSeries1, Rational, CONE_UNIT};
use num_traits::Zero;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// `Σ c_{p,r} e^{πi(pτ₁ + rτ₃)/8}` on `τ₂ = 0`, exact for `p + r ≤ order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSeries {
    order: i64,
    coeffs: BTreeMap<(i64, i64), Rational>,
}

impl ProductSeries {
    pub fn zero(order: i64) -> Self {
        ProductSeries { order, coeffs: BTreeMap::new() }
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn add_coeff(&mut self, key: (i64, i64), c: Rational) {
        assert!(key.0 >= 0 && key.1 >= 0);
        if key.0 + key.1 > self.order || c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(key).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn coeff(&self, key: (i64, i64)) -> Rational {
        self.coeffs.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `f(τ₁)·g(τ₃)`.
    pub fn outer(f: &LaurentSeries1, g: &LaurentSeries1) -> Self {
        assert_eq!(f.unit(), CONE_UNIT);
        assert_eq!(g.unit(), CONE_UNIT);
        let mut out = ProductSeries::zero(f.order().min(g.order()));
        for (p, a) in f.terms() {
            for (r, b) in g.terms() {
                out.add_coeff((*p, *r), a * b);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = ProductSeries::zero(self.order);
        for (k, v) in &self.coeffs {
            out.add_coeff(*k, v * c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = ProductSeries::zero(self.order.min(other.order));
        for (k, v) in &self.coeffs {
            out.add_coeff(*k, v.clone());
        }
        for (k, v) in &other.coeffs {
            out.add_coeff(*k, -v.clone());
        }
        out
    }

    pub fn first_difference(&self, other: &Self) -> Option<(i64, i64)> {
        self.sub(other).coeffs.keys().next().copied()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self.coeffs.iter().map(|((p, r), c)| json!([p, r, rat_json(c)])).collect();
        json!({ "unit": CONE_UNIT, "order": self.order, "terms": terms })
    }
}

/// `τ = [[2t, t], [t, 2t]]`: key `(p,m,r)` goes to exponent `2p + m + 2r`.
///
/// Since `|m| ≤ p + r` that exponent is at least the grade, so the cone order
/// certifies the same one-variable order.
pub fn restrict_diagonal(f: &SiegelForm) -> LaurentSeries1 {
    let d = f.order();
    let mut out = LaurentSeries1::zero(CONE_UNIT, d);
    for ((p, m, r), c) in f.series.terms() {
        out.add_coeff(2 * p + m + 2 * r, c.clone());
    }
    out
}

/// `τ₂ = 0`: sum over `m`.
pub fn restrict_product(f: &SiegelForm) -> ProductSeries {
    let mut out = ProductSeries::zero(f.order());
    for ((p, _, r), c) in f.series.terms() {
        out.add_coeff((*p, *r), c.clone());
    }
    out
}

/// `Φ(f)(τ₁) = lim f([[τ₁, 0], [0, it]])`: the `r = 0` slice.
pub fn siegel_phi(f: &SiegelForm) -> GenusOneForm {
    let mut out = LaurentSeries1::zero(CONE_UNIT, f.order());
    for ((p, m, r), c) in f.series.terms() {
        if *r == 0 {
            debug_assert_eq!(*m, 0);
            out.add_coeff(*p, c.clone());
        }
    }
    GenusOneForm::new(out, f.weight)
}

/// Rows are series, columns the union of their supports.
pub fn coefficient_matrix(series: &[&ProductSeries]) -> Vec<Vec<Rational>> {
    let mut keys: Vec<(i64, i64)> = series.iter().flat_map(|s| s.coeffs.keys().copied()).collect();
    keys.sort();
    keys.dedup();
    series.iter().map(|s| keys.iter().map(|k| s.coeff(*k)).collect()).collect()
}

/// Same for one-variable series.
pub fn coefficient_matrix1(series: &[&LaurentSeries1]) -> Vec<Vec<Rational>> {
    let mut keys: Vec<i64> = series.iter().flat_map(|s| s.support()).collect();
    keys.sort();
    keys.dedup();
    series.iter().map(|s| keys.iter().map(|k| s.coeff(*k)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ConeSeries};

    #[test]
    fn restriction_of_one() {
        let one = SiegelForm::new(ConeSeries::one(16), 0);
        assert_eq!(restrict_diagonal(&one), LaurentSeries1::one(CONE_UNIT, 16));
        assert_eq!(siegel_phi(&one).series, LaurentSeries1::one(CONE_UNIT, 16));
    }

    #[test]
    fn diagonal_exponent_map() {
        let f = SiegelForm::new(ConeSeries::monomial(16, (1, -2, 1), int(3)), 0);
        assert_eq!(restrict_diagonal(&f).coeff(2), int(3));
        assert_eq!(restrict_product(&f).coeff((1, 1)), int(3));
        assert!(siegel_phi(&f).series.is_zero());
    }
}
