//! Truncated one-variable series with a fractional exponent unit.
//!
//! Exponent `k` stands for `e^{πikτ/U}`; every coefficient with exponent at
//! most `order` is known exactly, everything above it is unknown.

use super::rational::{bigint_json, int, Rational};
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSeries1 {
    unit: u32,
    order: i64,
    coeffs: BTreeMap<i64, Rational>,
}

impl LaurentSeries1 {
    pub fn zero(unit: u32, order: i64) -> Self {
        assert!(unit > 0);
        LaurentSeries1 { unit, order, coeffs: BTreeMap::new() }
    }

    pub fn one(unit: u32, order: i64) -> Self {
        Self::monomial(unit, order, 0, Rational::one())
    }

    pub fn monomial(unit: u32, order: i64, exp: i64, c: Rational) -> Self {
        let mut s = Self::zero(unit, order);
        s.add_coeff(exp, c);
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(unit: u32, order: i64, terms: I) -> Self {
        let mut s = Self::zero(unit, order);
        for (k, c) in terms {
            s.add_coeff(k, c);
        }
        s
    }

    pub fn unit(&self) -> u32 {
        self.unit
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeff(&self, k: i64) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<i64> {
        self.coeffs.keys().copied().collect()
    }

    /// Adds `c` at exponent `k`; terms beyond the order are dropped.
    pub fn add_coeff(&mut self, k: i64, c: Rational) {
        if k > self.order || c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(k).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        LaurentSeries1 {
            unit: self.unit,
            order,
            coeffs: self.coeffs.range(..=order).map(|(k, v)| (*k, v.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.unit, self.order, self.coeffs.iter().map(|(k, v)| (*k, v * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.unit, other.unit, "exponent units differ");
        let mut out = self.truncate(self.order.min(other.order));
        for (k, v) in &other.coeffs {
            out.add_coeff(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.unit, other.unit, "exponent units differ");
        // a known up to Dₐ, valuation vₐ: product known up to min(Dₐ + v_b, D_b + vₐ)
        let va = self.valuation().unwrap_or(0);
        let vb = other.valuation().unwrap_or(0);
        let order = match (self.is_zero(), other.is_zero()) {
            (true, true) => self.order.min(other.order),
            (true, false) => self.order + vb,
            (false, true) => other.order + va,
            (false, false) => (self.order + vb).min(other.order + va),
        };
        let mut out = Self::zero(self.unit, order);
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &other.coeffs {
                if ka + kb > order {
                    break;
                }
                out.add_coeff(ka + kb, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.unit, self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Re-express in a finer unit: exponent `k` becomes `k·factor`.
    pub fn refine_unit(&self, factor: u32) -> Self {
        Self::from_terms(
            self.unit * factor,
            self.order * factor as i64,
            self.coeffs.iter().map(|(k, v)| (k * factor as i64, v.clone())),
        )
    }

    /// First exponent (up to the common order) where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<i64> {
        let order = self.order.min(other.order);
        let diff = self.truncate(order).sub(&other.truncate(order));
        diff.valuation()
    }

    /// Number of nonzero coefficients up to the order.
    pub fn nonzero_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(k, c)| json!([k, bigint_json(c.numer()), bigint_json(c.denom())]))
            .collect();
        json!({ "unit": self.unit, "order": self.order, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let unit = v.get("unit")?.as_u64()? as u32;
        let order = v.get("order")?.as_i64()?;
        let mut s = Self::zero(unit, order);
        for row in v.get("terms")?.as_array()? {
            let row = row.as_array()?;
            let k = row.first()?.as_i64()?;
            let n = super::rational::bigint_from_json(row.get(1)?)?;
            let d = super::rational::bigint_from_json(row.get(2)?)?;
            s.add_coeff(k, Rational::new(n, d));
        }
        Some(s)
    }

    /// Coefficient table `[[exp, value], ..]` for reports.
    pub fn coeff_table(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|(k, c)| json!([k, super::rational::rat_json(c)]))
                .collect(),
        )
    }

    pub fn constant(unit: u32, order: i64, c: i64) -> Self {
        Self::monomial(unit, order, 0, int(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn product_truncates_to_min_order() {
        let a = LaurentSeries1::from_terms(8, 10, [(0, int(1)), (4, int(2))]);
        let b = LaurentSeries1::from_terms(8, 6, [(0, int(1)), (6, int(-1))]);
        let p = a.mul(&b);
        assert_eq!(p.order(), 6);
        assert_eq!(p.coeff(4), int(2));
        assert_eq!(p.coeff(6), int(-1));
        assert_eq!(p.coeff(10), int(0));
    }

    #[test]
    fn positive_valuation_extends_certified_order() {
        let a = LaurentSeries1::from_terms(8, 10, [(2, int(1))]);
        let b = LaurentSeries1::from_terms(8, 10, [(3, int(1))]);
        assert_eq!(a.mul(&b).order(), 12);
    }

    #[test]
    fn json_round_trip() {
        let a = LaurentSeries1::from_terms(8, 10, [(0, rat(1, 3)), (5, int(-7))]);
        assert_eq!(LaurentSeries1::from_json(&a.to_json()).unwrap(), a);
    }
}
