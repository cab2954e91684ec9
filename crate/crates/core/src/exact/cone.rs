//! Truncated genus-2 q-expansions supported on the semidefinite cone.
//!
//! A key `(p, m, r)` stands for `e^{πi(pτ₁ + mτ₂ + rτ₃)/8}`. Stored keys
//! always satisfy `p, r ≥ 0`, `4pr ≥ m²` and `p + r ≤ order`; the cone is
//! closed under addition, so products never leave it. Truncation is by the
//! grade `p + r`, which bounds `|m|` inside the cone.

use super::rational::{bigint_json, bigint_from_json, common_denominator, rat_json, Rational};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Exponent unit shared by every genus-2 series: exponents count `πiτ/8`.
pub const CONE_UNIT: u32 = 8;

pub type ConeKey = (i64, i64, i64);

pub fn in_cone(&(p, m, r): &ConeKey) -> bool {
    p >= 0 && r >= 0 && 4 * p * r >= m * m
}

pub fn grade(&(p, _, r): &ConeKey) -> i64 {
    p + r
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSeries {
    order: i64,
    coeffs: BTreeMap<ConeKey, Rational>,
}

impl ConeSeries {
    pub fn zero(order: i64) -> Self {
        assert!(order >= 0);
        ConeSeries { order, coeffs: BTreeMap::new() }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(order, (0, 0, 0), Rational::one())
    }

    pub fn monomial(order: i64, key: ConeKey, c: Rational) -> Self {
        let mut s = Self::zero(order);
        s.add_coeff(key, c);
        s
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeff(&self, key: ConeKey) -> Rational {
        self.coeffs.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ConeKey, &Rational)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c` at `key`. Keys above the order are dropped; a key outside the
    /// cone is an internal fault.
    pub fn add_coeff(&mut self, key: ConeKey, c: Rational) {
        assert!(in_cone(&key), "exponent {key:?} outside the cone");
        if grade(&key) > self.order || c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(key).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn truncate(&self, order: i64) -> Self {
        let order = order.min(self.order);
        ConeSeries {
            order,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| grade(k) <= order)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.order);
        }
        ConeSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.truncate(other.order);
        for (k, v) in &other.coeffs {
            out.add_coeff(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn pow(&self, e: u32) -> Self {
        match e {
            0 => Self::one(self.order),
            1 => self.clone(),
            _ => {
                let half = self.pow(e / 2);
                let sq = half.mul(&half);
                if e % 2 == 1 {
                    sq.mul(self)
                } else {
                    sq
                }
            }
        }
    }

    /// Truncated product; the result order is the smaller operand order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let (da, na) = integer_terms(self, order);
        let (db, nb) = integer_terms(other, order);
        let mut out = Self::zero(order);
        if na.is_empty() || nb.is_empty() {
            return out;
        }
        let denom = Rational::from_integer(da * db);
        let products = match mul_small(&na, &nb, order) {
            Some(v) => v.into_iter().map(|(k, c)| (k, BigInt::from(c))).collect(),
            None => mul_big(&na, &nb, order),
        };
        for (k, c) in products {
            debug_assert!(in_cone(&k));
            out.add_coeff(k, Rational::from_integer(c) / &denom);
        }
        out
    }

    /// Largest grade present, if any.
    pub fn max_grade(&self) -> Option<i64> {
        self.coeffs.keys().map(grade).max()
    }

    /// First key (in key order) where the series differ up to the common order.
    pub fn first_difference(&self, other: &Self) -> Option<ConeKey> {
        let order = self.order.min(other.order);
        let d = self.truncate(order).sub(&other.truncate(order));
        d.coeffs.keys().next().copied()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|((p, m, r), c)| json!([p, m, r, bigint_json(c.numer()), bigint_json(c.denom())]))
            .collect();
        json!({ "unit": CONE_UNIT, "order": self.order, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        if v.get("unit")?.as_u64()? != CONE_UNIT as u64 {
            return None;
        }
        let mut s = Self::zero(v.get("order")?.as_i64()?);
        for row in v.get("terms")?.as_array()? {
            let row = row.as_array()?;
            let key = (row.first()?.as_i64()?, row.get(1)?.as_i64()?, row.get(2)?.as_i64()?);
            if !in_cone(&key) {
                return None;
            }
            let n = bigint_from_json(row.get(3)?)?;
            let d = bigint_from_json(row.get(4)?)?;
            s.add_coeff(key, Rational::new(n, d));
        }
        Some(s)
    }

    pub fn coeff_preview(&self, limit: usize) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .take(limit)
                .map(|((p, m, r), c)| json!([p, m, r, rat_json(c)]))
                .collect(),
        )
    }
}

/// Common denominator and integer numerators, sorted by grade.
fn integer_terms(s: &ConeSeries, order: i64) -> (BigInt, Vec<(ConeKey, BigInt)>) {
    let den = common_denominator(s.coeffs.values());
    let mut v: Vec<(ConeKey, BigInt)> = s
        .coeffs
        .iter()
        .filter(|(k, _)| grade(k) <= order)
        .map(|(k, c)| (*k, (c * Rational::from_integer(den.clone())).to_integer()))
        .collect();
    v.sort_by_key(|(k, _)| (grade(k), *k));
    (den, v)
}

/// Dense slot layout for all cone keys of grade at most `order`.
struct ConeIndex {
    order: i64,
    base: Vec<usize>,
    mmax: Vec<i64>,
    len: usize,
}

impl ConeIndex {
    fn new(order: i64) -> Self {
        let n = (order + 1) as usize;
        let mut base = vec![0; n * n];
        let mut mmax = vec![0; n * n];
        let mut len = 0;
        for p in 0..=order {
            for r in 0..=(order - p) {
                let i = p as usize * n + r as usize;
                let bound = isqrt(4 * p * r);
                base[i] = len;
                mmax[i] = bound;
                len += (2 * bound + 1) as usize;
            }
        }
        ConeIndex { order, base, mmax, len }
    }

    fn slot(&self, (p, m, r): ConeKey) -> usize {
        let i = p as usize * (self.order + 1) as usize + r as usize;
        debug_assert!(m.abs() <= self.mmax[i]);
        self.base[i] + (m + self.mmax[i]) as usize
    }

    fn keys(&self) -> Vec<ConeKey> {
        let mut out = Vec::with_capacity(self.len);
        for p in 0..=self.order {
            for r in 0..=(self.order - p) {
                let b = self.mmax[p as usize * (self.order + 1) as usize + r as usize];
                for m in -b..=b {
                    out.push((p, m, r));
                }
            }
        }
        out
    }
}

pub fn isqrt(n: i64) -> i64 {
    if n <= 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as i64;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

fn add_key(a: &ConeKey, b: &ConeKey) -> ConeKey {
    (a.0 + b.0, a.1 + b.1, a.2 + b.2)
}

/// Product with `i128` accumulation; `None` on any overflow.
fn mul_small(a: &[(ConeKey, BigInt)], b: &[(ConeKey, BigInt)], order: i64) -> Option<Vec<(ConeKey, i128)>> {
    let a64: Vec<(ConeKey, i64)> = a.iter().map(|(k, c)| c.to_i64().map(|v| (*k, v))).collect::<Option<_>>()?;
    let b64: Vec<(ConeKey, i64)> = b.iter().map(|(k, c)| c.to_i64().map(|v| (*k, v))).collect::<Option<_>>()?;
    let index = ConeIndex::new(order);
    // end[g] = number of b-terms with grade ≤ g
    let mut end = vec![0usize; (order + 1) as usize];
    for (g, e) in end.iter_mut().enumerate() {
        *e = b64.partition_point(|(k, _)| grade(k) <= g as i64);
    }
    let total = a64
        .par_iter()
        .try_fold(
            || vec![0i128; index.len],
            |mut acc, (ka, ca)| {
                let rest = order - grade(ka);
                if rest >= 0 {
                    for (kb, cb) in &b64[..end[rest as usize]] {
                        let prod = (*ca as i128).checked_mul(*cb as i128)?;
                        let slot = &mut acc[index.slot(add_key(ka, kb))];
                        *slot = slot.checked_add(prod)?;
                    }
                }
                Some(acc)
            },
        )
        .try_reduce(
            || vec![0i128; index.len],
            |mut x, y| {
                for (t, v) in x.iter_mut().zip(y) {
                    *t = t.checked_add(v)?;
                }
                Some(x)
            },
        )?;
    Some(
        index
            .keys()
            .into_iter()
            .zip(total)
            .filter(|(_, c)| *c != 0)
            .collect(),
    )
}

fn mul_big(a: &[(ConeKey, BigInt)], b: &[(ConeKey, BigInt)], order: i64) -> Vec<(ConeKey, BigInt)> {
    let mut acc: BTreeMap<ConeKey, BigInt> = BTreeMap::new();
    for (ka, ca) in a {
        let rest = order - grade(ka);
        for (kb, cb) in b {
            if grade(kb) > rest {
                break;
            }
            *acc.entry(add_key(ka, kb)).or_insert_with(BigInt::zero) += ca * cb;
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn unit_is_multiplicative_identity() {
        let one = ConeSeries::one(16);
        assert_eq!(one.mul(&one), one);
    }

    #[test]
    fn monomial_product() {
        let a = ConeSeries::monomial(24, (8, 0, 0), int(1));
        let b = ConeSeries::monomial(24, (0, 0, 8), int(1));
        assert_eq!(a.mul(&b), ConeSeries::monomial(24, (8, 0, 8), int(1)));
    }

    #[test]
    fn product_drops_terms_above_order() {
        let a = ConeSeries::monomial(10, (6, 0, 0), int(1));
        assert!(a.mul(&a).is_zero());
    }

    #[test]
    fn big_coefficients_fall_back_to_bigint() {
        let huge = Rational::from_integer(BigInt::from(10).pow(30));
        let a = ConeSeries::monomial(8, (1, 1, 1), huge.clone());
        let b = ConeSeries::monomial(8, (1, -2, 1), rat(1, 3));
        let p = a.mul(&b);
        assert_eq!(p.coeff((2, -1, 2)), huge / int(3));
    }

    #[test]
    #[should_panic]
    fn keys_outside_cone_are_faults() {
        ConeSeries::monomial(8, (1, 3, 1), int(1));
    }

    #[test]
    fn dense_index_covers_every_cone_key() {
        let idx = ConeIndex::new(6);
        let keys = idx.keys();
        assert_eq!(keys.len(), idx.len);
        for (i, k) in keys.iter().enumerate() {
            assert!(in_cone(k));
            assert_eq!(idx.slot(*k), i);
        }
    }
}
