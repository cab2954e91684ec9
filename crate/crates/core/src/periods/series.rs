//! Truncated power series in a few variables, graded by total degree.

use crate::exact::rational::{bigint_json, binomial};
use crate::exact::{MultiPoly, Rational};
use num_traits::{One, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Terms of total degree `≤ order`; everything above is discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMulti {
    nvars: usize,
    order: u32,
    terms: BTreeMap<Vec<u32>, Rational>,
}

fn degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

impl SeriesMulti {
    pub fn zero(nvars: usize, order: u32) -> Self {
        SeriesMulti { nvars, order, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, order: u32) -> Self {
        Self::constant(nvars, order, Rational::one())
    }

    pub fn constant(nvars: usize, order: u32, c: Rational) -> Self {
        let mut s = Self::zero(nvars, order);
        s.add_coeff(vec![0; nvars], c);
        s
    }

    pub fn var(nvars: usize, order: u32, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut s = Self::zero(nvars, order);
        s.add_coeff(e, Rational::one());
        s
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rational)>>(nvars: usize, order: u32, terms: I) -> Self {
        let mut s = Self::zero(nvars, order);
        for (e, c) in terms {
            s.add_coeff(e, c);
        }
        s
    }

    /// Truncation of a polynomial whose variables are read positionally.
    pub fn from_poly(p: &MultiPoly, order: u32) -> Self {
        Self::from_terms(p.vars().len(), order, p.terms().map(|(e, c)| (e.clone(), c.clone())))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn add_coeff(&mut self, e: Vec<u32>, c: Rational) {
        assert_eq!(e.len(), self.nvars);
        if c.is_zero() || degree(&e) > self.order {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.nvars])
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn truncate(&self, order: u32) -> Self {
        let order = order.min(self.order);
        Self::from_terms(self.nvars, order, self.terms.iter().map(|(e, c)| (e.clone(), c.clone())))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.nvars, self.order, self.terms.iter().map(|(e, v)| (e.clone(), v * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.truncate(self.order.min(other.order));
        for (e, c) in &other.terms {
            out.add_coeff(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let order = self.order.min(other.order);
        let mut out = Self::zero(self.nvars, order);
        for (e1, c1) in &self.terms {
            let d1 = degree(e1);
            for (e2, c2) in &other.terms {
                if d1 + degree(e2) > order {
                    continue;
                }
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_coeff(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars, self.order);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Lowest total degree present, `None` for zero.
    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().map(|e| degree(e)).min()
    }

    /// `(1 + f)^a = Σ binom(a, k) fᵏ` for `f` without constant term.
    pub fn binomial_series(f: &Self, a: &Rational) -> Self {
        assert!(f.constant_term().is_zero(), "binomial series needs f(0) = 0");
        let mut out = Self::one(f.nvars, f.order);
        let mut fk = Self::one(f.nvars, f.order);
        for k in 1..=f.order {
            fk = fk.mul(f);
            if fk.is_zero() {
                break;
            }
            out = out.add(&fk.scale(&binomial(a, k as u64)));
        }
        out
    }

    /// `1/(1 − f)` for `f` without constant term.
    pub fn geometric(f: &Self) -> Self {
        Self::binomial_series(&f.scale(&-Rational::one()), &-Rational::one())
    }

    /// `self(g₁, …, gₙ)` where every `gᵢ` lives in `m` variables with `gᵢ(0) = 0`.
    pub fn compose(&self, images: &[Self]) -> Self {
        assert_eq!(images.len(), self.nvars);
        let m = images[0].nvars;
        let order = images.iter().map(|g| g.order).min().unwrap_or(self.order);
        for g in images {
            assert!(g.constant_term().is_zero(), "composition needs images without constant term");
        }
        let mut powers: Vec<Vec<Self>> = images.iter().map(|g| vec![Self::one(m, order), g.clone()]).collect();
        let mut out = Self::zero(m, order);
        for (e, c) in &self.terms {
            let mut t = Self::constant(m, order, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().expect("seeded").mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][k as usize]);
                if t.is_zero() {
                    break;
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// `xᵢ ↦ sᵢ·xᵢ`.
    pub fn scale_args(&self, s: &[Rational]) -> Self {
        Self::from_terms(
            self.nvars,
            self.order,
            self.terms.iter().map(|(e, c)| {
                let f = e.iter().zip(s).fold(c.clone(), |acc, (&k, si)| acc * crate::exact::rational::pow(si, k));
                (e.clone(), f)
            }),
        )
    }

    /// Terms with `xᵢ = 0` for the listed variables, re-indexed over the rest.
    pub fn restrict_zero(&self, zero_vars: &[usize]) -> Self {
        let keep: Vec<usize> = (0..self.nvars).filter(|i| !zero_vars.contains(i)).collect();
        Self::from_terms(
            keep.len(),
            self.order,
            self.terms
                .iter()
                .filter(|(e, _)| zero_vars.iter().all(|&i| e[i] == 0))
                .map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c.clone())),
        )
    }

    /// First monomial (graded, then lexicographic) where the two differ.
    pub fn first_difference(&self, other: &Self) -> Option<Vec<u32>> {
        let order = self.order.min(other.order);
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().chain(other.terms.keys()).filter(|e| degree(e) <= order).collect();
        keys.sort_by_key(|e| (degree(e), (*e).clone()));
        keys.into_iter().find(|e| self.coeff(e) != other.coeff(e)).cloned()
    }

    /// `{"unit":1,"order":D,"terms":[[e₁,…,eₙ,num,den],…]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut row: Vec<Value> = e.iter().map(|&k| Value::from(k)).collect();
                row.push(bigint_json(c.numer()));
                row.push(bigint_json(c.denom()));
                Value::Array(row)
            })
            .collect();
        json!({ "unit": 1, "nvars": self.nvars, "order": self.order, "terms": terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn geometric_and_binomial() {
        let x = SeriesMulti::var(2, 6, 0);
        let g = SeriesMulti::geometric(&x);
        assert!((0..=6).all(|k| g.coeff(&[k, 0]) == int(1)));
        let r = SeriesMulti::binomial_series(&x.scale(&int(-1)), &rat(1, 2));
        assert_eq!(r.coeff(&[2, 0]), rat(-1, 8));
        assert_eq!(r.mul(&r).truncate(6), SeriesMulti::one(2, 6).sub(&x));
    }

    #[test]
    fn composition_matches_direct_product() {
        let (x, y) = (SeriesMulti::var(2, 5, 0), SeriesMulti::var(2, 5, 1));
        let f = SeriesMulti::var(1, 5, 0).pow(2);
        let h = f.compose(&[x.add(&y)]);
        assert_eq!(h, x.add(&y).pow(2));
    }
}
