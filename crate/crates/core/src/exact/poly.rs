//! Sparse multivariate polynomials over `ℚ`.
//!
//! A polynomial carries its ordered variable list; binary operations require
//! both operands to live over the same list. Parameters such as `u₁, u₂, u₃`
//! are ordinary variables, so "coefficients in a parameter ring" are handled
//! by degree bookkeeping on a subset of the variables.

use super::rational::{int, rat_json, Rational};
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

pub type Vars = Arc<[String]>;

pub fn vars(names: &[&str]) -> Vars {
    names.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: Rational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn int(vars: &Vars, c: i64) -> Self {
        Self::constant(vars, int(c))
    }

    /// The variable `name`; panics if it is not part of `vars`.
    pub fn var(vars: &Vars, name: &str) -> Self {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .unwrap_or_else(|| panic!("unknown variable {name}"));
        Self::monomial(vars, idx_exponent(vars.len(), idx, 1), Rational::one())
    }

    pub fn monomial(vars: &Vars, exps: Vec<u32>, c: Rational) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        p.add_term(exps, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rational)>>(vars: &Vars, terms: I) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len());
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
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

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value if the polynomial is a constant.
    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&k| k == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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

    fn check_ring(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomials over different variable lists"
        );
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, idx: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[idx] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[idx] -= 1;
            out.add_term(e2, c * int(e[idx] as i64));
        }
        out
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Degrees of the terms in the given variables, as a sorted set.
    pub fn degrees_in(&self, idx: &[usize]) -> Vec<u32> {
        let mut ds: Vec<u32> = self
            .terms
            .keys()
            .map(|e| idx.iter().map(|&i| e[i]).sum())
            .collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn is_homogeneous_in(&self, idx: &[usize], degree: u32) -> bool {
        self.degrees_in(idx).iter().all(|&d| d == degree)
    }

    /// Replace every variable by a polynomial over `target`.
    pub fn substitute(&self, target: &Vars, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len());
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![MultiPoly::one(target), p.clone()]).collect();
        let mut out = MultiPoly::zero(target);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                term = &term * &powers[i][k as usize];
            }
            out = &out + &term;
        }
        out
    }

    /// Substitute a subset of variables by rational values, keeping the ring.
    pub fn specialize(&self, assignments: &[(&str, Rational)]) -> MultiPoly {
        let images: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|name| match assignments.iter().find(|(n, _)| n == name) {
                Some((_, v)) => MultiPoly::constant(&self.vars, v.clone()),
                None => MultiPoly::var(&self.vars, name),
            })
            .collect();
        self.substitute(&self.vars.clone(), &images)
    }

    pub fn eval(&self, values: &[Rational]) -> Rational {
        assert_eq!(values.len(), self.vars.len());
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (v, &k) in values.iter().zip(e) {
                for _ in 0..k {
                    t *= v;
                }
            }
            acc += t;
        }
        acc
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d` in lex order, or `None` when `d` does not divide.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        self.check_ring(d);
        let (dl, dc) = d.leading()?;
        let (dl, dc) = (dl.clone(), dc.clone());
        let mut rem = self.clone();
        let mut q = MultiPoly::zero(&self.vars);
        while let Some((rl, rc)) = rem.leading() {
            if rl.iter().zip(&dl).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = rl.iter().zip(&dl).map(|(a, b)| a - b).collect();
            let t = MultiPoly::monomial(&self.vars, e, rc / &dc);
            rem = &rem - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// Normal form in the quotient by `s² = u` for each `(s, u)` index pair.
    pub fn reduce_square_roots(&self, pairs: &[(usize, usize)]) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            for &(s, u) in pairs {
                let k = e2[s];
                e2[s] = k % 2;
                e2[u] += k / 2;
            }
            out.add_term(e2, c.clone());
        }
        out
    }

    /// JSON monomial form `{"vars":[..],"terms":[[e..,num,den],..]}`.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut row: Vec<Value> = e.iter().map(|&k| Value::from(k)).collect();
                row.push(super::rational::bigint_json(c.numer()));
                row.push(super::rational::bigint_json(c.denom()));
                Value::Array(row)
            })
            .collect();
        json!({ "vars": self.vars.to_vec(), "terms": terms })
    }

    pub fn to_value_string(&self) -> Value {
        Value::String(self.to_string())
    }
}

fn idx_exponent(n: usize, idx: usize, k: u32) -> Vec<u32> {
    let mut e = vec![0; n];
    e[idx] = k;
    e
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_ring(rhs);
        let mut out = MultiPoly::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .zip(self.vars.iter())
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| if *k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Elementary symmetric polynomials `e₁..eₙ` of the given polynomials.
pub fn elementary_symmetric(xs: &[MultiPoly]) -> Vec<MultiPoly> {
    assert!(!xs.is_empty());
    let ring = xs[0].vars().clone();
    // coefficients of ∏(1 + x_i t)
    let mut e = vec![MultiPoly::one(&ring)];
    for x in xs {
        let mut next = e.clone();
        next.push(MultiPoly::zero(&ring));
        for k in 1..next.len() {
            next[k] = &next[k] + &(&e[k - 1] * x);
        }
        e = next;
    }
    e.remove(0);
    e
}

/// Render a rational as a JSON value; re-exported for report payloads.
pub fn coeff_json(c: &Rational) -> Value {
    rat_json(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn xyz() -> (Vars, MultiPoly, MultiPoly, MultiPoly) {
        let r = vars(&["x", "y", "z"]);
        let x = MultiPoly::var(&r, "x");
        let y = MultiPoly::var(&r, "y");
        let z = MultiPoly::var(&r, "z");
        (r, x, y, z)
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let (_, x, y, _) = xyz();
        let p = &(&x + &y) * &(&x - &y);
        let q = &x.pow(2) - &y.pow(2);
        assert_eq!(p, q);
        assert!((&p - &q).is_zero());
    }

    #[test]
    fn exact_division_succeeds_and_fails() {
        let (r, x, y, z) = xyz();
        let a = &(&x + &y.scale(&rat(1, 2))) * &(&z.pow(3) - &MultiPoly::int(&r, 7));
        let q = a.div_exact(&(&x + &y.scale(&rat(1, 2)))).unwrap();
        assert_eq!(q, &z.pow(3) - &MultiPoly::int(&r, 7));
        assert!(a.div_exact(&(&x + &z)).is_none());
    }

    #[test]
    fn square_root_reduction() {
        let r = vars(&["s", "u"]);
        let s = MultiPoly::var(&r, "s");
        let u = MultiPoly::var(&r, "u");
        let red = s.pow(5).reduce_square_roots(&[(0, 1)]);
        assert_eq!(red, &s * &u.pow(2));
    }

    #[test]
    fn substitution_and_derivative() {
        let (r, x, y, _) = xyz();
        let p = &x.pow(3) + &(&x * &y);
        assert_eq!(p.derivative(0), &x.pow(2).scale(&int(3)) + &y);
        let sub = p.substitute(&r, &[y.clone(), MultiPoly::int(&r, 2), MultiPoly::zero(&r)]);
        assert_eq!(sub, &y.pow(3) + &y.scale(&int(2)));
        assert_eq!(p.eval(&[int(2), int(5), int(0)]), int(18));
    }

    #[test]
    fn elementary_symmetric_of_three() {
        let (_, x, y, z) = xyz();
        let e = elementary_symmetric(&[x.clone(), y.clone(), z.clone()]);
        assert_eq!(e[0], &(&x + &y) + &z);
        assert_eq!(e[2], &(&x * &y) * &z);
    }
}
