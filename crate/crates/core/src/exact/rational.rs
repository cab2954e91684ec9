//! Rational helpers and the `ℚ/2ℤ` value group.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::Value;
use std::fmt;

pub use num_rational::BigRational as Rational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Integer `n!` as a rational.
pub fn factorial(n: u64) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Rational::from_integer(acc)
}

/// Rising factorial `(a)_n`.
pub fn pochhammer(a: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    let mut cur = a.clone();
    for _ in 0..n {
        acc *= &cur;
        cur += Rational::one();
    }
    acc
}

/// Generalized binomial coefficient `binom(a, k)` for rational `a`.
pub fn binomial(a: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    for i in 0..k {
        acc *= a - int(i as i64);
        acc /= int(i as i64 + 1);
    }
    acc
}

pub fn pow(base: &Rational, e: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= base;
    }
    acc
}

/// Lowest common multiple of the denominators.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// A JSON number when the integer fits in `i64`, otherwise a decimal string.
pub fn bigint_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(n.to_string()),
    }
}

pub fn bigint_from_json(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(n) => n.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

/// Exact string form `n` or `n/d`, used in reports.
pub fn rat_json(r: &Rational) -> Value {
    if r.is_integer() {
        bigint_json(r.numer())
    } else {
        Value::String(format!("{}/{}", r.numer(), r.denom()))
    }
}

/// An element of `ℚ/2ℤ`, stored as its representative in `[0, 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QmodTwo(Rational);

impl QmodTwo {
    pub fn new(r: Rational) -> Self {
        let two = int(2);
        let k = (&r / &two).floor();
        let rep = r - k * two;
        debug_assert!(!rep.is_negative() && rep < int(2));
        QmodTwo(rep)
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl std::ops::Add for &QmodTwo {
    type Output = QmodTwo;
    fn add(self, rhs: &QmodTwo) -> QmodTwo {
        QmodTwo::new(&self.0 + &rhs.0)
    }
}

impl fmt::Display for QmodTwo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod 2", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qmod_two_reduces_into_half_open_interval() {
        assert_eq!(QmodTwo::new(rat(5, 2)).value(), &rat(1, 2));
        assert_eq!(QmodTwo::new(rat(-1, 4)).value(), &rat(7, 4));
        assert!(QmodTwo::new(int(-4)).is_zero());
        assert_eq!(QmodTwo::new(int(2)), QmodTwo::new(int(0)));
    }

    #[test]
    fn pochhammer_and_binomial() {
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
        assert_eq!(binomial(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(binomial(&int(-3), 2), int(6));
        assert_eq!(factorial(5), int(120));
    }
}
