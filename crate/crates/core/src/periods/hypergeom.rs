//! Lauricella `F_C`, Appell `F₄` and Gauss `₂F₁` as exact truncated series.

use super::series::SeriesMulti;
use crate::exact::rational::{factorial, pochhammer};
use crate::exact::{rat, Rational};
use crate::Error;
use num_traits::Zero;

/// Every exponent vector in `n` variables with total degree `≤ order`, graded.
pub fn exponents(n: usize, order: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur.push(k);
            rec(n, left - k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, order, &mut Vec::new(), &mut out);
    out.sort_by_key(|e| (e.iter().sum::<u32>(), e.clone()));
    out
}

/// `Σ (a)_{|m|}(b)_{|m|} / ∏(cᵢ)_{mᵢ} · ∏ xᵢ^{mᵢ}/mᵢ!`.
pub fn lauricella_fc(a: &Rational, b: &Rational, c: &[Rational], order: u32) -> Result<SeriesMulti, Error> {
    if let Some(bad) = c.iter().find(|ci| **ci <= Rational::zero()) {
        return Err(Error::NonPositiveLowerParameter(bad.to_string()));
    }
    let n = c.len();
    let terms = exponents(n, order).into_iter().map(|m| {
        let total = m.iter().sum::<u32>() as u64;
        let mut coeff = pochhammer(a, total) * pochhammer(b, total);
        for (ci, &mi) in c.iter().zip(&m) {
            coeff /= pochhammer(ci, mi as u64) * factorial(mi as u64);
        }
        (m, coeff)
    });
    Ok(SeriesMulti::from_terms(n, order, terms))
}

/// `F_C(1, ½; 1, 1, 1; x₁, x₂, x₃)` in the formal arguments.
pub fn fc_series(order: u32) -> SeriesMulti {
    let one = rat(1, 1);
    lauricella_fc(&one, &rat(1, 2), &[one.clone(), one.clone(), one.clone()], order).expect("positive parameters")
}

/// `F₄(1, ½; 1, 1; x₁, x₂)`.
pub fn f4_series(order: u32) -> SeriesMulti {
    let one = rat(1, 1);
    lauricella_fc(&one, &rat(1, 2), &[one.clone(), one.clone()], order).expect("positive parameters")
}

pub fn gauss_2f1(a: &Rational, b: &Rational, c: &Rational, order: u32) -> Result<SeriesMulti, Error> {
    lauricella_fc(a, b, std::slice::from_ref(c), order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn displayed_coefficients() {
        let f = fc_series(3);
        assert_eq!(f.constant_term(), int(1));
        let scaled = f.scale_args(&[int(-2), int(-2), int(-2)]);
        assert_eq!(scaled.coeff(&[1, 0, 0]), int(-1));
        let g = gauss_2f1(&rat(1, 2), &rat(1, 2), &int(1), 4).unwrap();
        assert_eq!(g.coeff(&[1]), rat(1, 4));
        assert_eq!(g.coeff(&[2]), rat(9, 64));
        assert!(matches!(gauss_2f1(&int(1), &int(1), &int(0), 3), Err(Error::NonPositiveLowerParameter(_))));
        assert!(lauricella_fc(&int(1), &int(1), &[int(1), rat(-1, 2)], 3).is_err());
    }

    #[test]
    fn exponent_count() {
        assert_eq!(exponents(3, 5).len(), 56);
        assert_eq!(exponents(2, 0), vec![vec![0, 0]]);
    }
}
