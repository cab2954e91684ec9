use hk3_core::exact::cone::{grade, in_cone, isqrt};
use hk3_core::exact::{int, vars, ConeKey, ConeSeries, MultiPoly, ZMatrix};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

const ORDER: i64 = 8;

fn cone_key() -> impl Strategy<Value = ConeKey> {
    (0..6i64, 0..6i64).prop_flat_map(|(p, r)| {
        let b = isqrt(4 * p * r);
        (Just(p), -b..=b, Just(r))
    })
}

fn cone_series() -> impl Strategy<Value = ConeSeries> {
    prop::collection::vec((cone_key(), -9i64..10), 0..7).prop_map(|terms| {
        let mut s = ConeSeries::zero(ORDER);
        for (k, c) in terms {
            if grade(&k) <= ORDER {
                s.add_coeff(k, int(c));
            }
        }
        s
    })
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..4, 0u32..4), -6i64..7), 0..6).prop_map(|terms| {
        let v = vars(&["a", "b"]);
        MultiPoly::from_terms(&v, terms.into_iter().map(|((i, j), c)| (vec![i, j], int(c))))
    })
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..5).prop_flat_map(|(m, n)| prop::collection::vec(prop::collection::vec(-12i64..13, n), m))
}

proptest! {
    #[test]
    fn cone_product_is_a_commutative_ring(a in cone_series(), b in cone_series(), c in cone_series()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&ConeSeries::one(ORDER)), a.clone());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn cone_is_closed(a in cone_series(), b in cone_series()) {
        for (k, _) in a.mul(&b).terms() {
            prop_assert!(in_cone(k) && grade(k) <= ORDER, "{:?}", k);
        }
    }

    #[test]
    fn poly_ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        }
    }

    #[test]
    fn smith_normal_form_invariants(rows in matrix()) {
        let m = ZMatrix::from_i64(&rows);
        let (u, s, v) = m.smith_normal_form();
        prop_assert!(u.is_unimodular() && v.is_unimodular());
        prop_assert_eq!(&(&u * &m) * &v, s.clone());
        let k = s.rows().min(s.cols());
        for i in 0..s.rows() {
            for j in 0..s.cols() {
                if i != j {
                    prop_assert!(s.get(i, j).is_zero());
                }
            }
        }
        for i in 0..k {
            prop_assert!(!s.get(i, i).is_negative());
            if i + 1 < k && !s.get(i, i).is_zero() {
                prop_assert!((s.get(i + 1, i + 1) % s.get(i, i)).is_zero());
            }
        }
        let factors = m.invariant_factors();
        prop_assert_eq!(factors.len(), m.rank());
        if m.is_square() {
            let prod: BigInt = (0..k).map(|i| s.get(i, i).clone()).product();
            prop_assert_eq!(prod, m.det().abs());
        }
    }
}
