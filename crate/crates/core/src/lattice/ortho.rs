//! The isometry group of `Q = U ⊕ U(2) ⊕ ⟨−4⟩`, its quadric model of the
//! Siegel space and the embeddings of `GL₂(ℤ)`, symmetric translations and `w`.

use crate::exact::{int, Rational, ZMatrix};
use crate::Error;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use serde_json::{json, Value};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::fmt;

pub type M2 = [[i64; 2]; 2];

pub const Q_ROWS: [[i64; 5]; 5] = [
    [0, 1, 0, 0, 0],
    [1, 0, 0, 0, 0],
    [0, 0, 0, 2, 0],
    [0, 0, 2, 0, 0],
    [0, 0, 0, 0, -4],
];

pub fn q_matrix() -> ZMatrix {
    ZMatrix::from_i64(&Q_ROWS.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

pub fn q_pair(x: &[i64; 5], y: &[i64; 5]) -> i64 {
    x[0] * y[1] + x[1] * y[0] + 2 * (x[2] * y[3] + x[3] * y[2]) - 4 * x[4] * y[4]
}

pub fn is_orthogonal(m: &ZMatrix) -> bool {
    let q = q_matrix();
    &(&m.transpose() * &q) * m == q
}

/// A 5×5 integer matrix `g` with `ᵗgQg = Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsometryNs(ZMatrix);

impl IsometryNs {
    pub fn new(m: ZMatrix) -> Result<Self, Error> {
        if m.rows() != 5 || m.cols() != 5 || !is_orthogonal(&m) {
            return Err(Error::NotOrthogonal);
        }
        Ok(IsometryNs(m))
    }

    pub fn identity() -> Self {
        IsometryNs(ZMatrix::identity(5))
    }

    pub fn minus_one() -> Self {
        IsometryNs(ZMatrix::identity(5).neg())
    }

    pub fn matrix(&self) -> &ZMatrix {
        &self.0
    }

    /// `self · other`.
    pub fn compose(&self, other: &IsometryNs) -> IsometryNs {
        IsometryNs(&self.0 * &other.0)
    }

    /// `Q⁻¹ ᵗg Q`, which is integral for an isometry.
    pub fn inverse(&self) -> IsometryNs {
        let gtq = &self.0.transpose() * &q_matrix();
        let (pairs, scale) = ([1usize, 0, 3, 2, 4], [1i64, 1, 2, 2, -4]);
        let mut inv = ZMatrix::zeros(5, 5);
        for i in 0..5 {
            for j in 0..5 {
                let v = gtq.get(pairs[i], j);
                debug_assert!((v % scale[i]).is_zero());
                inv.set(i, j, v / scale[i]);
            }
        }
        IsometryNs(inv)
    }

    pub fn apply(&self, v: &[i64; 5]) -> Option<[i64; 5]> {
        let big: Vec<BigInt> = v.iter().map(|x| BigInt::from(*x)).collect();
        let out = self.0.mul_vec(&big);
        let mut r = [0i64; 5];
        for (ri, o) in r.iter_mut().zip(out) {
            *ri = o.to_i64()?;
        }
        Some(r)
    }

    pub fn apply_rational(&self, v: &[Rational]) -> Vec<Rational> {
        self.0.mul_vec_rational(v)
    }

    pub fn to_json(&self) -> Value {
        self.0.to_json()
    }
}

pub fn det2(a: &M2) -> i64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

pub fn mul2(a: &M2, b: &M2) -> M2 {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

/// `g(A) = I₂ ⊕ (action of A on binary quadratic forms)`.
pub fn embed_gl2(a: &M2) -> Result<IsometryNs, Error> {
    if det2(a).abs() != 1 {
        return Err(Error::NotUnimodular);
    }
    let [[a1, a2], [a3, a4]] = *a;
    let rows = vec![
        vec![1, 0, 0, 0, 0],
        vec![0, 1, 0, 0, 0],
        vec![0, 0, a1 * a1, a2 * a2, 2 * a1 * a2],
        vec![0, 0, a3 * a3, a4 * a4, 2 * a3 * a4],
        vec![0, 0, a1 * a3, a2 * a4, a1 * a4 + a2 * a3],
    ];
    IsometryNs::new(ZMatrix::from_i64(&rows))
}

fn translation(m1: i64, m2: i64, m3: i64) -> IsometryNs {
    let rows = vec![
        vec![1, 0, 0, 0, 0],
        vec![-2 * m1 * m2 + 2 * m3 * m3, 1, -2 * m2, -2 * m1, 4 * m3],
        vec![m1, 0, 1, 0, 0],
        vec![m2, 0, 0, 1, 0],
        vec![m3, 0, 0, 0, 1],
    ];
    IsometryNs::new(ZMatrix::from_i64(&rows)).expect("translations are isometries")
}

/// `h(B)`: translation of `Ψ` by `B`, with shift vector `(b₁₁, b₂₂, b₁₂)`.
pub fn embed_sym(b: &M2) -> Result<IsometryNs, Error> {
    if b[0][1] != b[1][0] {
        return Err(Error::NotSymmetric);
    }
    Ok(translation(b[0][0], b[1][1], b[0][1]))
}

/// The printed labeling, which feeds `(b₁₁, b₁₂, b₂₂)` into the shift slots.
pub fn embed_sym_printed(b: &M2) -> Result<IsometryNs, Error> {
    if b[0][1] != b[1][0] {
        return Err(Error::NotSymmetric);
    }
    Ok(translation(b[0][0], b[0][1], b[1][1]))
}

pub fn w_element() -> IsometryNs {
    let rows = vec![
        vec![0, 1, 0, 0, 0],
        vec![1, 0, 0, 0, 0],
        vec![0, 0, 0, 1, 0],
        vec![0, 0, 1, 0, 0],
        vec![0, 0, 0, 0, -1],
    ];
    IsometryNs::new(ZMatrix::from_i64(&rows)).expect("w is an isometry")
}

/// `(1, −2(z₃z₄ − z₅²), z₃, z₄, z₅)`.
pub fn quadric_point(z3: &Rational, z4: &Rational, z5: &Rational) -> Vec<Rational> {
    let z2 = int(-2) * (z3 * z4 - z5 * z5);
    vec![int(1), z2, z3.clone(), z4.clone(), z5.clone()]
}

/// Symmetric 2×2 rational matrix stored as `(τ₁₁, τ₁₂, τ₂₂)`.
pub type Sym2 = [Rational; 3];

/// `Ψ(z) = [[z₃, z₅], [z₅, z₄]]/z₁`; `None` when `z₁ = 0`.
pub fn psi(z: &[Rational]) -> Option<Sym2> {
    if z[0].is_zero() {
        return None;
    }
    Some([&z[2] / &z[0], &z[4] / &z[0], &z[3] / &z[0]])
}

fn sym_det(t: &Sym2) -> Rational {
    &t[0] * &t[2] - &t[1] * &t[1]
}

/// `A τ ᵗA`.
pub fn act_gl2(a: &M2, t: &Sym2) -> Sym2 {
    let [[a1, a2], [a3, a4]] = a.map(|r| r.map(int));
    let [t11, t12, t22] = t.clone();
    let r11 = &a1 * &a1 * &t11 + int(2) * &a1 * &a2 * &t12 + &a2 * &a2 * &t22;
    let r12 = &a1 * &a3 * &t11 + (&a1 * &a4 + &a2 * &a3) * &t12 + &a2 * &a4 * &t22;
    let r22 = &a3 * &a3 * &t11 + int(2) * &a3 * &a4 * &t12 + &a4 * &a4 * &t22;
    [r11, r12, r22]
}

pub fn act_sym(b: &M2, t: &Sym2) -> Sym2 {
    [&t[0] + int(b[0][0]), &t[1] + int(b[0][1]), &t[2] + int(b[1][1])]
}

/// `−τ⁻¹/2`; `None` for singular `τ`.
pub fn act_w(t: &Sym2) -> Option<Sym2> {
    let d = sym_det(t);
    if d.is_zero() {
        return None;
    }
    let s = int(-2) * d;
    Some([&t[2] / &s, -(&t[1] / &s), &t[0] / &s])
}

/// One generator of the words used by the random and search routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    G(M2),
    H(M2),
    W,
    MinusOne,
}

impl Letter {
    pub fn isometry(&self) -> IsometryNs {
        match self {
            Letter::G(a) => embed_gl2(a).expect("generator is unimodular"),
            Letter::H(b) => embed_sym(b).expect("generator is symmetric"),
            Letter::W => w_element(),
            Letter::MinusOne => IsometryNs::minus_one(),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::G(a) => write!(f, "g{a:?}"),
            Letter::H(b) => write!(f, "h{b:?}"),
            Letter::W => write!(f, "w"),
            Letter::MinusOne => write!(f, "-1"),
        }
    }
}

/// Letters applied left to right: the result is `Lₖ ⋯ L₁`.
pub fn word_isometry(word: &[Letter]) -> IsometryNs {
    word.iter().fold(IsometryNs::identity(), |acc, l| l.isometry().compose(&acc))
}

pub fn word_json(word: &[Letter]) -> Value {
    json!(word.iter().map(|l| l.to_string()).collect::<Vec<_>>())
}

const T: M2 = [[1, 1], [0, 1]];
const T_INV: M2 = [[1, -1], [0, 1]];
const T_TR: M2 = [[1, 0], [1, 1]];
const T_TR_INV: M2 = [[1, 0], [-1, 1]];
const SWAP: M2 = [[0, 1], [1, 0]];
const FLIP: M2 = [[1, 0], [0, -1]];

/// Elementary letters used by the pair search.
pub fn search_letters() -> Vec<Letter> {
    let mut v: Vec<Letter> = [T, T_INV, T_TR, T_TR_INV, SWAP, FLIP].into_iter().map(Letter::G).collect();
    for s in [1, -1] {
        v.push(Letter::H([[s, 0], [0, 0]]));
        v.push(Letter::H([[0, 0], [0, s]]));
        v.push(Letter::H([[0, s], [s, 0]]));
    }
    v.push(Letter::W);
    v
}

pub fn random_gl2<R: Rng>(rng: &mut R, len: usize) -> M2 {
    let gens = [T, T_INV, T_TR, T_TR_INV, SWAP, FLIP];
    (0..len).fold([[1, 0], [0, 1]], |acc, _| mul2(&acc, &gens[rng.gen_range(0..gens.len())]))
}

pub fn random_sym<R: Rng>(rng: &mut R, bound: i64) -> M2 {
    let (a, b, c) = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
    [[a, b], [b, c]]
}

pub fn random_letter<R: Rng>(rng: &mut R) -> Letter {
    match rng.gen_range(0..3) {
        0 => {
            let len = rng.gen_range(1..=4);
            Letter::G(random_gl2(rng, len))
        }
        1 => Letter::H(random_sym(rng, 3)),
        _ => Letter::W,
    }
}

pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| random_letter(rng)).collect()
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=5).into())
}

/// A transformation taking a hyperbolic pair to `(e₁, e₂)`.
#[derive(Clone, Debug)]
pub struct PairReduction {
    pub word: Vec<Letter>,
    pub nodes: usize,
}

fn height(v: &[i64; 5]) -> i64 {
    v.iter().map(|x| x.abs()).sum()
}

fn is_unit_axis(v: &[i64; 5]) -> bool {
    height(v) == 1 && (v[0] != 0 || v[1] != 0)
}

/// Best-first search on the height of `x`, then a closed-form finish for `y`.
pub fn unimodular_pair_transitivity(x: &[i64; 5], y: &[i64; 5], budget: usize) -> Result<PairReduction, Error> {
    let (xx, yy, xy) = (q_pair(x, x), q_pair(y, y), q_pair(x, y));
    if xx != 0 || yy != 0 || xy != 1 {
        return Err(Error::NotHyperbolic { xx, yy, xy });
    }
    let letters: Vec<(Letter, IsometryNs)> = search_letters().into_iter().map(|l| (l, l.isometry())).collect();
    let mut parents: Vec<(usize, Option<Letter>)> = vec![(usize::MAX, None)];
    let mut states = vec![*x];
    let mut seen = HashSet::from([*x]);
    let mut heap = BinaryHeap::from([Reverse((height(x), 0usize))]);
    let mut found = None;
    while let Some(Reverse((_, idx))) = heap.pop() {
        if is_unit_axis(&states[idx]) {
            found = Some(idx);
            break;
        }
        if states.len() > budget {
            return Err(Error::SearchBudget(budget));
        }
        let cur = states[idx];
        for (l, g) in &letters {
            if let Some(next) = g.apply(&cur) {
                if seen.insert(next) {
                    states.push(next);
                    parents.push((idx, Some(*l)));
                    heap.push(Reverse((height(&next), states.len() - 1)));
                }
            }
        }
    }
    let mut idx = found.ok_or(Error::SearchBudget(budget))?;
    let mut word = Vec::new();
    while let (p, Some(l)) = parents[idx] {
        word.push(l);
        idx = p;
    }
    word.reverse();
    let mut gamma = word_isometry(&word);
    let push = |l: Letter, word: &mut Vec<Letter>, gamma: &mut IsometryNs| {
        word.push(l);
        *gamma = l.isometry().compose(gamma);
    };
    let gx = gamma.apply(x).ok_or(Error::SearchBudget(budget))?;
    if gx[1] != 0 {
        push(Letter::W, &mut word, &mut gamma);
    }
    if gamma.apply(x).ok_or(Error::SearchBudget(budget))?[0] < 0 {
        push(Letter::MinusOne, &mut word, &mut gamma);
    }
    // Now γx = e₁, so γy = (y₁, 1, y₃, y₄, y₅); w·h(B)·w clears y₃..y₅ and fixes e₁.
    let gy = gamma.apply(y).ok_or(Error::SearchBudget(budget))?;
    if gy != [0, 1, 0, 0, 0] {
        push(Letter::W, &mut word, &mut gamma);
        push(Letter::H([[-gy[3], gy[4]], [gy[4], -gy[2]]]), &mut word, &mut gamma);
        push(Letter::W, &mut word, &mut gamma);
    }
    Ok(PairReduction { word, nodes: states.len() })
}

/// Applies the word and confirms `(x, y) ↦ (e₁, e₂)`.
pub fn certify_pair(x: &[i64; 5], y: &[i64; 5], word: &[Letter]) -> bool {
    let g = word_isometry(word);
    g.apply(x) == Some([1, 0, 0, 0, 0]) && g.apply(y) == Some([0, 1, 0, 0, 0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_are_isometries() {
        assert_eq!(embed_gl2(&[[1, 0], [0, 1]]).unwrap(), IsometryNs::identity());
        assert_eq!(embed_sym(&[[0, 0], [0, 0]]).unwrap(), IsometryNs::identity());
        assert_eq!(embed_gl2(&[[-1, 0], [0, -1]]).unwrap(), IsometryNs::identity());
        assert!(is_orthogonal(w_element().matrix()));
        assert_eq!(embed_gl2(&[[2, 0], [0, 1]]), Err(Error::NotUnimodular));
        assert_eq!(embed_sym(&[[0, 1], [0, 0]]), Err(Error::NotSymmetric));
    }

    #[test]
    fn inverse_is_integral() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = word_isometry(&random_word(&mut rng, 5));
            assert_eq!(g.compose(&g.inverse()), IsometryNs::identity());
        }
    }

    #[test]
    fn equivariance_at_sample_point() {
        let (z3, z4, z5) = (int(2), int(3), int(1));
        let z = quadric_point(&z3, &z4, &z5);
        let t = psi(&z).unwrap();
        let a = [[1, 1], [0, 1]];
        assert_eq!(psi(&embed_gl2(&a).unwrap().apply_rational(&z)).unwrap(), act_gl2(&a, &t));
        let b = [[1, 0], [0, 0]];
        assert_eq!(psi(&embed_sym(&b).unwrap().apply_rational(&z)).unwrap(), act_sym(&b, &t));
        assert_eq!(sym_det(&t), int(5));
        assert_eq!(psi(&w_element().apply_rational(&z)), act_w(&t));
        assert_eq!(act_w(&t).unwrap()[0], rat(-3, 10));
    }

    #[test]
    fn printed_translation_labeling_breaks_equivariance() {
        let z = quadric_point(&int(2), &int(3), &int(1));
        let b = [[0, 1], [1, 0]];
        let t = psi(&z).unwrap();
        assert_ne!(psi(&embed_sym_printed(&b).unwrap().apply_rational(&z)).unwrap(), act_sym(&b, &t));
    }

    #[test]
    fn transitivity_trivial_and_swapped() {
        let (e1, e2) = ([1, 0, 0, 0, 0], [0, 1, 0, 0, 0]);
        assert!(unimodular_pair_transitivity(&e1, &e2, 10).unwrap().word.is_empty());
        let r = unimodular_pair_transitivity(&e2, &e1, 10).unwrap();
        assert!(certify_pair(&e2, &e1, &r.word));
        assert!(matches!(unimodular_pair_transitivity(&e1, &e1, 10), Err(Error::NotHyperbolic { .. })));
    }

    #[test]
    fn transitivity_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let g = word_isometry(&random_word(&mut rng, 6));
            let (x, y) = (g.apply(&[1, 0, 0, 0, 0]).unwrap(), g.apply(&[0, 1, 0, 0, 0]).unwrap());
            let r = unimodular_pair_transitivity(&x, &y, 200_000).unwrap();
            assert!(certify_pair(&x, &y, &r.word), "{x:?} {y:?}");
        }
    }
}
