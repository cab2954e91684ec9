//! Reduction of `ℤe₁ ⊕ ℤe₂ ⊕ ℤ(xe₃ + ye₄ + ze₅)` with `xy − z² = 3` to one
//! of two normal forms.

use super::ortho::{embed_gl2, IsometryNs};
use crate::Error;
use num_bigint::BigInt;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SublatticeTriple {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl SublatticeTriple {
    pub fn new(x: i64, y: i64, z: i64) -> Self {
        SublatticeTriple { x, y, z }
    }

    pub fn is_solution(&self) -> bool {
        self.x * self.y - self.z * self.z == 3
    }

    /// `4xy − 4z²`, the norm of `xe₃ + ye₄ + ze₅`.
    pub fn norm(&self) -> i64 {
        4 * self.x * self.y - 4 * self.z * self.z
    }

    pub fn vector(&self) -> [i64; 5] {
        [0, 0, self.x, self.y, self.z]
    }
}

impl fmt::Display for SublatticeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NormalForm {
    M1,
    M2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// `g([[1, ±1], [0, 1]])`: `x ↦ x + y ± 2z`, `z ↦ z ± y`.
    First(i64),
    /// `g([[1, 0], [±1, 1]])`: `y ↦ x + y ± 2z`, `z ↦ z ± x`.
    Second(i64),
    /// `e₃ ↔ e₄`.
    Swap,
    /// `e₅ ↦ −e₅`.
    Flip,
    /// `v ↦ −v`; the sublattice is unchanged, only its generator is renamed.
    Sign,
}

impl Move {
    pub fn apply(&self, t: SublatticeTriple) -> SublatticeTriple {
        let SublatticeTriple { x, y, z } = t;
        match *self {
            Move::First(s) => SublatticeTriple::new(x + y + 2 * s * z, y, z + s * y),
            Move::Second(s) => SublatticeTriple::new(x, x + y + 2 * s * z, z + s * x),
            Move::Swap => SublatticeTriple::new(y, x, z),
            Move::Flip => SublatticeTriple::new(x, y, -z),
            Move::Sign => SublatticeTriple::new(-x, -y, -z),
        }
    }

    /// The isometry realizing the move; `None` for the relabeling.
    pub fn isometry(&self) -> Option<IsometryNs> {
        let a = match *self {
            Move::First(s) => [[1, s], [0, 1]],
            Move::Second(s) => [[1, 0], [s, 1]],
            Move::Swap => [[0, 1], [1, 0]],
            Move::Flip => [[1, 0], [0, -1]],
            Move::Sign => return None,
        };
        Some(embed_gl2(&a).expect("unimodular"))
    }

    pub fn name(&self) -> String {
        match self {
            Move::First(s) => format!("first{}", if *s > 0 { "+" } else { "-" }),
            Move::Second(s) => format!("second{}", if *s > 0 { "+" } else { "-" }),
            Move::Swap => "swap34".into(),
            Move::Flip => "flip5".into(),
            Move::Sign => "sign".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub tag: NormalForm,
    pub word: Vec<Move>,
    pub end: SublatticeTriple,
}

impl Reduction {
    pub fn names(&self) -> Vec<String> {
        self.word.iter().map(Move::name).collect()
    }
}

/// Strictly decreases `|z|` until `|x|, |y| > |z|` or `z = 0`, then normalizes signs and order.
pub fn reduce_sublattice(t: SublatticeTriple, max_steps: usize) -> Result<Reduction, Error> {
    if !t.is_solution() {
        return Err(Error::NotASolution(t.x, t.y, t.z));
    }
    let mut cur = t;
    let mut word = Vec::new();
    let step = |m: Move, cur: &mut SublatticeTriple, word: &mut Vec<Move>| -> Result<(), Error> {
        if word.len() >= max_steps {
            return Err(Error::StepBound(max_steps));
        }
        *cur = m.apply(*cur);
        word.push(m);
        Ok(())
    };
    // x and y never vanish since xy = z² + 3 > 0.
    while cur.z != 0 && (cur.y.abs() <= cur.z.abs() || cur.x.abs() <= cur.z.abs()) {
        let m = if cur.y.abs() <= cur.z.abs() {
            Move::First(-cur.z.signum() * cur.y.signum())
        } else {
            Move::Second(-cur.z.signum() * cur.x.signum())
        };
        step(m, &mut cur, &mut word)?;
    }
    if cur.x < 0 {
        step(Move::Sign, &mut cur, &mut word)?;
    }
    let tag = if cur.z == 0 {
        if cur.x == 3 {
            step(Move::Swap, &mut cur, &mut word)?;
        }
        NormalForm::M1
    } else {
        if cur.z < 0 {
            step(Move::Flip, &mut cur, &mut word)?;
        }
        NormalForm::M2
    };
    let expected = match tag {
        NormalForm::M1 => SublatticeTriple::new(1, 3, 0),
        NormalForm::M2 => SublatticeTriple::new(2, 2, 1),
    };
    assert_eq!(cur, expected, "reduction ended off the normal forms");
    Ok(Reduction { tag, word, end: cur })
}

/// Replays the word with the 5×5 isometries; each step must be orthogonal
/// for `Q` and move the vector exactly as the triple moves (up to the sign relabeling).
pub fn certify_reduction(t: SublatticeTriple, r: &Reduction) -> bool {
    let mut cur = t;
    for m in &r.word {
        let next = m.apply(cur);
        if let Some(g) = m.isometry() {
            let v: Vec<BigInt> = cur.vector().iter().map(|c| BigInt::from(*c)).collect();
            let w: Vec<BigInt> = next.vector().iter().map(|c| BigInt::from(*c)).collect();
            if g.matrix().mul_vec(&v) != w {
                return false;
            }
        }
        if next.norm() != 12 {
            return false;
        }
        cur = next;
    }
    cur == r.end
}

/// All `(x, y, z)` in the box with `xy = z² + 3`, `|x| > |z|`, `|y| > |z|`, lexicographic.
pub fn enumerate_solutions(bound: i64) -> Vec<SublatticeTriple> {
    all_solutions(bound).into_iter().filter(|t| t.x.abs() > t.z.abs() && t.y.abs() > t.z.abs()).collect()
}

/// All solutions of `xy − z² = 3` in the box `max(|x|, |y|, |z|) ≤ bound`, lexicographic.
pub fn all_solutions(bound: i64) -> Vec<SublatticeTriple> {
    let mut out = Vec::new();
    for x in -bound..=bound {
        if x == 0 {
            continue;
        }
        for z in -bound..=bound {
            let n = z * z + 3;
            if n % x == 0 && (n / x).abs() <= bound {
                out.push(SublatticeTriple::new(x, n / x, z));
            }
        }
    }
    out
}

/// The paper lists only these four as reduced solutions.
pub fn is_printed_solution(t: &SublatticeTriple) -> bool {
    t.x.abs() == 2 && t.y.abs() == 2 && t.z.abs() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_forms() {
        let r = reduce_sublattice(SublatticeTriple::new(1, 3, 0), 10).unwrap();
        assert_eq!((r.tag, r.word.len()), (NormalForm::M1, 0));
        let r = reduce_sublattice(SublatticeTriple::new(2, 2, 1), 10).unwrap();
        assert_eq!((r.tag, r.word.len()), (NormalForm::M2, 0));
        let r = reduce_sublattice(SublatticeTriple::new(3, 1, 0), 10).unwrap();
        assert_eq!((r.tag, r.names()), (NormalForm::M1, vec!["swap34".to_string()]));
        assert_eq!(reduce_sublattice(SublatticeTriple::new(1, 1, 1), 10).unwrap_err(), Error::NotASolution(1, 1, 1));
    }

    #[test]
    fn every_solution_in_a_box_reduces() {
        for t in all_solutions(40) {
            let r = reduce_sublattice(t, 200).unwrap();
            assert!(certify_reduction(t, &r), "{t}");
        }
    }

    #[test]
    fn enumeration_has_extras() {
        let sols = enumerate_solutions(50);
        assert_eq!(sols.len(), 8);
        assert_eq!(sols.iter().filter(|t| is_printed_solution(t)).count(), 4);
        assert!(sols.contains(&SublatticeTriple::new(3, 1, 0)));
    }

    #[test]
    fn moves_are_isometries() {
        for m in [Move::First(1), Move::First(-1), Move::Second(1), Move::Second(-1), Move::Swap, Move::Flip] {
            assert!(m.isometry().is_some());
        }
    }
}
