//! The twenty boundary curves of the toric Hessian model and their Gram matrix.

use crate::exact::ZMatrix;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pt {
    Zero,
    Inf,
}

impl Pt {
    pub fn flip(self) -> Pt {
        match self {
            Pt::Zero => Pt::Inf,
            Pt::Inf => Pt::Zero,
        }
    }
}

/// A line `L` has exactly one free slot (`None`); an exceptional curve `E` has none.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CurveLabel {
    slots: [Option<Pt>; 3],
}

const AXES: [char; 3] = ['x', 'y', 'z'];

impl CurveLabel {
    pub fn line(axis: usize, ends: [Pt; 2]) -> Self {
        assert!(axis < 3);
        let mut slots = [None; 3];
        let mut it = ends.into_iter();
        for (i, s) in slots.iter_mut().enumerate() {
            if i != axis {
                *s = it.next();
            }
        }
        CurveLabel { slots }
    }

    pub fn exceptional(pts: [Pt; 3]) -> Self {
        CurveLabel { slots: pts.map(Some) }
    }

    pub fn slots(&self) -> [Option<Pt>; 3] {
        self.slots
    }

    pub fn is_line(&self) -> bool {
        self.slots.iter().any(|s| s.is_none())
    }

    /// `E_abc · L_stu = 1` iff two of `a=s, b=t, c=u` hold; other pairs of
    /// distinct curves meet trivially.
    pub fn intersect(&self, other: &CurveLabel) -> i64 {
        if self == other {
            return -2;
        }
        if self.is_line() == other.is_line() {
            return 0;
        }
        let agree = (0..3)
            .filter(|&i| matches!((self.slots[i], other.slots[i]), (Some(a), Some(b)) if a == b))
            .count();
        (agree == 2) as i64
    }

    /// Swap `0 ↔ ∞` in one coordinate.
    pub fn flip(&self, axis: usize) -> CurveLabel {
        let mut slots = self.slots;
        slots[axis] = slots[axis].map(Pt::flip);
        CurveLabel { slots }
    }

    /// Coordinate permutation: slot `i` moves to slot `perm[i]`.
    pub fn permute(&self, perm: [usize; 3]) -> CurveLabel {
        let mut slots = [None; 3];
        for i in 0..3 {
            slots[perm[i]] = self.slots[i];
        }
        CurveLabel { slots }
    }

    /// Parse `L∞y∞`, `Lx0i`, `E000`, `E0∞∞` (`i` and `∞` both mean infinity).
    pub fn parse(s: &str) -> Option<CurveLabel> {
        let mut chars = s.chars();
        let kind = chars.next()?;
        let body: Vec<char> = chars.collect();
        if body.len() != 3 {
            return None;
        }
        let mut slots = [None; 3];
        let mut free = 0;
        for (i, c) in body.iter().enumerate() {
            slots[i] = match c {
                '0' => Some(Pt::Zero),
                '∞' | 'i' => Some(Pt::Inf),
                c if *c == AXES[i] => {
                    free += 1;
                    None
                }
                _ => return None,
            };
        }
        match (kind, free) {
            ('L', 1) | ('E', 0) => Some(CurveLabel { slots }),
            _ => None,
        }
    }
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if self.is_line() { 'L' } else { 'E' })?;
        for (i, s) in self.slots.iter().enumerate() {
            match s {
                None => write!(f, "{}", AXES[i])?,
                Some(Pt::Zero) => write!(f, "0")?,
                Some(Pt::Inf) => write!(f, "∞")?,
            }
        }
        Ok(())
    }
}

pub fn cl(s: &str) -> CurveLabel {
    CurveLabel::parse(s).unwrap_or_else(|| panic!("bad curve label {s:?}"))
}

/// Twelve lines (x-, y-, z-lines) then eight exceptional curves.
pub fn all_labels() -> Vec<CurveLabel> {
    let pts = [Pt::Zero, Pt::Inf];
    let mut out = Vec::with_capacity(20);
    for axis in 0..3 {
        for a in pts {
            for b in pts {
                out.push(CurveLabel::line(axis, [a, b]));
            }
        }
    }
    for a in pts {
        for b in pts {
            for c in pts {
                out.push(CurveLabel::exceptional([a, b, c]));
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct CurveConfig {
    pub labels: Vec<CurveLabel>,
    pub gram: ZMatrix,
}

impl CurveConfig {
    pub fn index(&self, l: CurveLabel) -> usize {
        self.labels.iter().position(|x| *x == l).expect("known label")
    }

    /// Integer vector from `(coefficient, label)` pairs.
    pub fn vector(&self, terms: &[(i64, &str)]) -> Vec<i64> {
        let mut v = vec![0; self.labels.len()];
        for (c, l) in terms {
            v[self.index(cl(l))] += c;
        }
        v
    }

    /// Permutation matrix `P` with `P·e_l = e_{f(l)}`.
    pub fn permutation_matrix(&self, f: impl Fn(&CurveLabel) -> CurveLabel) -> ZMatrix {
        let n = self.labels.len();
        let mut p = ZMatrix::zeros(n, n);
        for (j, l) in self.labels.iter().enumerate() {
            p.set(self.index(f(l)), j, 1.into());
        }
        p
    }
}

pub fn curve_config() -> CurveConfig {
    let labels = all_labels();
    let rows: Vec<Vec<i64>> = labels.iter().map(|a| labels.iter().map(|b| a.intersect(b)).collect()).collect();
    CurveConfig { gram: ZMatrix::from_i64(&rows), labels }
}

/// Curves dropped from the 17-curve basis.
pub const REDUNDANT: [&str; 3] = ["E000", "L∞y∞", "L∞∞z"];

/// Relations expressing each redundant curve in the others. The third carries
/// an `L00z` term that the printed version lacks.
pub fn relations() -> Vec<(&'static str, Vec<(i64, &'static str)>)> {
    vec![
        (
            "E000",
            vec![
                (1, "E00∞"), (1, "E0∞0"), (3, "E0∞∞"), (-3, "E∞00"), (-1, "E∞0∞"), (-1, "E∞∞0"), (1, "E∞∞∞"),
                (-2, "Lx00"), (2, "Lx∞∞"), (2, "L0y∞"), (-2, "L∞y0"), (2, "L0∞z"), (-2, "L∞0z"),
            ],
        ),
        (
            "L∞y∞",
            vec![
                (2, "E0∞0"), (2, "E0∞∞"), (-2, "E∞00"), (-2, "E∞0∞"), (-1, "Lx00"), (-1, "Lx0∞"), (1, "Lx∞0"),
                (1, "Lx∞∞"), (1, "L0y0"), (1, "L0y∞"), (-1, "L∞y0"), (2, "L0∞z"), (-2, "L∞0z"),
            ],
        ),
        (
            "L∞∞z",
            vec![
                (2, "E00∞"), (2, "E0∞∞"), (-2, "E∞00"), (-2, "E∞∞0"), (-1, "Lx00"), (1, "Lx0∞"), (-1, "Lx∞0"),
                (1, "Lx∞∞"), (2, "L0y∞"), (-2, "L∞y0"), (1, "L00z"), (1, "L0∞z"), (-1, "L∞0z"),
            ],
        ),
    ]
}

/// The third relation as printed, without the `L00z` term.
pub fn printed_third_relation() -> (&'static str, Vec<(i64, &'static str)>) {
    let (lhs, mut rhs) = relations().remove(2);
    rhs.retain(|t| t.1 != "L00z");
    (lhs, rhs)
}

/// Indices (into the 20 labels) of the 17 basis curves, in label order.
pub fn basis_indices(cfg: &CurveConfig) -> Vec<usize> {
    let drop: Vec<usize> = REDUNDANT.iter().map(|l| cfg.index(cl(l))).collect();
    (0..cfg.labels.len()).filter(|i| !drop.contains(i)).collect()
}

pub fn gram17(cfg: &CurveConfig) -> ZMatrix {
    let b = basis_indices(cfg);
    cfg.gram.submatrix(&b, &b)
}

/// `17 × 20` matrix sending a curve vector to basis coordinates, using the
/// relations for the three redundant curves.
pub fn projection(cfg: &CurveConfig) -> ZMatrix {
    let b = basis_indices(cfg);
    let mut r = ZMatrix::zeros(b.len(), cfg.labels.len());
    for (row, &col) in b.iter().enumerate() {
        r.set(row, col, 1.into());
    }
    for (lhs, rhs) in relations() {
        let col = cfg.index(cl(lhs));
        for (c, l) in rhs {
            let row = b.iter().position(|&i| i == cfg.index(cl(l))).expect("relation uses basis curves");
            let v = r.get(row, col) + c;
            r.set(row, col, v);
        }
    }
    r
}

/// `17 × 17` matrix of a label permutation in basis coordinates.
pub fn induced_on_basis(cfg: &CurveConfig, f: impl Fn(&CurveLabel) -> CurveLabel) -> ZMatrix {
    let p = cfg.permutation_matrix(f);
    let b = basis_indices(cfg);
    let n = cfg.labels.len();
    let mut incl = ZMatrix::zeros(n, b.len());
    for (j, &i) in b.iter().enumerate() {
        incl.set(i, j, 1.into());
    }
    &(&projection(cfg) * &p) * &incl
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn labels_and_parsing() {
        let l = all_labels();
        assert_eq!(l.len(), 20);
        assert_eq!(l.iter().filter(|x| x.is_line()).count(), 12);
        for x in &l {
            assert_eq!(CurveLabel::parse(&x.to_string()), Some(*x));
        }
        assert_eq!(cl("Lx0i"), cl("Lx0∞"));
        assert!(CurveLabel::parse("Ly00").is_none());
    }

    #[test]
    fn relations_pair_to_zero() {
        let cfg = curve_config();
        let pairs_zero = |lhs: &str, rhs: &[(i64, &str)]| {
            let mut t = rhs.to_vec();
            t.push((-1, lhs));
            let v: Vec<BigInt> = cfg.vector(&t).into_iter().map(BigInt::from).collect();
            cfg.gram.mul_vec(&v).iter().all(|c| *c == BigInt::from(0))
        };
        for (lhs, rhs) in relations() {
            assert!(pairs_zero(lhs, &rhs), "{lhs}");
        }
        let (lhs, rhs) = printed_third_relation();
        assert!(!pairs_zero(lhs, &rhs));
    }

    #[test]
    fn printed_intersection_rule() {
        assert_eq!(cl("E000").intersect(&cl("Lx00")), 1);
        assert_eq!(cl("E000").intersect(&cl("Lx0∞")), 0);
        assert_eq!(cl("Lx00").intersect(&cl("L0y0")), 0);
        let cfg = curve_config();
        assert!(cfg.gram.is_symmetric());
        assert!((0..20).all(|i| *cfg.gram.get(i, i) == BigInt::from(-2)));
        // every E meets three lines, every line two E's
        for (i, l) in cfg.labels.iter().enumerate() {
            let ones = (0..20).filter(|&j| *cfg.gram.get(i, j) == BigInt::from(1)).count();
            assert_eq!(ones, if l.is_line() { 2 } else { 3 });
        }
    }
}
