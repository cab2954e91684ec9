//! The toric model `H(u) ⊂ (P¹)³`: boundary lines, the eight `A₁` points, and
//! fixed points of the Enriques involution.

use crate::exact::{int, vars, MultiPoly, Vars};
use crate::lattice::curves::{CurveLabel, Pt};
use crate::Error;
use serde::Serialize;

/// `[x₀, x₁, y₀, y₁, z₀, z₁]` then the parameters; affine `x = x₁/x₀`.
pub fn tri_vars() -> Vars {
    vars(&["x0", "x1", "y0", "y1", "z0", "z1", "u1", "u2", "u3"])
}

const AXIS: [&str; 3] = ["x", "y", "z"];

/// Index of the homogeneous coordinate `k` of `axis` in [`tri_vars`].
fn hidx(axis: usize, k: usize) -> usize {
    2 * axis + k
}

/// Form of multidegree `(2, 2, 2)` in the three coordinate pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriForm {
    poly: MultiPoly,
}

impl TriForm {
    pub fn new(poly: MultiPoly) -> Result<Self, Error> {
        let found: Vec<Vec<u32>> = (0..3).map(|a| poly.degrees_in(&[hidx(a, 0), hidx(a, 1)])).collect();
        if poly.is_zero() || found.iter().any(|d| d != &[2]) {
            return Err(Error::WrongMultidegree {
                expected: vec![2, 2, 2],
                found: found.iter().map(|d| d.last().copied().unwrap_or(0)).collect(),
            });
        }
        Ok(TriForm { poly })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }
}

/// `xyz(x + y + z + 1) + u₁yz + u₂zx + u₃xy` for `x, y, z, u` in any one ring.
pub fn f_u(x: &MultiPoly, y: &MultiPoly, z: &MultiPoly, u: &[MultiPoly; 3]) -> MultiPoly {
    let xyz = &(x * y) * z;
    let one = MultiPoly::one(x.vars());
    let s = &(&(x + y) + z) + &one;
    let mixed = &(&(&u[0] * &(y * z)) + &(&u[1] * &(z * x))) + &(&u[2] * &(x * y));
    &(&xyz * &s) + &mixed
}

/// `x₀²y₀²z₀² · f_u(x₁/x₀, y₁/y₀, z₁/z₀)`.
pub fn toric_model() -> TriForm {
    let v = tri_vars();
    let h: Vec<MultiPoly> = v.iter().take(6).map(|n| MultiPoly::var(&v, n)).collect();
    let u = [1, 2, 3].map(|i| MultiPoly::var(&v, &format!("u{i}")));
    let (x0, x1, y0, y1, z0, z1) = (&h[0], &h[1], &h[2], &h[3], &h[4], &h[5]);
    let xyz = &(x1 * y1) * z1;
    let cross = &(x0 * y0) * z0;
    let s = &(&(&(x1 * &(y0 * z0)) + &(y1 * &(x0 * z0))) + &(z1 * &(x0 * y0))) + &cross;
    let mixed = &(&(&(&u[0] * &x0.pow(2)) * &(&(y0 * y1) * &(z0 * z1))) + &(&(&u[1] * &y0.pow(2)) * &(&(x0 * x1) * &(z0 * z1))))
        + &(&(&u[2] * &z0.pow(2)) * &(&(x0 * x1) * &(y0 * y1)));
    TriForm::new(&(&xyz * s) + &mixed).expect("degree (2,2,2)")
}

/// `0 ↦ [1:0]`, `∞ ↦ [0:1]`.
fn homogeneous(p: Pt) -> [i64; 2] {
    match p {
        Pt::Zero => [1, 0],
        Pt::Inf => [0, 1],
    }
}

fn pt_name(p: Pt) -> &'static str {
    match p {
        Pt::Zero => "0",
        Pt::Inf => "∞",
    }
}

/// A boundary line as the common zero set of two homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryLine {
    pub label: String,
    /// `(axis, k)`: the line lies in `{axis coordinate k = 0}`.
    pub forms: [(usize, usize); 2],
}

impl BoundaryLine {
    pub fn contains(&self, p: [Pt; 3]) -> bool {
        self.forms.iter().all(|&(a, k)| homogeneous(p[a])[k] == 0)
    }

    pub fn curve(&self) -> CurveLabel {
        CurveLabel::parse(&self.label).expect("well formed")
    }
}

/// The coordinate that vanishes on `{axis = p}`.
fn vanishing_coordinate(p: Pt) -> usize {
    match p {
        Pt::Zero => 1,
        Pt::Inf => 0,
    }
}

fn line_label(fixed: [(usize, Pt); 2]) -> String {
    let mut s = String::from("L");
    for a in 0..3 {
        match fixed.iter().find(|(b, _)| *b == a) {
            Some((_, p)) => s.push_str(pt_name(*p)),
            None => s.push_str(AXIS[a]),
        }
    }
    s
}

/// What the form restricts to on one boundary divisor.
#[derive(Clone, Debug, Serialize)]
pub struct DivisorRestriction {
    pub divisor: String,
    pub restriction: String,
    pub single_monomial: bool,
    pub expected_shape: bool,
    pub lines: Vec<String>,
}

/// Restrict to each of the six divisors `{axis = 0}`, `{axis = ∞}` and read off lines
/// from the linear factors. The expected shape is `c · t² · ∏ b₀b₁` over the other two
/// axes, with `t` the surviving coordinate on the divisor and `c` a unit or a `uᵢ`.
pub fn boundary_lines(f: &TriForm) -> (Vec<DivisorRestriction>, Vec<BoundaryLine>) {
    let v = f.poly.vars().clone();
    let mut rows = Vec::new();
    let mut lines: Vec<BoundaryLine> = Vec::new();
    for axis in 0..3 {
        for p in [Pt::Zero, Pt::Inf] {
            let k = vanishing_coordinate(p);
            let name = v[hidx(axis, k)].clone();
            let r = f.poly.specialize(&[(name.as_str(), int(0))]);
            let single = r.len() == 1;
            let mut found = Vec::new();
            let mut shape = single;
            if let Some((e, _)) = r.terms().next().filter(|_| single) {
                shape &= e[hidx(axis, 1 - k)] == 2 && e[hidx(axis, k)] == 0;
                let params: u32 = e[6..].iter().sum();
                shape &= params <= 1;
                for b in (0..3).filter(|&b| b != axis) {
                    shape &= e[hidx(b, 0)] == 1 && e[hidx(b, 1)] == 1;
                    for kb in 0..2 {
                        if e[hidx(b, kb)] > 0 {
                            let q = if kb == 0 { Pt::Inf } else { Pt::Zero };
                            let mut fixed = [(axis, p), (b, q)];
                            fixed.sort();
                            let line = BoundaryLine { label: line_label(fixed), forms: [(axis, k), (b, kb)] };
                            found.push(line.label.clone());
                            if !lines.iter().any(|l| l.label == line.label) {
                                lines.push(line);
                            }
                        }
                    }
                }
            }
            rows.push(DivisorRestriction {
                divisor: format!("{}={}", AXIS[axis], pt_name(p)),
                restriction: r.to_string(),
                single_monomial: single,
                expected_shape: shape,
                lines: found,
            });
        }
    }
    (rows, lines)
}

pub fn fixed_points() -> Vec<[Pt; 3]> {
    let pts = [Pt::Zero, Pt::Inf];
    let mut out = Vec::with_capacity(8);
    for a in pts {
        for b in pts {
            for c in pts {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Local data of the form at one torus-fixed point.
#[derive(Clone, Debug, Serialize)]
pub struct LocalQuadric {
    pub point: String,
    pub vanishes: bool,
    pub critical: bool,
    pub zero_diagonal: bool,
    /// Off-diagonal entries `(xy, xz, yz)` of the matrix of second derivatives.
    pub off_diagonal: [String; 3],
    pub det: String,
    pub det_nonzero: bool,
}

impl LocalQuadric {
    pub fn is_a1(&self) -> bool {
        self.vanishes && self.critical && self.zero_diagonal && self.det_nonzero
    }
}

/// Chart at `p`: coordinate `0` uses `(1, t)`, coordinate `∞` uses `(t, 1)`.
pub fn singular_points(f: &TriForm) -> Vec<LocalQuadric> {
    let w = vars(&["tx", "ty", "tz", "u1", "u2", "u3"]);
    let t: Vec<MultiPoly> = (0..3).map(|i| MultiPoly::var(&w, &format!("t{}", AXIS[i]))).collect();
    let one = MultiPoly::one(&w);
    let zero_t = [("tx", int(0)), ("ty", int(0)), ("tz", int(0))];
    fixed_points()
        .into_iter()
        .map(|p| {
            let mut images = Vec::with_capacity(9);
            for a in 0..3 {
                match p[a] {
                    Pt::Zero => images.extend([one.clone(), t[a].clone()]),
                    Pt::Inf => images.extend([t[a].clone(), one.clone()]),
                }
            }
            for i in 1..=3 {
                images.push(MultiPoly::var(&w, &format!("u{i}")));
            }
            let g = f.poly.substitute(&w, &images);
            let at0 = |q: &MultiPoly| q.specialize(&zero_t);
            let vanishes = at0(&g).is_zero();
            let critical = (0..3).all(|i| at0(&g.derivative(i)).is_zero());
            let m: Vec<Vec<MultiPoly>> = (0..3).map(|i| (0..3).map(|j| at0(&g.derivative(i).derivative(j))).collect()).collect();
            let d = super::cubic::det(&m);
            LocalQuadric {
                point: format!("({},{},{})", pt_name(p[0]), pt_name(p[1]), pt_name(p[2])),
                vanishes,
                critical,
                zero_diagonal: (0..3).all(|i| m[i][i].is_zero()),
                off_diagonal: [m[0][1].to_string(), m[0][2].to_string(), m[1][2].to_string()],
                det: d.to_string(),
                det_nonzero: !d.is_zero(),
            }
        })
        .collect()
}

/// `f_u(s₁, s₂, s₃)` and `s₁s₂s₃(1 + 2s₁ + 2s₂ + 2s₃)`, both reduced modulo `sᵢ² = uᵢ`.
pub fn enriques_fixed_point_identity() -> (MultiPoly, MultiPoly) {
    let w = vars(&["s1", "s2", "s3", "u1", "u2", "u3"]);
    let s: Vec<MultiPoly> = (1..=3).map(|i| MultiPoly::var(&w, &format!("s{i}"))).collect();
    let u = [1, 2, 3].map(|i| MultiPoly::var(&w, &format!("u{i}")));
    let roots = [(0, 3), (1, 4), (2, 5)];
    let lhs = f_u(&s[0], &s[1], &s[2], &u).reduce_square_roots(&roots);
    let lin = &(&(&s[0] + &s[1]) + &s[2]).scale(&int(2)) + &MultiPoly::one(&w);
    let rhs = (&(&(&s[0] * &s[1]) * &s[2]) * &lin).reduce_square_roots(&roots);
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dehomogenizes_to_f_u() {
        let f = toric_model();
        let v = f.poly().vars().clone();
        let one = MultiPoly::one(&v);
        let mut images: Vec<MultiPoly> = v.iter().map(|n| MultiPoly::var(&v, n)).collect();
        for a in 0..3 {
            images[hidx(a, 0)] = one.clone();
        }
        let affine = f.poly().substitute(&v, &images);
        let x = |n: &str| MultiPoly::var(&v, n);
        let direct = f_u(&x("x1"), &x("y1"), &x("z1"), &[x("u1"), x("u2"), x("u3")]);
        assert_eq!(affine, direct);
    }

    #[test]
    fn x_infinity_restriction() {
        let (rows, lines) = boundary_lines(&toric_model());
        let r = rows.iter().find(|r| r.divisor == "x=∞").unwrap();
        assert_eq!(r.restriction, "x1^2*y0*y1*z0*z1");
        let mut got = r.lines.clone();
        got.sort();
        let mut want = vec!["L∞y0", "L∞y∞", "L∞0z", "L∞∞z"];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(lines.len(), 12);
    }

    #[test]
    fn origin_is_a1() {
        let q = singular_points(&toric_model());
        assert!(q.iter().all(|l| l.is_a1()));
        assert_eq!(q[0].det, "2*u1*u2*u3");
    }

    #[test]
    fn enriques_identity() {
        let (l, r) = enriques_fixed_point_identity();
        assert_eq!(l, r);
    }

    #[test]
    fn rejects_wrong_degree() {
        let v = tri_vars();
        assert!(TriForm::new(MultiPoly::var(&v, "x0")).is_err());
    }
}
