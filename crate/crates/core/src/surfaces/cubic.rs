//! Cubic forms, their Hessians, and the invariant points of the cubic-surface strata.

use crate::exact::{int, vars, MultiPoly, Rational, Vars, WPPoint};
use crate::Error;

/// Homogeneous cubic in the variables at `xs`; the rest are parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicForm {
    poly: MultiPoly,
    xs: Vec<usize>,
}

impl CubicForm {
    pub fn new(poly: MultiPoly, xnames: &[&str]) -> Result<Self, Error> {
        let xs: Vec<usize> = xnames
            .iter()
            .map(|n| poly.var_index(n).unwrap_or_else(|| panic!("unknown variable {n}")))
            .collect();
        if poly.is_zero() || !poly.is_homogeneous_in(&xs, 3) {
            return Err(Error::NotHomogeneous { expected: 3, found: poly.degrees_in(&xs) });
        }
        Ok(CubicForm { poly, xs })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn xs(&self) -> &[usize] {
        &self.xs
    }
}

/// Determinant by cofactor expansion along the first row; fine up to 5×5.
pub fn det(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    match n {
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        _ => {
            let mut acc = MultiPoly::zero(m[0][0].vars());
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MultiPoly>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let t = &m[0][j] * &det(&minor);
                acc = if j % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

/// `det(∂²F/∂Xᵢ∂Xⱼ)`.
pub fn hessian_quartic(f: &CubicForm) -> MultiPoly {
    let first: Vec<MultiPoly> = f.xs.iter().map(|&i| f.poly.derivative(i)).collect();
    let m: Vec<Vec<MultiPoly>> = first.iter().map(|d| f.xs.iter().map(|&j| d.derivative(j)).collect()).collect();
    det(&m)
}

/// `c` with `a = c·b` when `c` is free of the variables at `xs` and nonzero.
pub fn proportionality(a: &MultiPoly, b: &MultiPoly, xs: &[usize]) -> Option<MultiPoly> {
    let c = a.div_exact(b)?;
    (!c.is_zero() && c.is_homogeneous_in(xs, 0)).then_some(c)
}

/// Sum of `weights[i]·eᵢ` per term, as a sorted set.
pub fn weighted_degrees(p: &MultiPoly, weights: &[u32]) -> Vec<u32> {
    let mut ds: Vec<u32> = p.terms().map(|(e, _)| e.iter().zip(weights).map(|(a, w)| a * w).sum()).collect();
    ds.sort_unstable();
    ds.dedup();
    ds
}

pub const STRATUM_WEIGHTS: [u32; 5] = [1, 2, 3, 4, 5];

fn point(coords: Vec<MultiPoly>) -> Result<WPPoint<MultiPoly>, Error> {
    let n = coords.len() as u32;
    WPPoint::new((1..=n).collect(), coords)
}

pub fn sigma_vars() -> Vars {
    vars(&["s1", "s2", "s3", "s4", "s5"])
}

/// `[σ₄² − 4σ₃σ₅ : σ₅³σ₁ : σ₅⁴σ₄ : σ₅⁶σ₂ : σ₅⁸]`; `s` holds `σ₁…σ₅`.
pub fn sylvester_invariants(s: &[MultiPoly; 5]) -> Result<WPPoint<MultiPoly>, Error> {
    let [s1, s2, s3, s4, s5] = s;
    point(vec![
        &s4.pow(2) - &(s3 * s5).scale(&int(4)),
        &s5.pow(3) * s1,
        &s5.pow(4) * s4,
        &s5.pow(6) * s2,
        s5.pow(8),
    ])
}

/// `[−4ρ₁ + a₀² : ρ₂ : 2ρ₃ : ρ₁ρ₃ : 0]`.
pub fn ns1_point(a0: &MultiPoly, rho: &[MultiPoly; 3]) -> Result<WPPoint<MultiPoly>, Error> {
    let [r1, r2, r3] = rho;
    point(vec![&a0.pow(2) - &r1.scale(&int(4)), r2.clone(), r3.scale(&int(2)), r1 * r3, MultiPoly::zero(a0.vars())])
}

/// `[−8b₀ : 1 + b₁³ : 0 : b₁³ : 0]`.
pub fn ns2_point(b0: &MultiPoly, b1: &MultiPoly) -> Result<WPPoint<MultiPoly>, Error> {
    let v = b0.vars();
    let zero = MultiPoly::zero(v);
    let b13 = b1.pow(3);
    point(vec![b0.scale(&int(-8)), &MultiPoly::one(v) + &b13, zero.clone(), b13, zero])
}

/// `[μ₃² − 4μ₂μ₄ : μ₄³ : 0 : 0 : 0]`.
pub fn cyclic_point(mu2: &MultiPoly, mu3: &MultiPoly, mu4: &MultiPoly) -> Result<WPPoint<MultiPoly>, Error> {
    let zero = MultiPoly::zero(mu2.vars());
    point(vec![&mu3.pow(2) - &(mu2 * mu4).scale(&int(4)), mu4.pow(3), zero.clone(), zero.clone(), zero])
}

/// Elementary symmetric polynomials `s₁, s₂, s₃` of three entries.
pub fn sym3(u: &[MultiPoly; 3]) -> [MultiPoly; 3] {
    let [a, b, c] = u;
    [&(a + b) + c, &(&(a * b) + &(b * c)) + &(c * a), &(a * b) * c]
}

/// `[−4s₁ + 1 : s₂ : 2s₃ : s₁s₃]` in `P(1,2,3,4)`.
pub fn dvg_map(u: &[MultiPoly; 3]) -> Result<WPPoint<MultiPoly>, Error> {
    let [s1, s2, s3] = sym3(u);
    let one = MultiPoly::one(u[0].vars());
    point(vec![&one - &s1.scale(&int(4)), s2, s3.scale(&int(2)), &s1 * &s3])
}

/// DvG on the diagonal `u₁ = u₂ = u₃ = u`, and the displayed `[−12u+1 : 3u² : 2u³ : 3u⁴]`.
pub fn dvg_specialize_hps(u: &MultiPoly) -> Result<(WPPoint<MultiPoly>, WPPoint<MultiPoly>), Error> {
    let computed = dvg_map(&[u.clone(), u.clone(), u.clone()])?;
    let one = MultiPoly::one(u.vars());
    let printed = point(vec![&one - &u.scale(&int(12)), u.pow(2).scale(&int(3)), u.pow(3).scale(&int(2)), u.pow(4).scale(&int(3))])?;
    Ok((computed, printed))
}

/// Evaluate every coordinate at a rational point of the parameter ring.
pub fn eval_point(p: &WPPoint<MultiPoly>, at: &[Rational]) -> Vec<Rational> {
    p.coords().iter().map(|c| c.eval(at)).collect()
}

pub fn x_vars(params: &[&str]) -> Vars {
    let mut names: Vec<&str> = params.to_vec();
    names.extend(["X0", "X1", "X2", "X3"]);
    vars(&names)
}

const XS: [&str; 4] = ["X0", "X1", "X2", "X3"];

fn xv(v: &Vars) -> [MultiPoly; 4] {
    XS.map(|n| MultiPoly::var(v, n))
}

/// `X₁³ + X₂³ + X₃³ − X₀²(a₀X₀ + 3a₁X₁ + 3a₂X₂ + 3a₃X₃)`.
pub fn s_ns1() -> CubicForm {
    let v = x_vars(&["a0", "a1", "a2", "a3"]);
    let [x0, x1, x2, x3] = xv(&v);
    let a: Vec<MultiPoly> = (0..4).map(|i| MultiPoly::var(&v, &format!("a{i}"))).collect();
    let lin = &(&(&(&a[0] * &x0) + &(&a[1] * &x1).scale(&int(3))) + &(&a[2] * &x2).scale(&int(3))) + &(&a[3] * &x3).scale(&int(3));
    let f = &(&(&x1.pow(3) + &x2.pow(3)) + &x3.pow(3)) - &(&x0.pow(2) * &lin);
    CubicForm::new(f, &XS).expect("cubic")
}

/// `X₀X₁X₂X₃ · (a₁X₁/X₀ + a₂X₂/X₀ + a₃X₃/X₀ + a₀ + a₁²X₀/X₁ + a₂²X₀/X₂ + a₃²X₀/X₃)`, expanded.
pub fn h_ns1_printed(v: &Vars) -> MultiPoly {
    let [x0, x1, x2, x3] = xv(v);
    let a: Vec<MultiPoly> = (0..4).map(|i| MultiPoly::var(v, &format!("a{i}"))).collect();
    let x123 = &(&x1 * &x2) * &x3;
    let mut h = &(&a[0] * &x0) * &x123;
    let xs = [&x1, &x2, &x3];
    for i in 0..3 {
        let others = xs[(i + 1) % 3] * xs[(i + 2) % 3];
        h = &h + &(&(&a[i + 1] * xs[i]) * &(xs[i] * &others));
        h = &h + &(&a[i + 1].pow(2) * &(&x0.pow(2) * &others));
    }
    h
}

/// `X₁³ + X₂³ + 2b₀X₃³ − 3X₃(b₁X₁X₃ + X₂X₃ + X₀²)`.
pub fn s_ns2() -> CubicForm {
    let v = x_vars(&["b0", "b1"]);
    let [x0, x1, x2, x3] = xv(&v);
    let (b0, b1) = (MultiPoly::var(&v, "b0"), MultiPoly::var(&v, "b1"));
    let inner = &(&(&b1 * &(&x1 * &x3)) + &(&x2 * &x3)) + &x0.pow(2);
    let f = &(&(&x1.pow(3) + &x2.pow(3)) + &(&b0 * &x3.pow(3)).scale(&int(2))) - &(&x3 * &inner).scale(&int(3));
    CubicForm::new(f, &XS).expect("cubic")
}

/// `X₁X₂X₃(−2b₀X₃ + b₁X₁ + X₂) + X₃³(X₁ + b₁²X₂) − X₀²X₁X₂`.
pub fn h_ns2_printed(v: &Vars) -> MultiPoly {
    let [x0, x1, x2, x3] = xv(v);
    let (b0, b1) = (MultiPoly::var(v, "b0"), MultiPoly::var(v, "b1"));
    let lin = &(&(&b0 * &x3).scale(&int(-2)) + &(&b1 * &x1)) + &x2;
    let t1 = &(&(&x1 * &x2) * &x3) * &lin;
    let t2 = &x3.pow(3) * &(&x1 + &(&b1.pow(2) * &x2));
    &(&t1 + &t2) - &(&x0.pow(2) * &(&x1 * &x2))
}

pub fn fermat() -> CubicForm {
    let v = x_vars(&[]);
    let f = xv(&v).iter().fold(MultiPoly::zero(&v), |acc, x| &acc + &x.pow(3));
    CubicForm::new(f, &XS).expect("cubic")
}

/// `Σ λᵢXᵢ³` with `X₄ = −(X₀ + X₁ + X₂ + X₃)` substituted.
pub fn sylvester_eliminated() -> CubicForm {
    let v = x_vars(&["l0", "l1", "l2", "l3", "l4"]);
    let (xs, x4) = sylvester_chart(&v);
    let f = (0..5).fold(MultiPoly::zero(&v), |acc, i| {
        let x = if i < 4 { &xs[i] } else { &x4 };
        &acc + &(&MultiPoly::var(&v, &format!("l{i}")) * &x.pow(3))
    });
    CubicForm::new(f, &XS).expect("cubic")
}

fn sylvester_chart(v: &Vars) -> ([MultiPoly; 4], MultiPoly) {
    let xs = xv(v);
    let x4 = -&xs.iter().fold(MultiPoly::zero(v), |acc, x| &acc + x);
    (xs, x4)
}

/// `Σ 1/(λᵢXᵢ)` cleared by `∏ λᵢXᵢ`, in the chart `X₄ = −ΣXᵢ`.
pub fn h_sylvester_printed(v: &Vars) -> MultiPoly {
    let (xs, x4) = sylvester_chart(v);
    let lx: Vec<MultiPoly> = (0..5)
        .map(|i| &MultiPoly::var(v, &format!("l{i}")) * if i < 4 { &xs[i] } else { &x4 })
        .collect();
    (0..5).fold(MultiPoly::zero(v), |acc, i| {
        let prod = (0..5).filter(|&j| j != i).fold(MultiPoly::one(v), |p, j| &p * &lx[j]);
        &acc + &prod
    })
}

/// `F` with `X_{perm[i]}` put in place of `Xᵢ`.
pub fn permute_x(p: &MultiPoly, xs: &[usize], perm: &[usize]) -> MultiPoly {
    let v = p.vars().clone();
    let mut images: Vec<MultiPoly> = v.iter().map(|n| MultiPoly::var(&v, n)).collect();
    for (k, &i) in xs.iter().enumerate() {
        images[i] = MultiPoly::var(&v, &v[xs[perm[k]]]);
    }
    p.substitute(&v, &images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_hessian() {
        let f = fermat();
        let h = hessian_quartic(&f);
        let v = f.poly().vars().clone();
        let m = xv(&v).iter().fold(MultiPoly::one(&v), |acc, x| &acc * x);
        assert_eq!(h, m.scale(&int(1296)));
    }

    #[test]
    fn ns1_hessian_constant() {
        let f = s_ns1();
        let c = proportionality(&hessian_quartic(&f), &h_ns1_printed(f.poly().vars()), f.xs()).unwrap();
        assert_eq!(c.constant_value(), Some(int(-1296)));
    }

    #[test]
    fn rejects_non_cubic() {
        let v = x_vars(&[]);
        assert!(CubicForm::new(MultiPoly::var(&v, "X0"), &XS).is_err());
    }

    #[test]
    fn fermat_type_i8() {
        let v = vars(&[]);
        let s = [5, 10, 10, 5, 1].map(|k| MultiPoly::int(&v, k));
        let p = sylvester_invariants(&s).unwrap();
        assert_eq!(eval_point(&p, &[])[0], int(-15));
        let base = [MultiPoly::int(&v, 1), MultiPoly::int(&v, 1), MultiPoly::int(&v, 1), MultiPoly::zero(&v), MultiPoly::zero(&v)];
        assert!(matches!(sylvester_invariants(&base), Err(Error::DegeneratePoint)));
    }
}
