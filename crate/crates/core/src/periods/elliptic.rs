//! Classical invariants of binary quartics and the discriminant of the toric family.

use crate::exact::{int, rat, vars, MultiPoly, Rational, Vars};

/// `aX⁴ + 4bX³ + 6cX² + 4dX + e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticCoeffs {
    pub a: MultiPoly,
    pub b: MultiPoly,
    pub c: MultiPoly,
    pub d: MultiPoly,
    pub e: MultiPoly,
}

impl QuarticCoeffs {
    /// From the plain coefficients of `X⁴, X³, X², X, 1`.
    pub fn from_monic_form(c4: MultiPoly, c3: MultiPoly, c2: MultiPoly, c1: MultiPoly, c0: MultiPoly) -> Self {
        QuarticCoeffs {
            a: c4,
            b: c3.scale(&rat(1, 4)),
            c: c2.scale(&rat(1, 6)),
            d: c1.scale(&rat(1, 4)),
            e: c0,
        }
    }

    /// `X ↦ λX` with `λ` a polynomial in the same ring.
    pub fn rescale(&self, lambda: &MultiPoly) -> Self {
        QuarticCoeffs {
            a: &self.a * &lambda.pow(4),
            b: &self.b * &lambda.pow(3),
            c: &self.c * &lambda.pow(2),
            d: &self.d * lambda,
            e: self.e.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticInvariants {
    pub g2: MultiPoly,
    pub g3: MultiPoly,
    pub delta: MultiPoly,
}

/// `g₂ = ae − 4bd + 3c²`, `g₃ = det[[a,b,c],[b,c,d],[c,d,e]]`, `Δ = g₂³ − 27g₃²`.
pub fn quartic_invariants(f: &QuarticCoeffs) -> QuarticInvariants {
    let QuarticCoeffs { a, b, c, d, e } = f;
    let g2 = &(&(a * e) - &(b * d).scale(&int(4))) + &(c * c).scale(&int(3));
    let g3 = &(&(&(&(a * &(c * e)) + &(b * &(c * d)).scale(&int(2))) - &(c * &(c * c))) - &(a * &(d * d))) - &(&(b * b) * e);
    let delta = &g2.pow(3) - &g3.pow(2).scale(&int(27));
    QuarticInvariants { g2, g3, delta }
}

pub fn u12_vars() -> Vars {
    vars(&["u1", "u2"])
}

/// `X⁴ + X³ + (−u₂ + u₁/2 + ¼)X² + (u₁/4)X + u₁²/16`.
pub fn u_family_quartic(v: &Vars) -> QuarticCoeffs {
    let (u1, u2) = (MultiPoly::var(v, "u1"), MultiPoly::var(v, "u2"));
    let c2 = &(&u1.scale(&rat(1, 2)) - &u2) + &MultiPoly::constant(v, rat(1, 4));
    QuarticCoeffs::from_monic_form(MultiPoly::one(v), MultiPoly::one(v), c2, u1.scale(&rat(1, 4)), u1.pow(2).scale(&rat(1, 16)))
}

/// `1 − 4u₁ − 4u₂` and `u₁u₂` in the given ring.
pub fn weighted_coordinates(v: &Vars) -> (MultiPoly, MultiPoly) {
    let (u1, u2) = (MultiPoly::var(v, "u1"), MultiPoly::var(v, "u2"));
    let a = &MultiPoly::one(v) - &(&u1 + &u2).scale(&int(4));
    (a, &u1 * &u2)
}

/// The displayed closed forms of `g₂`, `g₃`, `Δ_E`.
pub fn printed_invariants(v: &Vars) -> QuarticInvariants {
    let (a, b) = weighted_coordinates(v);
    let a2 = a.pow(2);
    QuarticInvariants {
        g2: (&a2 - &b.scale(&int(48))).scale(&rat(1, 192)),
        g3: (&a * &(&a2 - &b.scale(&int(72)))).scale(&rat(-1, 13824)),
        delta: (&b.pow(2) * &(&a2 - &b.scale(&int(64)))).scale(&rat(1, 4096)),
    }
}

/// Why `Δ_sing` could not be read as a polynomial in `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualRoot;

/// `∏(1 ± 2√u₁ ± 2√u₂ ± 2√u₃)` by eliminating one square root at a time:
/// `f ↦ f(sᵢ)·f(−sᵢ)` reduced modulo `sᵢ² = uᵢ`.
pub fn delta_sing() -> Result<MultiPoly, ResidualRoot> {
    let w = vars(&["s1", "s2", "s3", "u1", "u2", "u3"]);
    let pairs = [(0, 3), (1, 4), (2, 5)];
    let mut f = MultiPoly::one(&w);
    for i in 0..3 {
        f = &f + &MultiPoly::var(&w, &format!("s{}", i + 1)).scale(&int(2));
    }
    for (s, _) in pairs {
        let images: Vec<MultiPoly> = w
            .iter()
            .enumerate()
            .map(|(j, name)| {
                let x = MultiPoly::var(&w, name);
                if j == s {
                    -x
                } else {
                    x
                }
            })
            .collect();
        let flipped = f.substitute(&w, &images);
        f = (&f * &flipped).reduce_square_roots(&pairs);
    }
    if f.degrees_in(&[0, 1, 2]).iter().any(|&d| d > 0) {
        return Err(ResidualRoot);
    }
    let u = vars(&["u1", "u2", "u3"]);
    let zero = MultiPoly::zero(&u);
    let images = [zero.clone(), zero.clone(), zero, MultiPoly::var(&u, "u1"), MultiPoly::var(&u, "u2"), MultiPoly::var(&u, "u3")];
    Ok(f.substitute(&u, &images))
}

/// The same product evaluated at a rational point whose coordinates are squares.
pub fn delta_sing_at_squares(roots: [Rational; 3]) -> Rational {
    let mut acc = int(1);
    for mask in 0..8u32 {
        let mut f = int(1);
        for (i, r) in roots.iter().enumerate() {
            let sgn = if mask & (1 << i) == 0 { int(2) } else { int(-2) };
            f += sgn * r;
        }
        acc *= f;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_quartic_has_zero_g2() {
        let v = vars(&["t"]);
        let z = MultiPoly::zero(&v);
        let q = QuarticCoeffs { a: MultiPoly::one(&v), b: z.clone(), c: z.clone(), d: z.clone(), e: z };
        assert!(quartic_invariants(&q).g2.is_zero());
    }

    #[test]
    fn lemma_identities() {
        let v = u12_vars();
        let inv = quartic_invariants(&u_family_quartic(&v));
        assert_eq!(inv, printed_invariants(&v));
    }

    #[test]
    fn delta_sing_restriction() {
        let d = delta_sing().unwrap();
        let u = d.vars().clone();
        let at = d.eval(&[rat(1, 36), rat(1, 36), rat(1, 36)]);
        assert_eq!(at, int(0));
        assert_eq!(d.eval(&[rat(1, 9), rat(1, 25), rat(1, 49)]), delta_sing_at_squares([rat(1, 3), rat(1, 5), rat(1, 7)]));
        let restricted = d.specialize(&[("u3", int(0))]);
        let (u1, u2) = (MultiPoly::var(&u, "u1"), MultiPoly::var(&u, "u2"));
        let a = &MultiPoly::one(&u) - &(&u1 + &u2).scale(&int(4));
        let inner = &a.pow(2) - &(&u1 * &u2).scale(&int(64));
        assert_eq!(restricted, inner.pow(2));
    }
}
