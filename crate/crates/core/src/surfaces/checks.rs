//! The invariants suite: strata points, the DvG map, Hessians, and the toric model.

use super::cubic::*;
use super::toric::*;
use crate::exact::{int, rat, vars, wp_eq, MultiPoly, Rational, WPPoint};
use crate::lattice::curves::{curve_config, CurveLabel};
use crate::periods::elliptic::weighted_coordinates;
use crate::report::{CheckReport, CheckResult, Status};
use crate::Error;
use num_traits::Zero;
use serde_json::{json, Value};

pub const SYLVESTER: &str = "I₈ = σ₄² − 4σ₃σ₅, I₁₆ = σ₅³σ₁, I₂₄ = σ₅⁴σ₄, I₃₂ = σ₅⁶σ₂, I₄₀ = σ₅⁸";
pub const STRATA: &str = "[S_ns1(a)] = [−4ρ₁ + a₀² : ρ₂ : 2ρ₃ : ρ₁ρ₃ : 0], [S_ns2(b)] = [−8b₀ : 1+b₁³ : 0 : b₁³ : 0], [S_cyc] = [μ₃² − 4μ₂μ₄ : μ₄³ : 0 : 0 : 0]";
pub const SEMISTABLE: &str = "t³ = xyz corresponds to [8:1:0:0:0]; the Fermat cubic to [1:0:0:0:0]";
pub const DVG: &str = "DvG : 𝒰 → P(1,2,3,4), (u₁,u₂,u₃) ↦ [−4s₁ + 1 : s₂ : 2s₃ : s₁s₃]";
pub const HPS_ROW: &str = "H_PS(u) ↦ [−12u+1 : 3u² : 2u³ : 3u⁴]";
pub const HESSIAN: &str = "the Hessian surface of S_ns1(a), S_ns2(b), S_λ";
pub const TORIC: &str = "H(u) ∩ ((P¹)³ − (ℂ×)³) is twelve lines meeting at eight A₁ points";
pub const INCIDENCE: &str = "E_abc · L_stu = 1 iff two of a=s, b=t, c=u hold";
pub const ENRIQUES: &str = "fixed points of ε are (±√u₁, ±√u₂, ±√u₃)";

fn coords_json(p: &WPPoint<MultiPoly>) -> Value {
    json!(p.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>())
}

fn zero_slots(p: &WPPoint<MultiPoly>) -> Vec<usize> {
    p.zero_coordinates().into_iter().map(|i| i + 1).collect()
}

pub fn strata_checks() -> Result<CheckReport, Error> {
    let mut rep = CheckReport::new();
    let sv = sigma_vars();
    let sig: [MultiPoly; 5] = std::array::from_fn(|i| MultiPoly::var(&sv, &format!("s{}", i + 1)));
    let inv = sylvester_invariants(&sig)?;
    // σᵢ has weight i, so the k-th coordinate has weight 8k.
    let degs: Vec<Vec<u32>> = inv.coords().iter().map(|c| weighted_degrees(c, &[1, 2, 3, 4, 5])).collect();
    rep.push(CheckResult::compare(
        "invariants.sylvester.weights",
        SYLVESTER,
        json!([[8], [16], [24], [32], [40]]),
        json!(degs),
    ));
    let c = vars(&[]);
    let fermat_type = [5, 10, 10, 5, 1].map(|k| MultiPoly::int(&c, k));
    let i8 = eval_point(&sylvester_invariants(&fermat_type)?, &[])[0].clone();
    let base = [1, 1, 1, 0, 0].map(|k| MultiPoly::int(&c, k));
    let base_rejected = matches!(sylvester_invariants(&base), Err(Error::DegeneratePoint));
    rep.push(CheckResult::compare(
        "invariants.sylvester.values",
        SYLVESTER,
        json!({ "I8_at_all_ones": "-15", "base_locus_rejected": true }),
        json!({ "I8_at_all_ones": i8.to_string(), "base_locus_rejected": base_rejected }),
    ));

    let rv = vars(&["a0", "r1", "r2", "r3"]);
    let a0 = MultiPoly::var(&rv, "a0");
    let rho = [1, 2, 3].map(|i| MultiPoly::var(&rv, &format!("r{i}")));
    let ns1 = ns1_point(&a0, &rho)?;
    // a₀ weight 1 and ρᵢ weight 2i make the k-th coordinate weight 2k.
    let ns1_degs: Vec<Vec<u32>> = ns1.coords().iter().take(4).map(|c| weighted_degrees(c, &[1, 2, 4, 6])).collect();
    rep.push(CheckResult::compare(
        "invariants.strata.ns1",
        STRATA,
        json!({ "vanishing": [5], "weights": [[2], [4], [6], [8]] }),
        json!({ "vanishing": zero_slots(&ns1), "weights": ns1_degs }),
    ));
    let bv = vars(&["b0", "b1"]);
    let ns2 = ns2_point(&MultiPoly::var(&bv, "b0"), &MultiPoly::var(&bv, "b1"))?;
    rep.push(CheckResult::new(
        "invariants.strata.ns2",
        STRATA,
        Status::from_bool(zero_slots(&ns2) == [3, 5]),
        json!({ "vanishing": [3, 5] }),
        json!({ "vanishing": zero_slots(&ns2), "point": coords_json(&ns2) }),
    ));
    let mv = vars(&["m2", "m3", "m4"]);
    let mu = [2, 3, 4].map(|i| MultiPoly::var(&mv, &format!("m{i}")));
    let cyc = cyclic_point(&mu[0], &mu[1], &mu[2])?;
    let zero = MultiPoly::zero(&mv);
    let degenerate = matches!(cyclic_point(&mu[0], &zero, &zero), Err(Error::DegeneratePoint));
    rep.push(CheckResult::new(
        "invariants.strata.cyclic",
        STRATA,
        Status::from_bool(zero_slots(&cyc) == [3, 4, 5] && degenerate),
        json!({ "vanishing": [3, 4, 5], "degenerate_rejected": true }),
        json!({ "vanishing": zero_slots(&cyc), "degenerate_rejected": degenerate, "point": coords_json(&cyc) }),
    ));

    let semi = ns2_point(&MultiPoly::int(&c, -1), &MultiPoly::zero(&c))?;
    let target = WPPoint::new(STRATUM_WEIGHTS.to_vec(), [8, 1, 0, 0, 0].map(|k| MultiPoly::int(&c, k)).to_vec())?;
    let hit = wp_eq(&semi, &target, &MultiPoly::one(&c))?;
    rep.push(CheckResult::compare(
        "invariants.strata.semistable_witness",
        SEMISTABLE,
        json!({ "b": ["-1", "0"], "equals_[8:1:0:0:0]": true }),
        json!({ "b": ["-1", "0"], "equals_[8:1:0:0:0]": hit }),
    ));
    rep.push(
        CheckResult::new(
            "invariants.strata.fermat_point",
            SEMISTABLE,
            Status::Skipped,
            json!({ "point": "[1:0:0:0:0]" }),
            Value::Null,
        )
        .with_note("needs Salmon invariants of an arbitrary cubic; recorded, not tested"),
    );
    Ok(rep)
}

pub fn dvg_checks() -> Result<CheckReport, Error> {
    let mut rep = CheckReport::new();
    let uv = vars(&["u"]);
    let u = MultiPoly::var(&uv, "u");
    let (computed, printed) = dvg_specialize_hps(&u)?;
    let at_zero = eval_point(&computed, &[int(0)]).iter().map(|r| r.to_string()).collect::<Vec<_>>();
    rep.push(CheckResult::compare(
        "invariants.dvg.hps_row",
        HPS_ROW,
        json!({ "point": coords_json(&printed), "at_u=0": ["1", "0", "0", "0"] }),
        json!({ "point": coords_json(&computed), "at_u=0": at_zero }),
    ));

    let v3 = vars(&["u1", "u2", "u3"]);
    let us = [1, 2, 3].map(|i| MultiPoly::var(&v3, &format!("u{i}")));
    let dvg = dvg_map(&us)?;
    let ns1 = ns1_point(&MultiPoly::one(&v3), &sym3(&us))?;
    let agree = ns1.coords()[..4] == dvg.coords()[..];
    rep.push(CheckResult::compare(
        "invariants.dvg.ns1_consistency",
        DVG,
        json!({ "first_four_agree": true, "fifth": "0" }),
        json!({ "first_four_agree": agree, "fifth": ns1.coords()[4].to_string() }),
    ));

    // u₃ → 0 lands on [A : B : 0 : 0] with the weighted coordinates of the elliptic fibration.
    let limit: Vec<MultiPoly> = dvg.coords().iter().map(|p| p.specialize(&[("u3", int(0))])).collect();
    let (a, b) = weighted_coordinates(&v3);
    let expect = [a, b, MultiPoly::zero(&v3), MultiPoly::zero(&v3)];
    rep.push(CheckResult::compare(
        "invariants.dvg.u3_limit",
        DVG,
        json!(expect.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
        json!(limit.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
    ));
    Ok(rep)
}

fn hessian_check(id: &str, f: &CubicForm, printed: &MultiPoly, expected_constant: Option<i64>) -> CheckResult {
    let h = hessian_quartic(f);
    let c = proportionality(&h, printed, f.xs());
    let computed = json!({ "proportional": c.is_some(), "constant": c.as_ref().map(|c| c.to_string()) });
    let expected = json!({ "proportional": true, "constant": expected_constant.map(|k| k.to_string()) });
    let status = match (&c, expected_constant) {
        (Some(c), Some(k)) => Status::from_bool(c.constant_value() == Some(int(k))),
        (Some(c), None) => Status::from_bool(c.constant_value().is_some()),
        (None, _) => Status::Fail,
    };
    CheckResult::new(id, HESSIAN, status, expected, computed).with_note(format!("Hessian has {} terms", h.len()))
}

pub fn hessian_checks() -> CheckReport {
    let mut rep = CheckReport::new();
    let ns1 = s_ns1();
    rep.push(hessian_check("invariants.hessian.ns1", &ns1, &h_ns1_printed(ns1.poly().vars()), Some(-1296)));
    let ns2 = s_ns2();
    rep.push(hessian_check("invariants.hessian.ns2", &ns2, &h_ns2_printed(ns2.poly().vars()), Some(1296)));
    let fermat = fermat();
    let v = fermat.poly().vars().clone();
    let monomial = ["X0", "X1", "X2", "X3"].iter().fold(MultiPoly::one(&v), |acc, n| &acc * &MultiPoly::var(&v, n));
    rep.push(hessian_check("invariants.hessian.fermat", &fermat, &monomial, Some(1296)));
    let syl = sylvester_eliminated();
    rep.push(hessian_check("invariants.hessian.sylvester", &syl, &h_sylvester_printed(syl.poly().vars()), Some(1296)));

    // Permuting the X-variables of F permutes the Hessian the same way.
    let perms: [[usize; 4]; 2] = [[1, 2, 3, 0], [0, 2, 1, 3]];
    let ok = perms.iter().all(|perm| {
        let moved = CubicForm::new(permute_x(ns2.poly(), ns2.xs(), perm), &["X0", "X1", "X2", "X3"]).expect("still cubic");
        hessian_quartic(&moved) == permute_x(&hessian_quartic(&ns2), ns2.xs(), perm)
    });
    rep.push(CheckResult::compare(
        "invariants.hessian.permutation",
        HESSIAN,
        json!({ "equivariant": true, "permutations": perms }),
        json!({ "equivariant": ok, "permutations": perms }),
    ));
    rep
}

pub fn toric_checks() -> CheckReport {
    let mut rep = CheckReport::new();
    let f = toric_model();
    let (rows, lines) = boundary_lines(&f);
    let shapes_ok = rows.iter().all(|r| r.expected_shape && r.lines.len() == 4);
    rep.push(CheckResult::new(
        "invariants.toric.boundary_lines",
        TORIC,
        Status::from_bool(shapes_ok && lines.len() == 12),
        json!({ "divisors": 6, "lines_per_divisor": 4, "distinct_lines": 12 }),
        json!({ "divisors": rows, "distinct_lines": lines.len() }),
    ));
    let x_inf = rows.iter().find(|r| r.divisor == "x=∞").map(|r| {
        let mut l = r.lines.clone();
        l.sort();
        json!({ "restriction": r.restriction, "lines": l })
    });
    let mut want = vec!["L∞0z", "L∞y0", "L∞y∞", "L∞∞z"];
    want.sort();
    rep.push(CheckResult::compare(
        "invariants.toric.x_infinity",
        TORIC,
        json!({ "restriction": "x1^2*y0*y1*z0*z1", "lines": want }),
        json!(x_inf),
    ));

    let points = fixed_points();
    let on_two = points.iter().filter(|p| lines.iter().filter(|l| l.contains(**p)).count() >= 2).count();
    let quad = singular_points(&f);
    let all_a1 = quad.iter().all(|q| q.is_a1());
    rep.push(CheckResult::new(
        "invariants.toric.singular_points",
        TORIC,
        Status::from_bool(on_two == 8 && all_a1 && quad[0].det == "2*u1*u2*u3"),
        json!({ "intersection_points": 8, "all_a1": true, "det_at_origin": "2*u1*u2*u3" }),
        json!({ "intersection_points": on_two, "all_a1": all_a1, "det_at_origin": quad[0].det, "local": quad }),
    ));

    // Incidence of derived lines and fixed points against the lattice Gram matrix.
    let cfg = curve_config();
    let mut mismatches = Vec::new();
    for p in &points {
        let e = CurveLabel::exceptional(*p);
        for l in &lines {
            let geometric = l.contains(*p) as i64;
            let gram = cfg.gram.get(cfg.index(e), cfg.index(l.curve())).to_string();
            if gram != geometric.to_string() {
                mismatches.push(json!([e.to_string(), l.label, geometric, gram]));
            }
        }
    }
    let mut derived: Vec<String> = lines.iter().map(|l| l.label.clone()).collect();
    let mut lattice_lines: Vec<String> = cfg.labels.iter().filter(|l| l.is_line()).map(|l| l.to_string()).collect();
    derived.sort();
    lattice_lines.sort();
    rep.push(CheckResult::compare(
        "invariants.toric.incidence_matches_lattice",
        INCIDENCE,
        json!({ "same_lines": true, "mismatches": [] }),
        json!({ "same_lines": derived == lattice_lines, "mismatches": mismatches }),
    ));
    rep
}

fn eval_f_u(s: [Rational; 3], u: [Rational; 3]) -> Rational {
    let c = vars(&[]);
    let k = |r: &Rational| MultiPoly::constant(&c, r.clone());
    let uu = [k(&u[0]), k(&u[1]), k(&u[2])];
    f_u(&k(&s[0]), &k(&s[1]), &k(&s[2]), &uu).constant_value().expect("constant")
}

pub fn enriques_checks() -> CheckReport {
    let mut rep = CheckReport::new();
    let (lhs, rhs) = enriques_fixed_point_identity();
    rep.push(CheckResult::new(
        "invariants.enriques.identity",
        ENRIQUES,
        Status::from_bool(lhs == rhs),
        json!({ "reduced": rhs.to_string() }),
        json!({ "reduced": lhs.to_string() }),
    ));
    let sixth = rat(-1, 6);
    let on = eval_f_u([sixth.clone(), sixth.clone(), sixth], [rat(1, 36), rat(1, 36), rat(1, 36)]);
    let mut factors = Vec::new();
    let mut values_zero = 0;
    for mask in 0..8 {
        let s: [Rational; 3] = std::array::from_fn(|i| if mask & (1 << i) == 0 { int(1) } else { int(-1) });
        factors.push((int(1) + int(2) * (&s[0] + &s[1] + &s[2])).to_string());
        values_zero += eval_f_u(s, [int(1), int(1), int(1)]).is_zero() as usize;
    }
    factors.sort_by_key(|f| f.parse::<i64>().unwrap_or(0));
    factors.dedup();
    rep.push(CheckResult::compare(
        "invariants.enriques.values",
        ENRIQUES,
        json!({ "on_H_at_1/36": true, "factors_at_1": ["-5", "-1", "3", "7"], "fixed_points_on_H_at_1": 0 }),
        json!({ "on_H_at_1/36": on.is_zero(), "factors_at_1": factors, "fixed_points_on_H_at_1": values_zero }),
    ));
    rep
}

/// Everything in the invariants suite.
pub fn invariants_suite() -> Result<CheckReport, Error> {
    let (left, right) = rayon::join(
        || -> Result<CheckReport, Error> {
            let mut r = strata_checks()?;
            r.extend(dvg_checks()?);
            r.extend(toric_checks());
            r.extend(enriques_checks());
            Ok(r)
        },
        hessian_checks,
    );
    let mut rep = left?;
    rep.extend(right);
    Ok(rep)
}
