//! The theta suite: ring identities at the requested order, diagonal data at a
//! higher one, and floating checks at seeded points.

use super::checks::*;
use super::genus2::{generators, Generators};
use super::numeric::{distance_to_8_1, eval_series1, h_pair_numeric, vartheta_numeric, C};
use super::restrict::restrict_diagonal;
use crate::report::{CheckReport, CheckResult, Status};
use crate::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

/// Smallest order accepted for the theta suite.
pub const THETA_MIN_ORDER: i64 = 16;
/// Order at which the diagonal rows, constants and series evaluation run.
pub const DIAGONAL_ORDER: i64 = 128;

/// Order for the `h` identities: `E₄(2τ)` has its tenth nonzero coefficient at exponent 288.
pub const H_ORDER: i64 = 320;

pub const CUSP: &str = "lim_{t→∞} [h₁(−1/2it) : h₂(−1/2it)] = [8:1]";
pub const NUMERIC_TOL: f64 = 1e-8;

fn fmt(x: f64) -> String {
    format!("{x:.3e}")
}

/// Series evaluation of `ϑ` on the diagonal against direct summation, at
/// `samples` seeded points `t = x + iy` with `y ∈ [0.8, 1.5]`.
pub fn vartheta_diagonal_numeric(g: &Generators, seed: u64, samples: usize) -> Result<CheckResult, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(11);
    let series = restrict_diagonal(&g.vartheta);
    let mut worst = 0.0f64;
    let mut points = Vec::new();
    for _ in 0..samples {
        let t = C::new(rng.gen_range(-0.5..0.5), rng.gen_range(0.8..1.5));
        let direct = vartheta_numeric([t * 2.0, t, t * 2.0], 12)?;
        let err = (eval_series1(&series, t) - direct).norm();
        worst = worst.max(err);
        points.push(json!([fmt(t.re), fmt(t.im), fmt(err)]));
    }
    Ok(CheckResult::new(
        "theta.numeric.vartheta_diagonal",
        DIAGONAL,
        Status::from_bool(worst < NUMERIC_TOL),
        json!({ "max_error_below": fmt(NUMERIC_TOL) }),
        json!({ "max_error": fmt(worst), "order": series.order(), "points": points }),
    ))
}

/// `h₁(6i) → 8` and the cusp `[h₁ : h₂](−1/(2it)) → [8 : 1]` at `t = 3`.
pub fn cusp_numeric() -> Result<CheckReport, Error> {
    let mut rep = CheckReport::new();
    let (h1, _) = h_pair_numeric(C::new(0.0, 6.0), 20)?;
    let err = (h1 - 8.0).norm();
    rep.push(CheckResult::new(
        "theta.numeric.h1_at_6i",
        CUSP,
        Status::from_bool(err < 1e-6),
        json!({ "value": "8", "tolerance": fmt(1e-6) }),
        json!({ "error": fmt(err) }),
    ));
    let t = 3.0;
    // −1/(2it) = i/(2t)
    let (h1, h2) = h_pair_numeric(C::new(0.0, 1.0 / (2.0 * t)), 80)?;
    let d = distance_to_8_1(h1, h2);
    rep.push(CheckResult::new(
        "theta.numeric.cusp",
        CUSP,
        Status::from_bool(d < 1e-4),
        json!({ "point": "[8:1]", "t": 3, "tolerance": fmt(1e-4) }),
        json!({ "distance": fmt(d), "witness": [fmt((h1 / 8.0).re), fmt((h1 / 8.0).im)] }),
    ));
    Ok(rep)
}

/// Every theta check. Each routine runs at `max(order, its minimum)`.
pub fn theta_suite(order: i64, seed: u64, samples: usize) -> Result<CheckReport, Error> {
    if order < THETA_MIN_ORDER {
        return Err(Error::OrderTooSmall { got: order, min: THETA_MIN_ORDER });
    }
    let ring_order = order.max(48);
    let diag_order = order.max(DIAGONAL_ORDER);
    let (ring, diag) = rayon::join(|| generators(ring_order), || generators(diag_order));
    let ((a, b), (c, d)) = rayon::join(
        || {
            rayon::join(
                || -> Result<CheckReport, Error> {
                    let mut r = verify_igusa_duplication(order)?;
                    r.extend(chi_product_with(&ring)?);
                    r.extend(product_locus_with(&ring));
                    r.extend(m6_uniqueness_with(&ring)?);
                    r.extend(generator_checks(&ring));
                    r.push(diagonal_homomorphism_with(&ring, ring_order));
                    Ok(r)
                },
                || -> Result<CheckReport, Error> {
                    let mut r = verify_genus_one(order);
                    r.extend(verify_h_identities(order.max(H_ORDER))?);
                    r.extend(phi_injectivity_with(&ring)?);
                    Ok(r)
                },
            )
        },
        || {
            rayon::join(
                || -> Result<CheckReport, Error> {
                    let mut r = diagonal_with(&diag)?;
                    let k = determine_theta_constants_with(&diag)?;
                    r.extend(verify_theta_constants(&diag, &k));
                    Ok(r)
                },
                || -> Result<CheckReport, Error> {
                    let mut r = cusp_numeric()?;
                    r.push(vartheta_diagonal_numeric(&diag, seed, samples.clamp(1, 20))?);
                    Ok(r)
                },
            )
        },
    );
    let mut rep = a?;
    rep.extend(b?);
    rep.extend(c?);
    rep.extend(d?);
    Ok(rep)
}
