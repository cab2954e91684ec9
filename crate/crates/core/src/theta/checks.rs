//! Series identities of the level-2 theta ring, checked coefficient by coefficient.

use super::chars::{tc, Scale};
use super::genus1::{e4, e6, eta24, h1, h2, theta1, theta_fourths};
use super::genus2::{generators, theta2, Generators, SiegelForm};
use super::restrict::{
    coefficient_matrix, coefficient_matrix1, restrict_diagonal, restrict_product, siegel_phi, ProductSeries,
};
use crate::exact::zmatrix::{rank_rational, solve_rational};
use crate::exact::rational::rat_json;
use crate::exact::{int, rat, ConeSeries, LaurentSeries1, Rational};
use crate::report::{CheckReport, CheckResult, Status};
use crate::Error;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

pub const IGUSA: &str = "Igusa duplication formulas for θ²(τ/2)";
pub const CHI_PRODUCT: &str = "χ equals the product of θ_00xx² differences with c = 1";
pub const JACOBI: &str = "Jacobi identity θ₀₀⁴ = θ₀₁⁴ + θ₁₀⁴";
pub const PRODUCT_LOCUS: &str = "restrictions of ϑ, φ₁, φ₂, χ to ℍ×ℍ";
pub const M6: &str = "χ is the unique form in M₆ vanishing on ℍ×ℍ";
pub const DOUBLING: &str = "genus-1 formulas for θ²(2τ)";
pub const H_IDENTITIES: &str = "h₁, h₂ identities with E₄(2τ), E₆(2τ), η(2τ)²⁴";
pub const PHI_OPERATOR: &str = "Siegel Φ-operator images h₁ = Φ(8ϑ), h₂ = Φ(ϑ²−φ)";
pub const INJECTIVITY: &str = "Φ(c₁ϑ⁴ + c₂ϑ²φ + c₃φ² + c₄ϑχ + c₅ψ) = 0 iff c₁ = c₂ = c₃ = 0";
pub const CONSTANTS: &str = "Θ constants c = 1024, c₄ = −1024, c₅ = 1024";
pub const DIAGONAL: &str = "Fourier coefficients of ϑ, φ, χ, ψ on the diagonal [[2τ,τ],[τ,2τ]]";

/// Cone order needed to see the paper's diagonal coefficients through `q²⁴`.
pub const DIAGONAL_MIN_ORDER: i64 = 96;

fn require(order: i64, min: i64) -> Result<(), Error> {
    if order < min {
        return Err(Error::OrderTooSmall { got: order, min });
    }
    Ok(())
}

fn identity(id: &str, citation: &str, statement: &str, order: i64, diff: Option<Value>, terms: usize) -> CheckResult {
    let ok = diff.is_none();
    CheckResult::new(
        id,
        citation,
        Status::from_bool(ok),
        json!({ "identity": statement, "holds_to_order": order }),
        json!({
            "identity": statement,
            "holds_to_order": if ok { json!(order) } else { Value::Null },
            "first_difference": diff,
            "nonzero_terms": terms,
        }),
    )
}

fn cone_identity(id: &str, citation: &str, statement: &str, lhs: &ConeSeries, rhs: &ConeSeries) -> CheckResult {
    let order = lhs.order().min(rhs.order());
    let diff = lhs.first_difference(rhs).map(|(p, m, r)| json!([p, m, r]));
    identity(id, citation, statement, order, diff, lhs.truncate(order).len())
}

fn series_identity(id: &str, citation: &str, statement: &str, lhs: &LaurentSeries1, rhs: &LaurentSeries1) -> CheckResult {
    let order = lhs.order().min(rhs.order());
    let diff = lhs.first_difference(rhs).map(|k| json!(k));
    identity(id, citation, statement, order, diff, lhs.truncate(order).nonzero_count())
}

fn product_identity(id: &str, citation: &str, statement: &str, lhs: &ProductSeries, rhs: &ProductSeries) -> CheckResult {
    let order = lhs.order().min(rhs.order());
    let diff = lhs.first_difference(rhs).map(|(p, r)| json!([p, r]));
    identity(id, citation, statement, order, diff, lhs.terms().count())
}

fn zero_check(id: &str, citation: &str, statement: &str, order: i64, first: Option<Value>) -> CheckResult {
    identity(id, citation, statement, order, first, 0)
}

/// The ten duplication identities, `θ_c²(τ/2)` against quadratic expressions at `τ`.
pub fn verify_igusa_duplication(order: i64) -> Result<CheckReport, Error> {
    require(order, 16)?;
    let th = |s: &str| theta2(tc(s), Scale::One, order);
    let t = [th("0000"), th("1000"), th("0100"), th("1100")];
    let sq: Vec<ConeSeries> = t.iter().map(|x| x.pow(2)).collect();
    let lin = |signs: [i64; 4]| {
        sq.iter()
            .zip(signs)
            .fold(ConeSeries::zero(order), |acc, (s, e)| acc.add(&s.scale(&int(e))))
    };
    let cross = |i: usize, j: usize, k: usize, l: usize, sign: i64| {
        t[i].mul(&t[j]).add(&t[k].mul(&t[l]).scale(&int(sign))).scale(&int(2))
    };
    let table: Vec<(&str, &str, ConeSeries)> = vec![
        ("0000", "θ_0000² + θ_1000² + θ_0100² + θ_1100²", lin([1, 1, 1, 1])),
        ("0001", "θ_0000² + θ_1000² − θ_0100² − θ_1100²", lin([1, 1, -1, -1])),
        ("0010", "θ_0000² − θ_1000² + θ_0100² − θ_1100²", lin([1, -1, 1, -1])),
        ("0011", "θ_0000² − θ_1000² − θ_0100² + θ_1100²", lin([1, -1, -1, 1])),
        ("0100", "2(θ_0000θ_0100 + θ_1000θ_1100)", cross(0, 2, 1, 3, 1)),
        ("0110", "2(θ_0000θ_0100 − θ_1000θ_1100)", cross(0, 2, 1, 3, -1)),
        ("1000", "2(θ_0000θ_1000 + θ_0100θ_1100)", cross(0, 1, 2, 3, 1)),
        ("1001", "2(θ_0000θ_1000 − θ_0100θ_1100)", cross(0, 1, 2, 3, -1)),
        ("1100", "2(θ_0000θ_1100 + θ_0100θ_1000)", cross(0, 3, 2, 1, 1)),
        ("1111", "2(θ_0000θ_1100 − θ_0100θ_1000)", cross(0, 3, 2, 1, -1)),
    ];
    let checks: Vec<CheckResult> = table
        .par_iter()
        .map(|(c, stmt, rhs)| {
            let lhs = theta2(tc(c), Scale::Half, order).pow(2);
            cone_identity(&format!("theta.igusa.{c}"), IGUSA, &format!("θ_{c}²(τ/2) = {stmt}"), &lhs, rhs)
        })
        .collect();
    Ok(checks.into_iter().collect())
}

fn chi_product(order: i64) -> ConeSeries {
    let sq = |s: &str| theta2(tc(s), Scale::One, order).pow(2);
    let (a, b, c, d) = (sq("0000"), sq("0001"), sq("0010"), sq("0011"));
    let f1 = a.mul(&b).sub(&c.mul(&d));
    let f2 = a.mul(&c).sub(&b.mul(&d));
    let f3 = a.mul(&d).sub(&b.mul(&c));
    f1.mul(&f2).mul(&f3)
}

pub fn verify_chi_product(order: i64) -> Result<CheckReport, Error> {
    require(order, 24)?;
    chi_product_with(&generators(order))
}

pub fn chi_product_with(g: &Generators) -> Result<CheckReport, Error> {
    let order = g.chi.order();
    require(order, 24)?;
    let p = chi_product(order);
    let chi = &g.chi.series;
    let mut rep = CheckReport::new();
    rep.push(CheckResult::compare(
        "theta.chi_product.constant_terms",
        CHI_PRODUCT,
        json!([0, 0]),
        json!([rat_json(&p.coeff((0, 0, 0))), rat_json(&chi.coeff((0, 0, 0)))]),
    ));
    let lead = chi.terms().next().map(|(k, _)| *k).expect("χ is nonzero");
    let c = p.coeff(lead) / chi.coeff(lead);
    let scaled = chi.scale(&c);
    let ident = cone_identity(
        "theta.chi_product.identity",
        CHI_PRODUCT,
        &format!(
            "(θ²₀₀₀₀θ²₀₀₀₁ − θ²₀₀₁₀θ²₀₀₁₁)(θ²₀₀₀₀θ²₀₀₁₀ − θ²₀₀₀₁θ²₀₀₁₁)(θ²₀₀₀₀θ²₀₀₁₁ − θ²₀₀₀₁θ²₀₀₁₀) = {c}·χ"
        ),
        &p,
        &scaled,
    );
    // c is read off the leading coefficient; a value other than 1 with the
    // identity intact is a normalization slip in the printed claim.
    let status = if c == int(1) {
        ident.status
    } else if ident.passed() {
        Status::Finding
    } else {
        Status::Fail
    };
    let mut cc = CheckResult::new("theta.chi_product.constant", CHI_PRODUCT, status, json!(1), rat_json(&c))
        .with_note(format!("ratio of coefficients at {lead:?}"));
    if status == Status::Finding {
        cc = cc.with_note(format!(
            "the product equals {c}·χ, i.e. the square of the six odd-a theta constants without the 1/4096"
        ));
    }
    rep.push(cc);
    rep.push(ident);
    let rp = restrict_product(&SiegelForm::new(p, 6));
    rep.push(zero_check(
        "theta.chi_product.vanishes_on_product_locus",
        CHI_PRODUCT,
        "product restricted to τ₂ = 0 is 0",
        rp.order(),
        rp.terms().next().map(|((p, r), _)| json!([p, r])),
    ));
    Ok(rep)
}

/// Jacobi's quartic identity and the three doubling formulas.
pub fn verify_genus_one(order: i64) -> CheckReport {
    let t = |a, b, s| theta1(a, b, s, order);
    let mut rep = CheckReport::new();
    rep.push(series_identity(
        "theta.genus1.jacobi",
        JACOBI,
        "θ₀₀⁴ = θ₀₁⁴ + θ₁₀⁴",
        &t(0, 0, Scale::One).pow(4),
        &t(0, 1, Scale::One).pow(4).add(&t(1, 0, Scale::One).pow(4)),
    ));
    let (a2, b2) = (t(0, 0, Scale::One).pow(2), t(0, 1, Scale::One).pow(2));
    let half = rat(1, 2);
    rep.push(series_identity(
        "theta.genus1.doubling_00",
        DOUBLING,
        "θ₀₀²(2τ) = (θ₀₀² + θ₀₁²)/2",
        &t(0, 0, Scale::Two).pow(2),
        &a2.add(&b2).scale(&half),
    ));
    rep.push(series_identity(
        "theta.genus1.doubling_01",
        DOUBLING,
        "θ₀₁²(2τ) = θ₀₀θ₀₁",
        &t(0, 1, Scale::Two).pow(2),
        &t(0, 0, Scale::One).mul(&t(0, 1, Scale::One)),
    ));
    rep.push(series_identity(
        "theta.genus1.doubling_10",
        DOUBLING,
        "θ₁₀²(2τ) = (θ₀₀² − θ₀₁²)/2",
        &t(1, 0, Scale::Two).pow(2),
        &a2.sub(&b2).scale(&half),
    ));
    rep
}

/// `ϑ, φ₁, φ₂, χ` on `τ₂ = 0` against products of genus-1 series.
pub fn product_locus_with(g: &Generators) -> CheckReport {
    let order = g.vartheta.order();
    let (a, b) = theta_fourths(order);
    let s = a.add(&b);
    let p = a.mul(&b);
    let d2 = a.sub(&b).pow(2);
    let mut rep = CheckReport::new();
    let rchi = restrict_product(&g.chi);
    rep.push(zero_check(
        "theta.product_locus.chi",
        PRODUCT_LOCUS,
        "χ|ℍ×ℍ = 0",
        rchi.order(),
        rchi.terms().next().map(|((p, r), _)| json!([p, r])),
    ));
    rep.push(product_identity(
        "theta.product_locus.vartheta",
        PRODUCT_LOCUS,
        "ϑ = (θ₀₀⁴+θ₀₁⁴)(τ₁)(θ₀₀⁴+θ₀₁⁴)(τ₃)/4",
        &restrict_product(&g.vartheta),
        &ProductSeries::outer(&s, &s).scale(&rat(1, 4)),
    ));
    rep.push(product_identity(
        "theta.product_locus.phi1",
        PRODUCT_LOCUS,
        "φ₁ = θ₀₀⁴θ₀₁⁴(τ₁)·θ₀₀⁴θ₀₁⁴(τ₃)",
        &restrict_product(&g.phi1),
        &ProductSeries::outer(&p, &p),
    ));
    rep.push(product_identity(
        "theta.product_locus.phi2",
        PRODUCT_LOCUS,
        "φ₂ = (θ₀₀⁴−θ₀₁⁴)²(τ₁)(θ₀₀⁴−θ₀₁⁴)²(τ₃)/16384",
        &restrict_product(&g.phi2),
        &ProductSeries::outer(&d2, &d2).scale(&rat(1, 16384)),
    ));
    rep
}

pub fn verify_m6_uniqueness(order: i64) -> Result<CheckReport, Error> {
    require(order, 24)?;
    m6_uniqueness_with(&generators(order))
}

pub fn m6_uniqueness_with(g: &Generators) -> Result<CheckReport, Error> {
    require(g.vartheta.order(), 24)?;
    let v = &g.vartheta;
    let (v3, (vp1, vp2)) = rayon::join(|| v.pow(3), || rayon::join(|| v.mul(&g.phi1), || v.mul(&g.phi2)));
    let rows: Vec<ProductSeries> = [&v3, &vp1, &vp2].iter().map(|f| restrict_product(f)).collect();
    let rchi = restrict_product(&g.chi);
    let refs: Vec<&ProductSeries> = rows.iter().collect();
    let r3 = rank_rational(&coefficient_matrix(&refs));
    let mut with_chi = refs.clone();
    with_chi.push(&rchi);
    let r4 = rank_rational(&coefficient_matrix(&with_chi));
    let mut rep = CheckReport::new();
    rep.push(CheckResult::compare(
        "theta.m6.rank",
        M6,
        json!(3),
        json!(r3),
    ).with_note("rank of ϑ³, ϑφ₁, ϑφ₂ restricted to ℍ×ℍ"));
    rep.push(CheckResult::compare(
        "theta.m6.rank_with_chi",
        M6,
        json!(3),
        json!(r4),
    ).with_note("adding χ|ℍ×ℍ = 0 leaves the rank unchanged"));
    Ok(rep)
}

/// Four identities between `h₁, h₂` and level-one forms at `2τ`.
///
/// The `E₆` identity holds with `+512`; the printed `−512` is reported as a finding.
pub fn verify_h_identities(order: i64) -> Result<CheckReport, Error> {
    require(order, 64)?;
    let (h1, h2) = (h1(order).series, h2(order).series);
    let h1sq = h1.pow(2);
    let c = |n: i64| int(n);
    let mut rep = CheckReport::new();
    rep.push(series_identity(
        "theta.h.e4",
        H_IDENTITIES,
        "h₁² − 48h₂ = 64E₄(2τ)",
        &h1sq.sub(&h2.scale(&c(48))),
        &e4(Scale::Two, order).scale(&c(64)),
    ));
    let lhs6 = h1.mul(&h1sq.sub(&h2.scale(&c(72))));
    let e6_2 = e6(Scale::Two, order);
    let literal = series_identity(
        "theta.h.e6_printed",
        H_IDENTITIES,
        "h₁(h₁² − 72h₂) = −512E₆(2τ)",
        &lhs6,
        &e6_2.scale(&c(-512)),
    );
    let corrected = series_identity(
        "theta.h.e6",
        H_IDENTITIES,
        "h₁(h₁² − 72h₂) = 512E₆(2τ)",
        &lhs6,
        &e6_2.scale(&c(512)),
    );
    let mut literal = literal;
    if literal.status == Status::Fail && corrected.status == Status::Pass {
        literal.status = Status::Finding;
        literal = literal.with_note(format!(
            "constant terms are {} and −512; the identity holds with +512",
            lhs6.coeff(0)
        ));
    }
    rep.push(literal);
    rep.push(corrected);
    let disc = h1sq.sub(&h2.scale(&c(64)));
    rep.push(series_identity(
        "theta.h.eta",
        H_IDENTITIES,
        "h₂²(h₁² − 64h₂) = 2¹⁸η(2τ)²⁴",
        &h2.pow(2).mul(&disc),
        &eta24(Scale::Two, order).scale(&c(1 << 18)),
    ));
    rep.push(series_identity(
        "theta.h.hauptmodul",
        H_IDENTITIES,
        "h₂·η(τ)²⁴ = (h₁² − 64h₂)·η(2τ)²⁴",
        &h2.mul(&eta24(Scale::One, order)),
        &disc.mul(&eta24(Scale::Two, order)),
    ));
    Ok(rep)
}

/// `Φ` images: `h₁, h₂`, vanishing of `Φ(χ), Φ(ϑχ), Φ(ψ)`, and independence of
/// `Φ(ϑ⁴), Φ(ϑ²φ), Φ(φ²)`.
pub fn verify_phi_injectivity(order: i64) -> Result<CheckReport, Error> {
    require(order, 48)?;
    phi_injectivity_with(&generators(order))
}

pub fn phi_injectivity_with(g: &Generators) -> Result<CheckReport, Error> {
    let order = g.vartheta.order();
    require(order, 48)?;
    let v = &g.vartheta;
    let v2 = v.pow(2);
    let (v4, (v2p, (p2, vchi))) = rayon::join(
        || v2.pow(2),
        || rayon::join(|| v2.mul(&g.phi), || rayon::join(|| g.phi.pow(2), || v.mul(&g.chi))),
    );
    let mut rep = CheckReport::new();
    let (a, b) = theta_fourths(order);
    rep.push(series_identity(
        "theta.phi.h1",
        PHI_OPERATOR,
        "Φ(8ϑ) = 4(θ₀₀⁴ + θ₀₁⁴)",
        &siegel_phi(&v.scale(&int(8))).series,
        &h1(order).series,
    ));
    let f4 = v2.sub(&g.phi)?;
    rep.push(series_identity(
        "theta.phi.h2",
        PHI_OPERATOR,
        "Φ(ϑ² − φ) = (θ₀₀⁴ − θ₀₁⁴)²/4",
        &siegel_phi(&f4).series,
        &h2(order).series,
    ));
    rep.push(series_identity(
        "theta.phi.phi",
        INJECTIVITY,
        "Φ(φ) = θ₀₀⁴θ₀₁⁴",
        &siegel_phi(&g.phi).series,
        &a.mul(&b),
    ));
    for (id, stmt, f) in [
        ("theta.phi.chi", "Φ(χ) = 0", &g.chi),
        ("theta.phi.vartheta_chi", "Φ(ϑχ) = 0", &vchi),
        ("theta.phi.psi", "Φ(ψ) = 0", &g.psi),
    ] {
        let s = siegel_phi(f).series;
        rep.push(zero_check(id, INJECTIVITY, stmt, s.order(), s.valuation().map(|k| json!(k))));
    }
    let imgs: Vec<LaurentSeries1> = [&v4, &v2p, &p2].iter().map(|f| siegel_phi(f).series).collect();
    let refs: Vec<&LaurentSeries1> = imgs.iter().collect();
    let rank = rank_rational(&coefficient_matrix1(&refs));
    rep.push(
        CheckResult::compare("theta.phi.rank", INJECTIVITY, json!(3), json!(rank))
            .with_note("Φ(ϑ⁴), Φ(ϑ²φ), Φ(φ²) as one-variable series"),
    );
    rep.push(CheckResult::compare(
        "theta.phi.vartheta4_constant",
        INJECTIVITY,
        json!(1),
        rat_json(&imgs[0].coeff(0)),
    ));
    Ok(rep)
}

/// Affine map `k ↦ scale·k + shift` from printed exponents to eighths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiagonalAlignment {
    pub scale: i64,
    pub shift: i64,
}

impl DiagonalAlignment {
    pub fn apply(&self, k: i64) -> i64 {
        self.scale * k + self.shift
    }

    pub fn to_json(&self) -> Value {
        json!({ "scale": self.scale, "shift": self.shift })
    }
}

/// Match the two lowest exponents of a computed series against a printed row.
pub fn align_diagonal(computed: &LaurentSeries1, printed: &[(i64, i64)]) -> Option<DiagonalAlignment> {
    let c = computed.support();
    let (c0, c1) = (*c.first()?, *c.get(1)?);
    let (p0, p1) = (printed.first()?.0, printed.get(1)?.0);
    if p1 == p0 || (c1 - c0) % (p1 - p0) != 0 {
        return None;
    }
    let scale = (c1 - c0) / (p1 - p0);
    Some(DiagonalAlignment { scale, shift: c0 - scale * p0 })
}

/// Printed diagonal rows, exponent of `q` and coefficient.
pub const PRINTED_VARTHETA: &[(i64, i64)] = &[(0, 1), (8, 72), (12, 192), (16, 504), (20, 576), (24, 2280)];
pub const PRINTED_PHI: &[(i64, i64)] = &[(8, 1), (12, -4), (16, -2), (20, 20), (24, 5)];
pub const PRINTED_CHI: &[(i64, i64)] = &[(12, 1), (16, -6), (20, 3), (24, 40)];
pub const PRINTED_PSI: &[(i64, i64)] = &[(12, 1), (16, 6), (20, -21), (24, -56)];
const PRINTED_TOP: i64 = 24;

/// Does `s` agree with the printed row at every exponent up to the top one,
/// counting unprinted exponents as zero?
fn row_matches(s: &LaurentSeries1, row: &[(i64, i64)], al: DiagonalAlignment) -> (bool, Value) {
    let top = al.apply(PRINTED_TOP);
    let table: Vec<Value> = (0..=PRINTED_TOP)
        .filter_map(|k| {
            let c = s.coeff(al.apply(k));
            (!c.is_zero()).then(|| json!([k, rat_json(&c)]))
        })
        .collect();
    let mut ok = s.order() >= top;
    for e in 0..=top {
        let want = if (e - al.shift) % al.scale == 0 {
            let k = (e - al.shift) / al.scale;
            row.iter().find(|(x, _)| *x == k).map_or(0, |(_, c)| *c)
        } else {
            0
        };
        if s.coeff(e) != int(want) {
            ok = false;
        }
    }
    (ok, Value::Array(table))
}

fn printed_json(row: &[(i64, i64)]) -> Value {
    Value::Array(row.iter().map(|(k, c)| json!([k, c])).collect())
}

/// Diagonal rows for `ϑ, φ, χ, ψ`, needing generators at cone order ≥ 96.
pub fn diagonal_with(g: &Generators) -> Result<CheckReport, Error> {
    require(g.vartheta.order(), DIAGONAL_MIN_ORDER)?;
    let v = restrict_diagonal(&g.vartheta);
    let phi = restrict_diagonal(&g.phi);
    let chi = restrict_diagonal(&g.chi);
    let psi = restrict_diagonal(&g.psi);
    let mut rep = CheckReport::new();
    let al = align_diagonal(&v, PRINTED_VARTHETA).expect("ϑ has two support points");
    rep.push(
        CheckResult::new(
            "theta.diagonal.alignment",
            DIAGONAL,
            Status::Pass,
            json!({ "derived_from": "lowest two exponents of ϑ" }),
            al.to_json(),
        )
        .with_note("printed q^k sits at exponent scale·k + shift in units of πiτ/8"),
    );
    for (name, s, row) in [("vartheta", &v, PRINTED_VARTHETA), ("chi", &chi, PRINTED_CHI), ("psi", &psi, PRINTED_PSI)] {
        let (ok, table) = row_matches(s, row, al);
        rep.push(CheckResult::new(
            format!("theta.diagonal.{name}"),
            DIAGONAL,
            Status::from_bool(ok),
            printed_json(row),
            table,
        ));
    }
    // The printed φ row is (ϑ² − φ)/192, not φ itself.
    let (ok_phi, table_phi) = row_matches(&phi, PRINTED_PHI, al);
    let alt = v.pow(2).sub(&phi).scale(&rat(1, 192));
    let (ok_alt, table_alt) = row_matches(&alt, PRINTED_PHI, al);
    let status = match (ok_phi, ok_alt) {
        (true, _) => Status::Pass,
        (false, true) => Status::Finding,
        _ => Status::Fail,
    };
    let mut c = CheckResult::new("theta.diagonal.phi", DIAGONAL, status, printed_json(PRINTED_PHI), table_phi);
    if status == Status::Finding {
        c = c.with_note("printed row equals (ϑ² − φ)/192 on the diagonal, not φ = φ₁ + 1024φ₂");
    }
    rep.push(c);
    rep.push(CheckResult::new(
        "theta.diagonal.phi_printed_row_source",
        DIAGONAL,
        Status::from_bool(ok_alt),
        printed_json(PRINTED_PHI),
        table_alt,
    ).with_note("(ϑ² − φ)/192 restricted to the diagonal"));
    Ok(rep)
}

/// `(c, c₄, c₅)` with `F₂ = 8ϑ, F₄ = ϑ² − φ, F₆ = cχ, F₈ = c₄ϑχ + c₅ψ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaConstants {
    pub c: Rational,
    pub c4: Rational,
    pub c5: Rational,
    pub c_squared: Rational,
    pub equations: usize,
}

impl ThetaConstants {
    pub fn to_json(&self) -> Value {
        json!({
            "c": rat_json(&self.c),
            "c4": rat_json(&self.c4),
            "c5": rat_json(&self.c5),
        })
    }
}

struct DiagonalForms {
    f4: LaurentSeries1,
    vchi: LaurentSeries1,
    psi: LaurentSeries1,
    chi: LaurentSeries1,
}

fn diagonal_forms(g: &Generators) -> DiagonalForms {
    let v = restrict_diagonal(&g.vartheta);
    let chi = restrict_diagonal(&g.chi);
    DiagonalForms {
        f4: v.pow(2).sub(&restrict_diagonal(&g.phi)),
        vchi: v.mul(&chi),
        psi: restrict_diagonal(&g.psi),
        chi,
    }
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

pub fn determine_theta_constants(order: i64) -> Result<ThetaConstants, Error> {
    require(order, DIAGONAL_MIN_ORDER)?;
    determine_theta_constants_with(&generators(order))
}

/// Solve `F₄² = 3F₈` for `(c₄, c₅)`, then `9F₆² = 4F₄F₈` for `c²`.
///
/// The sign of `c` is not fixed by these conditions; `c > 0` makes the
/// diagonal parameter `u` start as `+q⁴` at the cusp.
pub fn determine_theta_constants_with(g: &Generators) -> Result<ThetaConstants, Error> {
    require(g.vartheta.order(), DIAGONAL_MIN_ORDER)?;
    let d = diagonal_forms(g);
    let lhs = d.f4.pow(2);
    let top = lhs.order().min(d.vchi.order()).min(d.psi.order());
    let (mut rows, mut rhs) = (Vec::new(), Vec::new());
    for e in 0..=top {
        rows.push(vec![d.vchi.coeff(e) * int(3), d.psi.coeff(e) * int(3)]);
        rhs.push(lhs.coeff(e));
    }
    let sol = solve_rational(&rows, &rhs)?;
    let (c4, c5) = (sol[0].clone(), sol[1].clone());
    let f8 = d.vchi.scale(&c4).add(&d.psi.scale(&c5));
    let right = d.f4.mul(&f8).scale(&int(4));
    let chi2 = d.chi.pow(2).scale(&int(9));
    let top2 = right.order().min(chi2.order());
    let rows2: Vec<Vec<Rational>> = (0..=top2).map(|e| vec![chi2.coeff(e)]).collect();
    let rhs2: Vec<Rational> = (0..=top2).map(|e| right.coeff(e)).collect();
    let c_squared = solve_rational(&rows2, &rhs2)?.remove(0);
    let c = rational_sqrt(&c_squared).ok_or_else(|| Error::NotASquare(c_squared.to_string()))?;
    Ok(ThetaConstants { c, c4, c5, c_squared, equations: rows.len() + rows2.len() })
}

pub fn verify_theta_constants(g: &Generators, k: &ThetaConstants) -> CheckReport {
    let d = diagonal_forms(g);
    let f6 = d.chi.scale(&k.c);
    let f8 = d.vchi.scale(&k.c4).add(&d.psi.scale(&k.c5));
    let mut rep = CheckReport::new();
    rep.push(
        CheckResult::compare(
            "theta.constants.values",
            CONSTANTS,
            json!({ "c": 1024, "c4": -1024, "c5": 1024 }),
            k.to_json(),
        )
        .with_note(format!(
            "c² = {} from {} diagonal equations; sign fixed by c > 0",
            k.c_squared, k.equations
        )),
    );
    rep.push(series_identity(
        "theta.constants.f4_squared",
        CONSTANTS,
        "F₄² = 3F₈ on the diagonal",
        &d.f4.pow(2),
        &f8.scale(&int(3)),
    ));
    rep.push(series_identity(
        "theta.constants.f6_squared",
        CONSTANTS,
        "9F₆² = 4F₄F₈ on the diagonal",
        &f6.pow(2).scale(&int(9)),
        &d.f4.mul(&f8).scale(&int(4)),
    ));
    rep
}

/// Restriction to the diagonal is multiplicative.
pub fn diagonal_homomorphism_with(g: &Generators, order: i64) -> CheckResult {
    let v = SiegelForm::new(g.vartheta.series.truncate(order), 2);
    let x = SiegelForm::new(g.chi.series.truncate(order), 6);
    series_identity(
        "theta.diagonal.multiplicative",
        DIAGONAL,
        "restriction of ϑχ equals product of restrictions",
        &restrict_diagonal(&v.mul(&x)),
        &restrict_diagonal(&v).mul(&restrict_diagonal(&x)),
    )
}

/// Generator sanity: weights, constant terms, integrality after the divisors.
pub fn generator_checks(g: &Generators) -> CheckReport {
    let mut rep = CheckReport::new();
    let weights: Vec<i64> = g.named().iter().map(|(_, f)| f.weight).collect();
    rep.push(CheckResult::compare(
        "theta.generators.weights",
        "ϑ, φ₁, φ₂, χ of weights 2, 4, 4, 6; φ, ψ of weights 4, 8",
        json!([2, 4, 4, 6, 4, 8]),
        json!(weights),
    ));
    let constants: Vec<Value> = g.named().iter().map(|(_, f)| rat_json(&f.series.coeff((0, 0, 0)))).collect();
    rep.push(CheckResult::compare(
        "theta.generators.constant_terms",
        "ϑ, φ₁, φ₂, χ as polynomials in theta constants",
        json!([1, 1, 0, 0, 1, 0]),
        json!(constants),
    ));
    let integral: Vec<bool> = g.named().iter().map(|(_, f)| f.is_integral()).collect();
    rep.push(CheckResult::compare(
        "theta.generators.integral",
        "divisors 4, 16384, 4096 in ϑ, φ₂, χ",
        json!(vec![true; 6]),
        json!(integral),
    ));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn igusa_small_order() {
        let r = verify_igusa_duplication(16).unwrap();
        assert_eq!(r.len(), 10);
        assert!(r.all_pass(), "{:?}", r.failures());
    }

    #[test]
    fn order_guards() {
        assert!(matches!(verify_igusa_duplication(8), Err(Error::OrderTooSmall { .. })));
        assert!(determine_theta_constants(64).is_err());
    }

    #[test]
    fn alignment_from_two_points() {
        let s = LaurentSeries1::from_terms(8, 96, [(0, int(1)), (32, int(72))]);
        let al = align_diagonal(&s, PRINTED_VARTHETA).unwrap();
        assert_eq!(al, DiagonalAlignment { scale: 4, shift: 0 });
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-1, 1)), None);
    }
}
