//! Suite selection, run configuration, and the report handed to the CLI.

use crate::lattice::checks::{lattice_suite, LatticeConfig};
use crate::periods::checks::periods_suite;
use crate::periods::hypergeom::{f4_series, fc_series};
use crate::periods::oracle::{period_series_3d, ConstantTermOracle};
use crate::report::{CheckResult, Status};
use crate::surfaces::checks::invariants_suite;
use crate::theta::genus1::{h1, h2};
use crate::theta::genus2::generators;
use crate::theta::restrict::restrict_diagonal;
use crate::theta::suite::{theta_suite, THETA_MIN_ORDER};
use crate::Error;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Truncation degree of the periods suite; independent of the theta order.
pub const PERIODS_ORDER: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Theta,
    Lattice,
    Periods,
    Invariants,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Theta, Suite::Lattice, Suite::Periods, Suite::Invariants];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theta => "theta",
            Suite::Lattice => "lattice",
            Suite::Periods => "periods",
            Suite::Invariants => "invariants",
        }
    }

    /// `all` expands to every suite.
    pub fn parse(s: &str) -> Option<Vec<Suite>> {
        match s {
            "all" => Some(Self::ALL.to_vec()),
            _ => Self::ALL.iter().find(|x| x.name() == s).map(|x| vec![*x]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub suites: Vec<Suite>,
    pub order: i64,
    pub seed: u64,
    pub samples: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { suites: Suite::ALL.to_vec(), order: 64, seed: 7, samples: 100 }
    }
}

impl RunConfig {
    /// Sorted, without duplicates.
    pub fn selected(&self) -> Vec<Suite> {
        self.suites.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.selected().contains(&Suite::Theta) && self.order < THETA_MIN_ORDER {
            return Err(Error::OrderTooSmall { got: self.order, min: THETA_MIN_ORDER });
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suites": self.selected().iter().map(|s| s.name()).collect::<Vec<_>>(),
            "order": self.order,
            "periods_order": PERIODS_ORDER,
            "seed": self.seed,
            "samples": self.samples,
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub finding: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub config: Value,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn from_results(config: Value, mut results: Vec<CheckResult>) -> Self {
        results.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Summary::default();
        for r in &results {
            match r.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Finding => summary.finding += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        Report { config, results, summary }
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.id == id)
    }

    /// `0` unless some check failed; findings do not fail a run.
    pub fn exit_code(&self) -> i32 {
        (self.summary.fail > 0) as i32
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let width = self.results.iter().map(|r| r.id.chars().count()).max().unwrap_or(2);
        let mut out = String::new();
        for r in &self.results {
            let _ = writeln!(out, "{:<8} {:<width$}  {}", r.status.label(), r.id, r.citation);
            if let Some(n) = &r.note {
                if r.status != Status::Pass {
                    let _ = writeln!(out, "{:<8} {:<width$}    note: {}", "", "", n);
                }
            }
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "\n{} checks: {} pass, {} fail, {} finding, {} skipped",
            self.results.len(),
            s.pass,
            s.fail,
            s.finding,
            s.skipped
        );
        out
    }
}

/// Run every selected suite; results are ordered by id whatever the completion order.
pub fn run(cfg: &RunConfig) -> Result<Report, Error> {
    cfg.validate()?;
    let parts: Vec<Result<Vec<CheckResult>, Error>> = cfg
        .selected()
        .into_par_iter()
        .map(|s| {
            let rep = match s {
                Suite::Theta => theta_suite(cfg.order, cfg.seed, cfg.samples)?,
                Suite::Lattice => lattice_suite(LatticeConfig { seed: cfg.seed, samples: cfg.samples }),
                Suite::Periods => periods_suite(PERIODS_ORDER)?,
                Suite::Invariants => invariants_suite()?,
            };
            Ok(rep.checks)
        })
        .collect();
    let mut results = Vec::new();
    for p in parts {
        results.extend(p?);
    }
    let report = Report::from_results(cfg.to_json(), results);
    debug_assert!(report.results.windows(2).all(|w| w[0].id != w[1].id), "check ids must be unique");
    Ok(report)
}

/// Series behind the selected suites, in the exact JSON dump form.
pub fn series_dump(cfg: &RunConfig) -> Result<Value, Error> {
    cfg.validate()?;
    let mut out = serde_json::Map::new();
    for s in cfg.selected() {
        match s {
            Suite::Theta => {
                let g = generators(cfg.order);
                let mut m = serde_json::Map::new();
                for (name, f) in g.named() {
                    m.insert(format!("{name}_diagonal"), restrict_diagonal(f).to_json());
                }
                m.insert("h1".into(), h1(cfg.order).series.to_json());
                m.insert("h2".into(), h2(cfg.order).series.to_json());
                out.insert("theta".into(), Value::Object(m));
            }
            Suite::Periods => {
                let mut oracle = ConstantTermOracle::new();
                out.insert(
                    "periods".into(),
                    json!({
                        "period": period_series_3d(&mut oracle, PERIODS_ORDER).to_json(),
                        "fc": fc_series(PERIODS_ORDER).to_json(),
                        "f4": f4_series(PERIODS_ORDER).to_json(),
                    }),
                );
            }
            Suite::Lattice | Suite::Invariants => {}
        }
    }
    Ok(Value::Object(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_names() {
        assert_eq!(Suite::parse("all").unwrap().len(), 4);
        assert_eq!(Suite::parse("periods"), Some(vec![Suite::Periods]));
        assert_eq!(Suite::parse("nope"), None);
    }

    #[test]
    fn low_order_rejected_only_for_theta() {
        let bad = RunConfig { suites: vec![Suite::Theta], order: 8, ..Default::default() };
        assert!(bad.validate().is_err());
        let fine = RunConfig { suites: vec![Suite::Lattice], order: 8, ..Default::default() };
        assert!(fine.validate().is_ok());
    }
}
