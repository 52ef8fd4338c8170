//! Sweep orchestration: runs a selection of claim checkers over an order
//! range on a bounded thread pool and renders deterministic reports.

use crate::error::Error;
use crate::theorems::{run_checker, CheckContext, Expectation, TheoremId, TheoremVerdict};
use serde::Serialize;
use std::fmt::Write as _;
use std::str::FromStr;

/// Group families a sweep can be restricted to. Each checker belongs to one
/// family; selecting families selects checkers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    AllAbelian,
    Cyclic,
    ExponentP,
    Mixed23,
    NoncyclicPn,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::AllAbelian,
        Family::Cyclic,
        Family::ExponentP,
        Family::Mixed23,
        Family::NoncyclicPn,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::AllAbelian => "all-abelian",
            Family::Cyclic => "cyclic",
            Family::ExponentP => "exponent-p",
            Family::Mixed23 => "mixed-23",
            Family::NoncyclicPn => "noncyclic-pn",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.as_str())
    }
}

/// Configuration of one verification sweep.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub min_order: u64,
    pub max_order: u64,
    pub theorems: Vec<TheoremId>,
    pub families: Vec<Family>,
    /// Worker threads; 0 uses the default pool size. Parallelism never
    /// changes report bytes.
    pub parallelism: usize,
    /// Cross-check invariants against brute-force oracles where sizes allow.
    pub oracle_mode: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            min_order: 2,
            max_order: 64,
            theorems: TheoremId::ALL.to_vec(),
            families: Family::ALL.to_vec(),
            parallelism: 0,
            oracle_mode: false,
        }
    }
}

/// All verdicts of one sweep, serialized with a schema tag.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub schema_version: String,
    pub min_order: u64,
    pub max_order: u64,
    pub verdicts: Vec<TheoremVerdict>,
}

impl SweepReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    /// Human-readable summary: one row per verdict.
    pub fn summary_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<20} {:<9} {:<7} {:<12} {:<6} {:>8} {:>15} {:>8} {}",
            "theorem", "range", "status", "expected", "match", "groups", "counterexamples",
            "skipped", "max-witness"
        );
        for v in &self.verdicts {
            let expected = match v.theorem_id.expectation() {
                Expectation::Holds => "holds",
                Expectation::Fails => "fails",
                Expectation::ReportOnly => "report-only",
            };
            let status = match v.status {
                crate::theorems::TheoremStatus::Holds => "holds",
                crate::theorems::TheoremStatus::Fails => "fails",
            };
            let max_witness = v
                .counterexamples
                .iter()
                .map(|cx| cx.group.as_str())
                .max_by_key(|name| {
                    crate::group::GroupSpec::new(*name)
                        .resolve()
                        .map(|g| g.order())
                        .unwrap_or(0)
                })
                .unwrap_or("-");
            let _ = writeln!(
                out,
                "{:<20} {:<9} {:<7} {:<12} {:<6} {:>8} {:>15} {:>8} {}",
                v.theorem_id.as_str(),
                format!("{}..{}", v.min_order, v.max_order),
                status,
                expected,
                if v.matches_expectation() { "yes" } else { "NO" },
                v.groups_checked,
                v.counterexamples.len(),
                v.skipped.len(),
                max_witness,
            );
        }
        out
    }

    /// True when every verdict matches its expected status.
    pub fn all_match_expected(&self) -> bool {
        self.verdicts.iter().all(|v| v.matches_expectation())
    }
}

/// Runs the selected checkers. The checker list is the intersection of the
/// requested theorem ids and the requested families, in canonical order.
pub fn run_sweep(config: &SweepConfig) -> SweepReport {
    let selected: Vec<TheoremId> = TheoremId::ALL
        .iter()
        .filter(|id| config.theorems.contains(id))
        .filter(|id| config.families.contains(&id.family()))
        .copied()
        .collect();

    let ctx = CheckContext {
        min_order: config.min_order,
        max_order: config.max_order,
        oracle_mode: config.oracle_mode,
        kappa_max_vertices: crate::invariants::KAPPA_EXACT_MAX_VERTICES,
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .expect("thread pool");
    let verdicts = pool.install(|| {
        selected
            .iter()
            .map(|&id| run_checker(id, &ctx))
            .collect::<Vec<_>>()
    });

    SweepReport {
        schema_version: crate::SCHEMA_VERSION.to_string(),
        min_order: config.min_order,
        max_order: config.max_order,
        verdicts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_selection_filters_checkers() {
        let config = SweepConfig {
            max_order: 12,
            families: vec![Family::Cyclic],
            ..Default::default()
        };
        let report = run_sweep(&config);
        let ids: Vec<TheoremId> = report.verdicts.iter().map(|v| v.theorem_id).collect();
        assert!(ids.contains(&TheoremId::TKappaCyclic));
        assert!(!ids.contains(&TheoremId::TCon));
    }

    #[test]
    fn parallelism_does_not_change_report_bytes() {
        let mut config = SweepConfig {
            max_order: 20,
            ..Default::default()
        };
        config.parallelism = 1;
        let a = run_sweep(&config).to_json();
        config.parallelism = 4;
        let b = run_sweep(&config).to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn summary_table_is_renderable() {
        let config = SweepConfig {
            max_order: 16,
            theorems: vec![TheoremId::L21, TheoremId::TCon],
            ..Default::default()
        };
        let report = run_sweep(&config);
        let table = report.summary_table();
        assert!(table.contains("L2.1"));
        assert!(table.contains("T-con"));
        assert!(report.all_match_expected(), "{table}");
    }
}
