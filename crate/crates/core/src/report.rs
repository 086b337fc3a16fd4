//! Check records, the JSON report and the plain-text table.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub module: String,
    pub check: String,
    pub params: BTreeMap<String, i64>,
    pub passed: bool,
    /// Failure witness, or measured values for report-only quantities.
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub dmax: usize,
    pub nmax: usize,
    pub vmax: i64,
    pub suites: Vec<String>,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub config: ConfigEcho,
    pub passed: bool,
    pub total: usize,
    pub failed: usize,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(config: ConfigEcho, checks: Vec<CheckRecord>) -> Self {
        let failed = checks.iter().filter(|c| !c.passed).count();
        Report { schema_version: SCHEMA_VERSION, config, passed: failed == 0, total: checks.len(), failed, checks }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_table(&self) -> String {
        let rows: Vec<[String; 4]> = self
            .checks
            .iter()
            .map(|c| {
                let params = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
                let status = if c.passed { "ok" } else { "FAIL" };
                [c.module.clone(), c.check.clone(), params, status.to_string()]
            })
            .collect();
        let header = ["module", "check", "params", "status"].map(String::from);
        let mut widths = header.clone().map(|h| h.chars().count());
        for r in &rows {
            for (w, cell) in widths.iter_mut().zip(r) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let mut out = String::new();
        let line = |out: &mut String, cells: &[String; 4], witness: &str| {
            for (cell, w) in cells.iter().zip(widths) {
                let pad = w - cell.chars().count();
                let _ = write!(out, "{cell}{}  ", " ".repeat(pad));
            }
            let _ = writeln!(out, "{witness}");
        };
        line(&mut out, &header, "detail");
        for (r, c) in rows.iter().zip(&self.checks) {
            line(&mut out, r, &c.witness);
        }
        let _ = writeln!(out, "{} checks, {} failed", self.total, self.failed);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(passed: bool) -> CheckRecord {
        CheckRecord {
            module: "verma".into(),
            check: "uv_relations".into(),
            params: BTreeMap::from([("dmax".to_string(), 4)]),
            passed,
            witness: String::new(),
        }
    }

    fn config() -> ConfigEcho {
        ConfigEcho { dmax: 4, nmax: 4, vmax: 20, suites: vec!["verma".into()], seed: 0 }
    }

    #[test]
    fn json_key_order_is_fixed() {
        let r = Report::new(config(), vec![record(true)]);
        let json = r.to_json();
        let order = ["schema_version", "config", "passed", "total", "failed", "checks"];
        let pos: Vec<usize> = order.iter().map(|k| json.find(&format!("\"{k}\"")).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(!json.contains("elapsed"));
    }

    #[test]
    fn failure_counts() {
        let r = Report::new(config(), vec![record(true), record(false)]);
        assert!(!r.passed);
        assert_eq!(r.failed, 1);
        assert!(r.to_table().contains("FAIL"));
    }
}
