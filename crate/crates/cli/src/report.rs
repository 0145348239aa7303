use acl_lab::oracles::OracleOutcome;
use acl_lab::{canonical_code, Graph};
use serde::Serialize;
use serde_json::Value;

use crate::catalog::CatalogEntry;

/// Heads every report produced from an approximant.
pub const APPROXIMANT_NOTE: &str = "host is a finite approximant saturated by free amalgam extensions only; \
non-free extensions are skipped, so it is not existentially complete";

#[derive(Debug, Clone, Serialize)]
pub struct InputRecord {
    pub role: String,
    pub label: String,
    pub order: usize,
    pub size: usize,
    /// Hex canonical code; absent above the canonical coding cap.
    pub code: Option<String>,
}

impl InputRecord {
    pub fn new(role: &str, label: &str, g: &Graph) -> InputRecord {
        InputRecord {
            role: role.to_string(),
            label: label.to_string(),
            order: g.order(),
            size: g.size(),
            code: canonical_code(g).ok().map(|c| c.to_hex()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub command: Vec<String>,
    pub notes: Vec<String>,
    pub inputs: Vec<InputRecord>,
    pub result: Value,
    pub oracles: Vec<OracleOutcome>,
    pub citations: Vec<CatalogEntry>,
}

impl ReportDocument {
    pub fn new(command: Vec<String>) -> ReportDocument {
        ReportDocument {
            command,
            notes: Vec::new(),
            inputs: Vec::new(),
            result: Value::Null,
            oracles: Vec::new(),
            citations: Vec::new(),
        }
    }

    pub fn failed(&self) -> bool {
        self.oracles.iter().any(|o| !o.pass)
    }
}

/// Short name for the common shapes, else `order/size`.
pub fn describe(g: &Graph) -> String {
    let n = g.order();
    let m = g.size();
    let degs = g.degree_sequence();
    if n > 0 && g.is_complete() {
        return format!("K{n}");
    }
    if m == 0 {
        return format!("E{n}");
    }
    if g.is_connected() {
        if n >= 3 && degs.iter().all(|&d| d == 2) {
            return format!("C{n}");
        }
        if m + 1 == n && degs.iter().all(|&d| d <= 2) {
            return format!("P{m}");
        }
    }
    format!("graph({n},{m})")
}

pub fn edges_text(g: &Graph) -> String {
    let e: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("[{}]", e.join(" "))
}

pub fn set_text(v: &[usize]) -> String {
    let s: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("{{{}}}", s.join(","))
}
