use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The check could not run; distinct from a mathematical failure.
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
}

impl Report {
    /// Sorts by id and tallies.
    pub fn new(mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let count = |s| checks.iter().filter(|c| c.status == s).count();
        let summary =
            Summary { total: checks.len(), passed: count(Status::Pass), failed: count(Status::Fail), errors: count(Status::Error) };
        Self { checks, summary }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.passed == self.summary.total
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(!self.all_pass())
    }

    /// Checks whose id starts with `cNN.`.
    pub fn criterion(&self, n: u32) -> impl Iterator<Item = &CheckRecord> {
        let prefix = format!("c{n:02}.");
        self.checks.iter().filter(move |c| c.id.starts_with(&prefix))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = write!(out, "{tag:5} {:28} [{}]", c.id, c.anchor);
            if !params.is_empty() {
                let _ = write!(out, " {}", params.join(" "));
            }
            if let Some(ms) = c.ms {
                let _ = write!(out, " ({ms} ms)");
            }
            out.push('\n');
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "      witness: {w}");
            }
        }
        let s = &self.summary;
        let _ = writeln!(out, "{} checks: {} passed, {} failed, {} errors", s.total, s.passed, s.failed, s.errors);
        out
    }
}
