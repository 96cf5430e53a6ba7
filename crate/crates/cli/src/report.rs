//! Check records and report serialization.

use serde::Serialize;
use std::fmt::Display;

pub const SCHEMA: &str = "suq2-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Warn,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Warn => "warn",
            Status::Fail => "fail",
        }
    }
}

/// One verified identity. `lhs` is the computed side, `rhs` the expected one.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    #[serde(rename = "ref")]
    pub tag: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Check {
    pub fn new(id: impl Into<String>, tag: &str, status: Status, lhs: impl Into<String>, rhs: impl Into<String>) -> Check {
        Check { id: id.into(), tag: tag.to_string(), status, lhs: lhs.into(), rhs: rhs.into(), elapsed_ms: None }
    }

    /// Exact equality; fails otherwise.
    pub fn equal<T: PartialEq + Display>(id: impl Into<String>, tag: &str, lhs: &T, rhs: &T) -> Check {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        Check::new(id, tag, status, lhs.to_string(), rhs.to_string())
    }

    /// A computed value against a published closed form. A mismatch is a warning: the
    /// computation is self-consistent, the display is not.
    pub fn printed<T: PartialEq + Display>(id: impl Into<String>, tag: &str, computed: &T, printed: &T) -> Check {
        let status = if computed == printed { Status::Pass } else { Status::Warn };
        Check::new(id, tag, status, computed.to_string(), printed.to_string())
    }

    /// A predicate over a family; `lhs` summarizes what was checked or the first counterexample.
    pub fn holds(id: impl Into<String>, tag: &str, ok: bool, lhs: impl Into<String>, rhs: impl Into<String>) -> Check {
        Check::new(id, tag, if ok { Status::Pass } else { Status::Fail }, lhs, rhs)
    }

    /// For families compared against a published display: a mismatch is a warning.
    pub fn demote_to_warn(mut self) -> Check {
        if self.status == Status::Fail {
            self.status = Status::Warn;
        }
        self
    }
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Counts {
    pub pass: usize,
    pub warn: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigSummary {
    pub alpha: String,
    pub eps: String,
    pub n_range: String,
    pub deg_max: u32,
    pub witness_deg: u32,
    pub s0: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub version: &'static str,
    pub suite: String,
    pub config: ConfigSummary,
    pub summary: Counts,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: &str, config: ConfigSummary, mut checks: Vec<Check>) -> SuiteReport {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut summary = Counts::default();
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Warn => summary.warn += 1,
                Status::Fail => summary.fail += 1,
            }
        }
        SuiteReport { schema: SCHEMA, version: env!("CARGO_PKG_VERSION"), suite: suite.to_string(), config, summary, checks }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["suite", "id", "ref", "status", "lhs", "rhs"])?;
        for c in &self.checks {
            w.write_record([self.suite.as_str(), &c.id, &c.tag, c.status.as_str(), &c.lhs, &c.rhs])?;
        }
        let bytes = w.into_inner().map_err(|e| csv::Error::from(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("utf-8 input"))
    }
}
