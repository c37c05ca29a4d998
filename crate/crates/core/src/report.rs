//! Check results and their text/JSON renderings.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unsupported,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Unsupported => "UNSUPPORTED",
        })
    }
}

/// One named verification with an optional exact witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub check: String,
    pub status: Status,
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(check: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            status: Status::Pass,
            witness: None,
        }
    }

    /// Passing check that still records the certifying value.
    pub fn pass_with(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            status: Status::Pass,
            witness: Some(witness.into()),
        }
    }

    pub fn fail(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            status: Status::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn unsupported(check: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            check: check.into(),
            status: Status::Unsupported,
            witness: Some(reason.into()),
        }
    }

    pub fn from_bool(check: impl Into<String>, ok: bool, witness: impl Into<String>) -> Self {
        if ok {
            Self::pass_with(check, witness)
        } else {
            Self::fail(check, witness)
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Ordered collection of checks plus informational key/value lines.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Report {
    pub subject: String,
    pub info: Vec<(String, serde_json::Value)>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Self {
            subject: subject.into(),
            ..Self::default()
        }
    }

    /// Adds an informational value; strings render bare in text output.
    pub fn info(&mut self, key: impl Into<String>, value: impl Serialize) {
        let value = serde_json::to_value(value).unwrap_or(serde_json::Value::Null);
        self.info.push((key.into(), value));
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    /// True when every check passed; unsupported checks count as not passed.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// Line-oriented text: info lines, then one line per check with failure
    /// witnesses indented beneath.
    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n", self.subject);
        for (k, v) in &self.info {
            match v {
                serde_json::Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
                other => out.push_str(&format!("{k}: {other}\n")),
            }
        }
        for c in &self.checks {
            out.push_str(&format!("{} {}\n", c.status, c.check));
            if c.status != Status::Pass {
                if let Some(w) = &c.witness {
                    for line in w.lines() {
                        out.push_str(&format!("    {line}\n"));
                    }
                }
            }
        }
        out
    }

    /// Machine-readable form: `{subject, info: {..}, checks: [{check, status, witness}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let info: serde_json::Map<String, serde_json::Value> =
            self.info.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        serde_json::json!({
            "subject": self.subject,
            "passed": self.all_passed(),
            "info": info,
            "checks": self.checks,
        })
    }
}
