//! Pass/fail reports for identities checked at run time.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    /// Offending Betti cells `(i, j)`, when the check is about a table.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub cells: Vec<(usize, usize)>,
}

impl CheckResult {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            pass,
            detail: detail.into(),
            cells: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            write!(f, "{mark} {}: {}", c.name, c.detail)?;
            if !c.cells.is_empty() {
                let cells: Vec<String> =
                    c.cells.iter().map(|(i, j)| format!("({i},{j})")).collect();
                write!(f, " at {}", cells.join(" "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
