//! Uniform result type for the bounded verification suites.

use std::fmt;

/// One failed check: which relation or axiom, on which instance, and why.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Stable identifier of the relation or axiom, e.g. `s-braid` or `axiom-3`.
    pub kind: String,
    /// Instance data, typically the substituted generator word or element pair.
    pub instance: String,
    /// Left and right hand sides, or whatever mismatch was observed.
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FAIL relation={} instance={} {}",
            self.kind, self.instance, self.detail
        )
    }
}

/// Outcome of a verification suite: how many instances were checked and every
/// violation found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    /// Name of the suite that produced this report.
    pub suite: String,
    /// Number of instances checked.
    pub checked: u64,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), checked: 0, violations: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn record(&mut self, kind: &str, instance: impl fmt::Display, detail: impl fmt::Display) {
        self.violations.push(Violation {
            kind: kind.to_string(),
            instance: instance.to_string(),
            detail: detail.to_string(),
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        write!(
            f,
            "{}: checked {} instances, {}",
            self.suite,
            self.checked,
            if self.passed() {
                "all passed".to_string()
            } else {
                format!("{} violations", self.violations.len())
            }
        )
    }
}
