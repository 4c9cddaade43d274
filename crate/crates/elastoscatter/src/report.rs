//! Verification reports: per-check name, measured value, tolerance and
//! pass/fail, serialized to JSON.

use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub measured: f64,
    pub tolerance: f64,
    /// "max" checks pass when measured <= tolerance, "min" when >=
    pub direction: CheckDirection,
    pub pass: bool,
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum CheckDirection {
    Max,
    Min,
}

impl Check {
    pub fn max(name: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            tolerance,
            direction: CheckDirection::Max,
            pass: measured <= tolerance && measured.is_finite(),
        }
    }

    pub fn min(name: impl Into<String>, measured: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            measured,
            tolerance,
            direction: CheckDirection::Min,
            pass: measured >= tolerance && measured.is_finite(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub all_pass: bool,
    pub elapsed_seconds: f64,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, checks: Vec<Check>, elapsed_seconds: f64) -> Self {
        let all_pass = checks.iter().all(|c| c.pass);
        Self {
            suite: suite.into(),
            checks,
            all_pass,
            elapsed_seconds,
        }
    }

    pub fn print_lines(&self) {
        for c in &self.checks {
            let op = match c.direction {
                CheckDirection::Max => "<=",
                CheckDirection::Min => ">=",
            };
            println!(
                "[{}] {}: measured {:.6e} {} {:.6e}",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.measured,
                op,
                c.tolerance
            );
        }
    }
}
