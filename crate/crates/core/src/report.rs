//! Pass/fail reports produced by the verification suites.

use std::fmt;

/// Outcome of one verified property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// Number of individual instances checked.
    pub cases: usize,
    /// First failing instance, if any.
    pub counterexample: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// A list of property checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// Record a property with its case count and first failure.
    pub fn record(&mut self, name: impl Into<String>, cases: usize, counterexample: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            cases,
            counterexample,
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }
}

/// Accumulates cases of one property, keeping the first failure.
#[derive(Debug, Default)]
pub struct Tally {
    pub cases: usize,
    pub failure: Option<String>,
}

impl Tally {
    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    pub fn into_report(self, report: &mut Report, name: impl Into<String>) {
        report.record(name, self.cases, self.failure);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.counterexample {
                None => writeln!(f, "pass\t{}\t{} cases", c.name, c.cases)?,
                Some(ce) => writeln!(f, "FAIL\t{}\t{} cases\t{}", c.name, c.cases, ce)?,
            }
        }
        Ok(())
    }
}
