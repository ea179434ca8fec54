//! Structured pass/fail reports for verification runs.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Where and how a check failed: the basis-index tuple that witnessed the
/// failure plus both evaluated sides rendered as text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub indices: Vec<usize>,
    pub left: String,
    pub right: String,
}

/// One named check. A counterexample is present exactly when the check
/// failed; the constructors make violating that impossible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    name: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<Counterexample>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check { name: name.into(), passed: true, counterexample: None }
    }

    pub fn fail(name: impl Into<String>, counterexample: Counterexample) -> Check {
        Check { name: name.into(), passed: false, counterexample: Some(counterexample) }
    }

    /// Convenience: pass or fail depending on `witness`.
    pub fn from_witness(name: impl Into<String>, witness: Option<Counterexample>) -> Check {
        match witness {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn passed(&self) -> bool {
        self.passed
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        self.counterexample.as_ref()
    }
}

/// An ordered list of checks, printed and serialized deterministically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn checks(&self) -> &[Check] {
        &self.checks
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name() == name)
    }

    /// Asserts success, panicking with the full failure list otherwise.
    /// Used by tests and by constructions whose preconditions require a
    /// verified input.
    pub fn expect_all_passed(&self, context: &str) {
        if !self.all_passed() {
            let mut lines = String::new();
            for c in self.failures() {
                lines.push_str(&format!("\n  {c}"));
            }
            panic!("{context}: checks failed:{lines}");
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "[ok] {}", self.name)
        } else {
            let w = self.counterexample.as_ref().expect("failed checks carry a counterexample");
            write!(
                f,
                "[FAIL] {} at {:?}: left = {}, right = {}",
                self.name, w.indices, w.left, w.right
            )
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, check) in self.checks.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{check}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_aggregates_and_finds_checks() {
        let mut r = Report::new();
        r.push(Check::pass("first"));
        r.push(Check::fail(
            "second",
            Counterexample { indices: vec![1, 2], left: "x".into(), right: "y".into() },
        ));
        assert!(!r.all_passed());
        assert_eq!(r.failures().count(), 1);
        assert!(r.find("first").unwrap().passed());
        assert!(r.find("second").unwrap().counterexample().is_some());
    }

    #[test]
    fn serialization_is_deterministic() {
        let mut r = Report::new();
        r.push(Check::pass("only"));
        let a = serde_json::to_string(&r).unwrap();
        let b = serde_json::to_string(&r).unwrap();
        assert_eq!(a, b);
        let back: Report = serde_json::from_str(&a).unwrap();
        assert_eq!(back, r);
    }
}
