//! Pass/fail bookkeeping shared by every check.

use std::fmt;
use std::time::Duration;

use serde::{Serialize, Serializer};

/// One failed comparison.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Results of a single named check, possibly covering many inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fragment {
    pub check: String,
    pub checks_run: u64,
    pub failures: Vec<Failure>,
}

impl Fragment {
    pub fn new(check: impl Into<String>) -> Self {
        Fragment { check: check.into(), checks_run: 0, failures: Vec::new() }
    }

    /// Records one comparison. The witness closure only runs on failure.
    pub fn record<I, E, A>(&mut self, ok: bool, input: I, witness: impl FnOnce() -> (E, A))
    where
        I: fmt::Display,
        E: fmt::Display,
        A: fmt::Display,
    {
        self.checks_run += 1;
        if !ok {
            let (expected, actual) = witness();
            self.failures.push(Failure {
                check: self.check.clone(),
                input: input.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }

    /// Records an equality comparison.
    pub fn expect_eq<I, T>(&mut self, input: I, expected: &T, actual: &T)
    where
        I: fmt::Display,
        T: PartialEq + fmt::Display,
    {
        self.record(expected == actual, input, || (expected.to_string(), actual.to_string()));
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

/// Outcome of one verification suite.
///
/// Serializes with a fixed key order: `suite`, `passed`, `checks_run`,
/// `check_ids`, `failures`, `elapsed` (seconds).
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub passed: bool,
    pub checks_run: u64,
    pub check_ids: Vec<String>,
    pub failures: Vec<Failure>,
    #[serde(serialize_with = "seconds")]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn from_fragments(suite: impl Into<String>, fragments: Vec<Fragment>, elapsed: Duration) -> Self {
        let checks_run = fragments.iter().map(|f| f.checks_run).sum();
        let check_ids = fragments.iter().map(|f| f.check.clone()).collect();
        let failures: Vec<Failure> = fragments.into_iter().flat_map(|f| f.failures).collect();
        VerificationReport {
            suite: suite.into(),
            passed: failures.is_empty(),
            checks_run,
            check_ids,
            failures,
            elapsed,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "[{status}] {}: {} checks, {} failures ({:.3} s)",
            self.suite,
            self.checks_run,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        )?;
        for fail in self.failures.iter().take(10) {
            writeln!(
                f,
                "    {} at {}: expected {}, got {}",
                fail.check, fail.input, fail.expected, fail.actual
            )?;
        }
        if self.failures.len() > 10 {
            writeln!(f, "    ... {} more", self.failures.len() - 10)?;
        }
        Ok(())
    }
}

fn seconds<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}
