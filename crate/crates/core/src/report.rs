//! Serializable pass/fail reports for the verification suites. Field order
//! and map types are chosen so serialized output is byte-stable across runs.

use std::collections::BTreeMap;

use serde::Serialize;

#[derive(Serialize, Clone, Debug)]
pub struct Check {
    pub name: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool) -> Self {
        Self {
            name: name.into(),
            params: BTreeMap::new(),
            passed,
            failure: None,
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_failure(mut self, detail: impl Into<String>) -> Self {
        if !self.passed {
            self.failure = Some(detail.into());
        }
        self
    }
}

#[derive(Serialize, Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            seed: None,
            passed: true,
            checks: Vec::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn push(&mut self, check: Check) {
        self.passed &= check.passed;
        self.checks.push(check);
    }

    pub fn absorb(&mut self, other: SuiteReport) {
        for check in other.checks {
            self.push(check);
        }
    }
}
