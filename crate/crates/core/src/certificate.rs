//! Machine-readable verification certificates.

use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    GuardExceeded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::GuardExceeded => "guard_exceeded",
        }
    }
}

/// A named piece of evidence: an element, a remainder, a table row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub label: String,
    pub value: String,
}

/// Predicted `q`-exponent for commuting an element past a generator,
/// against the exponent read off from normal forms (`None` if the two
/// normal forms were not proportional by a power of `q`). `vacuous` marks
/// the case where both products already lie in the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarCheck {
    pub element: String,
    pub generator: String,
    pub predicted: i64,
    pub observed: Option<i64>,
    #[serde(default)]
    pub vacuous: bool,
}

impl ScalarCheck {
    pub fn matches(&self) -> bool {
        self.vacuous || self.observed == Some(self.predicted)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: String,
    pub m: usize,
    pub n: usize,
    pub y: Option<String>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub predicted_vs_observed_scalars: Vec<ScalarCheck>,
    pub elapsed_ms: u64,
}

impl Certificate {
    pub fn new(claim: &str, m: usize, n: usize, y: Option<String>) -> Self {
        Certificate {
            claim: claim.to_string(),
            m,
            n,
            y,
            status: Status::Pass,
            witnesses: Vec::new(),
            predicted_vs_observed_scalars: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn witness(&mut self, label: impl Into<String>, value: impl ToString) {
        self.witnesses.push(Witness {
            label: label.into(),
            value: value.to_string(),
        });
    }

    /// Marks the certificate failed with a counterexample.
    pub fn fail(&mut self, label: impl Into<String>, value: impl ToString) {
        self.status = Status::Fail;
        self.witness(label, value);
    }

    /// Marks the certificate as aborted by the degree guard.
    pub fn guard(&mut self, detail: impl ToString) {
        self.status = Status::GuardExceeded;
        self.witness("guard", detail);
    }

    pub fn stamp(&mut self, start: Instant) {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }
}
