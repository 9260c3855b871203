//! One machine-checked certificate per proof step.
//!
//! Each `certify_*` function re-derives a step of the proof from first
//! principles (polynomial identities checked by exact subtraction to zero,
//! sign claims checked by Sturm-based certification, root claims checked by
//! exact isolation) and compares against the printed data in
//! [`CertifyInputs`]. Mutating any single printed coefficient flips the
//! affected certificate to fail.

mod assembly;
mod boxes;
mod d1;
mod d2;
mod d3;
mod d4;
mod inputs;
mod lemma_ab;
mod ratio;
mod sampler;

use alloc::string::String;
use alloc::vec::Vec;

pub use assembly::certify_theorem_assembly;
pub use boxes::{bipoly_range, RBox};
pub use d1::certify_lemma1_d1;
pub use d2::certify_lemma2_d2;
pub use d3::certify_lemma3_d3;
pub use d4::certify_lemma4_d4;
pub use inputs::CertifyInputs;
pub use lemma_ab::certify_lemma_ab;
pub use ratio::certify_ratio;
pub(crate) use sampler::Sampler;

use crate::rational::{self, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// One checked claim with its exact witnesses.
#[derive(Debug, Clone)]
pub struct Step {
    pub description: String,
    pub claim: String,
    pub witnesses: Vec<(String, String)>,
    pub passed: bool,
}

/// A machine-checked proof step: passes iff every step passed.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub name: String,
    pub status: Status,
    pub steps: Vec<Step>,
    /// Wall-clock seconds, filled in by the caller that timed the run.
    /// Not part of the serialized report (reports are byte-reproducible).
    pub elapsed_secs: f64,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub(crate) struct CertBuilder {
    name: &'static str,
    steps: Vec<Step>,
}

impl CertBuilder {
    pub(crate) fn new(name: &'static str) -> Self {
        CertBuilder { name, steps: Vec::new() }
    }

    pub(crate) fn check(
        &mut self,
        description: &str,
        claim: &str,
        passed: bool,
        witnesses: Vec<(String, String)>,
    ) {
        self.steps.push(Step {
            description: String::from(description),
            claim: String::from(claim),
            witnesses,
            passed,
        });
    }

    pub(crate) fn finish(self) -> Certificate {
        let status = if self.steps.iter().all(|s| s.passed) {
            Status::Pass
        } else {
            Status::Fail
        };
        Certificate {
            name: String::from(self.name),
            status,
            steps: self.steps,
            elapsed_secs: 0.0,
        }
    }
}

/// (name, exact fraction) witness pair.
pub(crate) fn wit(name: &str, value: &Rational) -> (String, String) {
    (String::from(name), rational::to_fraction_string(value))
}

pub(crate) fn wit_str(name: &str, value: impl Into<String>) -> (String, String) {
    (String::from(name), value.into())
}

/// Certificate names in dependency order; also the CLI selector values.
pub const CERTIFICATE_NAMES: [&str; 7] =
    ["lemma-ab", "d1", "d2", "d3", "d4", "ratio", "theorem"];

/// Runs one certificate by name.
pub fn run_one(name: &str, inputs: &CertifyInputs) -> Option<Certificate> {
    match name {
        "lemma-ab" => Some(certify_lemma_ab(inputs)),
        "d1" => Some(certify_lemma1_d1(inputs)),
        "d2" => Some(certify_lemma2_d2(inputs)),
        "d3" => Some(certify_lemma3_d3(inputs)),
        "d4" => Some(certify_lemma4_d4(inputs)),
        "ratio" => Some(certify_ratio(inputs)),
        "theorem" => Some(certify_theorem_assembly(inputs)),
        _ => None,
    }
}

/// Runs every certificate in dependency order. Failures are recorded in
/// the returned reports, never thrown.
pub fn run_all(inputs: &CertifyInputs) -> Vec<Certificate> {
    CERTIFICATE_NAMES
        .iter()
        .map(|n| run_one(n, inputs).expect("known name"))
        .collect()
}
