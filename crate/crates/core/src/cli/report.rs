use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    HypothesisViolation,
    Counterexample,
    Error,
}

impl Status {
    /// 0 verified, 1 counterexample, 2 usage/parse, 3 hypothesis violation.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Counterexample => 1,
            Status::Error => 2,
            Status::HypothesisViolation => 3,
        }
    }

    pub fn of_error(e: &Error) -> Status {
        match e {
            Error::Hypothesis(_)
            | Error::NotMCover { .. }
            | Error::HypothesisFails(_)
            | Error::FormulaInapplicable { .. }
            | Error::NoRootOfUnity { .. }
            | Error::OrderUndefined { .. } => Status::HypothesisViolation,
            _ => Status::Error,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    /// SHA-256 of the canonical (key-sorted, compact) instance JSON.
    pub digest: String,
    pub status: Status,
    pub payload: Value,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        self.status.exit_code()
    }

    /// Report for a failure that happened before or during verification.
    pub fn failure(command: &str, instance: Option<&Value>, err: &Error) -> RunReport {
        let mut payload = serde_json::json!({ "error": err.to_string() });
        if let Some(v) = err.violation_code() {
            payload["code"] = Value::from(v.as_str());
        }
        if let Some(inst) = instance {
            payload["instance"] = inst.clone();
        }
        RunReport {
            command: command.to_string(),
            digest: instance.map(digest).unwrap_or_default(),
            status: Status::of_error(err),
            payload,
        }
    }
}

pub fn canonical_json(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}

pub fn digest(v: &Value) -> String {
    hex::encode(Sha256::digest(canonical_json(v).as_bytes()))
}
