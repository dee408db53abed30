//! The run report every invocation prints to stdout, and the mapping from
//! library errors to exit codes.
//!
//! A report is self-contained: it echoes the argv, the effective seed and
//! tolerances, and a content hash of every input file, so re-running the
//! echoed command on the digested inputs reproduces `result` bit for bit.
//! `wall_time_s` is the only nondeterministic field and is serialized last,
//! which lets callers compare reports byte-wise after dropping one line.

use std::collections::BTreeMap;

use qentropy::acceptance::Tolerances;
use qentropy::io::IoError;
use qentropy::Error as CoreError;
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PARAMETER: i32 = 3;

pub fn status_for(exit_code: i32) -> &'static str {
    match exit_code {
        EXIT_OK => "ok",
        EXIT_VERIFICATION => "verification-failed",
        EXIT_INPUT => "input-error",
        _ => "parameter-error",
    }
}

/// Exit class of a core error: malformed or impossible *data* is an input
/// error; everything that reflects a bad flag combination or a parameter
/// outside a functional's domain is a parameter error.
pub fn core_exit_code(e: &CoreError) -> i32 {
    match e {
        CoreError::EmptyInput
        | CoreError::NegativeWeight { .. }
        | CoreError::ZeroMass
        | CoreError::RaggedRows { .. }
        | CoreError::LengthMismatch { .. }
        | CoreError::IndexOutOfBounds { .. }
        | CoreError::ConditionOnNullEvent { .. } => EXIT_INPUT,
        CoreError::EscortUndefined { .. }
        | CoreError::NonPositiveArgument { .. }
        | CoreError::CutoffViolation { .. }
        | CoreError::DomainViolation { .. }
        | CoreError::OutOfRange { .. }
        | CoreError::NegativeEntropyForDeltaRule { .. }
        | CoreError::InvalidParameters { .. } => EXIT_PARAMETER,
    }
}

pub fn io_exit_code(e: &IoError) -> i32 {
    match e {
        IoError::Data { source, .. } => core_exit_code(source),
        _ => EXIT_INPUT,
    }
}

/// A failed step, with the exit class already decided.
#[derive(Debug)]
pub struct Failure {
    pub exit_code: i32,
    pub message: String,
}

impl Failure {
    pub fn parameter(message: impl Into<String>) -> Self {
        Failure {
            exit_code: EXIT_PARAMETER,
            message: message.into(),
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            exit_code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        Failure {
            exit_code: core_exit_code(&e),
            message: e.to_string(),
        }
    }
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure {
            exit_code: io_exit_code(&e),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: Vec<String>,
    pub status: &'static str,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub seed: u64,
    pub tolerances: Tolerances,
    /// Input files by path, each mapped to the SHA-256 of its raw bytes.
    pub inputs: BTreeMap<String, String>,
    pub result: serde_json::Value,
    /// Wall time of the run. Keep this field last.
    pub wall_time_s: f64,
}

impl RunReport {
    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}
