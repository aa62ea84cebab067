use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

/// Process exit status classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    InputError,
    SizeGate,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::InputError => 2,
            Status::SizeGate => 3,
        }
    }
}

/// What a command produced: human text plus a machine-readable record
/// carrying the same numbers.
#[derive(Debug)]
pub struct RunReport {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    pub text: String,
    pub status: Status,
}

impl RunReport {
    pub fn new(command: &'static str, inputs: Value) -> Self {
        RunReport {
            command,
            inputs,
            results: json!({}),
            text: String::new(),
            status: Status::Pass,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "status": self.status,
            "exit_code": self.status.code(),
        })
    }
}

/// A command that could not run to completion.
#[derive(Debug)]
pub struct CliError {
    pub status: Status,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl fmt::Display) -> Self {
        CliError {
            status: Status::InputError,
            message: message.to_string(),
        }
    }

    pub fn size_gate(message: impl fmt::Display) -> Self {
        CliError {
            status: Status::SizeGate,
            message: message.to_string(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::input(format!("{e:#}"))
    }
}

pub type CliResult = Result<RunReport, CliError>;
