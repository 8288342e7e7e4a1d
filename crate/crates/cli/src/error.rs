use std::fmt;

use serde_json::{json, Map, Value};
use tritab::Error;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const CHECK_FAILED: u8 = 1;
    pub const INVALID_INPUT: u8 = 2;
    pub const PRECONDITION: u8 = 3;
}

/// A failure that ends the command before a report is produced.
#[derive(Debug)]
pub struct CliError {
    code: u8,
    kind: &'static str,
    message: String,
    details: Map<String, Value>,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: exit::INVALID_INPUT,
            kind: "invalid_input",
            message: message.into(),
            details: Map::new(),
        }
    }

    pub fn io(message: impl Into<String>) -> Self {
        Self {
            kind: "io",
            ..Self::invalid(message)
        }
    }

    pub fn non_finite(what: &str) -> Self {
        Self {
            code: exit::PRECONDITION,
            kind: "non_finite_result",
            message: format!("{what} is not a finite number"),
            details: Map::new(),
        }
    }

    pub fn code(&self) -> u8 {
        self.code
    }

    pub fn kind(&self) -> &'static str {
        self.kind
    }

    /// `{"error": {"code", "kind", "message", ...details}}`.
    pub fn to_json(&self) -> Value {
        let mut body = self.details.clone();
        body.insert("code".into(), json!(self.code));
        body.insert("kind".into(), json!(self.kind));
        body.insert("message".into(), json!(self.message));
        json!({ "error": body })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let message = err.to_string();
        let mut details = Map::new();
        let (code, kind) = match &err {
            Error::ZeroSubdiagonal { index } => {
                details.insert("index".into(), json!(index));
                (exit::PRECONDITION, "zero_subdiagonal")
            }
            Error::OrderTooSmall { order, min } => {
                details.insert("order".into(), json!(order));
                details.insert("min".into(), json!(min));
                (exit::PRECONDITION, "order_too_small")
            }
            Error::IndefiniteProduct { index, .. } => {
                details.insert("index".into(), json!(index));
                (exit::PRECONDITION, "indefinite_product")
            }
            Error::NotAnEigenvalue { .. } => (exit::PRECONDITION, "not_an_eigenvalue"),
            Error::Overflow { index } => {
                details.insert("index".into(), json!(index));
                (exit::PRECONDITION, "overflow")
            }
            Error::OrderTooLarge { .. } => (exit::INVALID_INPUT, "order_too_large"),
            Error::EmptyMatrix
            | Error::BandLength { .. }
            | Error::NonFinite { .. }
            | Error::DimensionMismatch { .. } => (exit::INVALID_INPUT, "invalid_matrix"),
            Error::NonPositiveParameter { .. }
            | Error::NonPositiveProduct(_)
            | Error::ChebyshevIndex(_)
            | Error::InvalidSpec(_) => (exit::INVALID_INPUT, "invalid_parameter"),
        };
        Self {
            code,
            kind,
            message,
            details,
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(err: csv::Error) -> Self {
        Self::invalid(format!("malformed CSV: {err}"))
    }
}
