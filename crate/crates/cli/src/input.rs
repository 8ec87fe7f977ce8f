//! Parsing of flag values and input documents, and the exit-code mapping.

use std::fmt;
use std::fs;

use chaincodes::document::{BuiltCode, CodeDocument, PartitionDocument};
use chaincodes::{ChainRing, ChainRingSpec, Elem, Error};
use serde::de::DeserializeOwned;

#[derive(Debug)]
pub enum CliError {
    /// A library error; the exit code depends on the kind.
    Core(Error),
    /// Unreadable or unparsable input.
    Document(String),
    /// A check reported failure.
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::BudgetExceeded { .. }) => 4,
            CliError::Core(
                Error::NotPrime(_)
                | Error::ReducibleModulus(_)
                | Error::InvalidSpec(_)
                | Error::TooLarge(..)
                | Error::InvalidElement(_)
                | Error::InvalidSet(_)
                | Error::InvalidPartition(_),
            ) => 3,
            CliError::Document(_) => 3,
            CliError::Core(_) | CliError::Failed(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Document(msg) | CliError::Failed(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Inline JSON when the value starts with `{` or `[`, a file path otherwise.
fn read_json<T: DeserializeOwned>(value: &str, what: &str) -> CliResult<T> {
    let trimmed = value.trim_start();
    let text = if trimmed.starts_with('{') || trimmed.starts_with('[') {
        value.to_string()
    } else {
        fs::read_to_string(value).map_err(|e| CliError::Document(format!("cannot read {what} file {value}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| CliError::Document(format!("malformed {what}: {e}")))
}

pub fn ring(value: &str) -> CliResult<ChainRing> {
    let spec: ChainRingSpec = read_json(value, "ring")?;
    Ok(ChainRing::new(&spec)?)
}

pub fn code_document(value: &str) -> CliResult<CodeDocument> {
    read_json(value, "code document")
}

pub fn code(value: &str) -> CliResult<BuiltCode> {
    Ok(code_document(value)?.build()?)
}

pub fn partition(value: &str) -> CliResult<PartitionDocument> {
    read_json(value, "partition")
}

/// `1,7,11`; empty for the empty set.
pub fn set(value: &str) -> CliResult<Vec<u64>> {
    value
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Document(format!("bad set member {t:?}"))))
        .collect()
}

/// An integer (mapped through `Z → R`, so `-1` works) or a JSON digit array.
pub fn element(ring: &ChainRing, value: &str) -> CliResult<Elem> {
    if let Ok(n) = value.trim().parse::<i64>() {
        return Ok(ring.from_int(n));
    }
    let digits: Vec<u64> =
        serde_json::from_str(value).map_err(|_| CliError::Document(format!("bad element {value:?}")))?;
    Ok(ring.decode_elem(&digits)?)
}
