//! File formats, reports and the command implementations behind the `agl`
//! binary.

pub mod commands;
pub mod corpus;
pub mod presentation;
pub mod report;
pub mod scan;
pub mod suite;

use agl_core::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
        }
    }
}

/// Rendered output of a command and whether every mathematical check passed.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub output: String,
    pub passed: bool,
}

/// 0 when all checks pass, 1 when a check failed (including an internal
/// inconsistency between independent computations), 2 for bad input.
pub fn exit_code(result: &anyhow::Result<Outcome>) -> u8 {
    match result {
        Ok(o) if o.passed => 0,
        Ok(_) => 1,
        Err(e) => match e.downcast_ref::<Error>() {
            Some(Error::Inconsistent(_)) => 1,
            _ => 2,
        },
    }
}

/// Parses `3,7,8`.
pub fn parse_generators(text: &str) -> Result<Vec<u64>, String> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<u64>()
                .map_err(|_| format!("`{t}` is not a nonnegative integer"))
        })
        .collect()
}
