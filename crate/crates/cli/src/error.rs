use std::fmt;

use thiserror::Error;

/// Syntax or semantic error in a specification or expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column, when the error points at a token.
    pub column: Option<usize>,
    pub message: String,
    pub expected: Vec<String>,
}

impl ParseError {
    pub fn syntax(column: usize, message: impl Into<String>, expected: &[&str]) -> Self {
        ParseError {
            column: Some(column),
            message: message.into(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn semantic(message: impl Into<String>) -> Self {
        ParseError {
            column: None,
            message: message.into(),
            expected: Vec::new(),
        }
    }

    pub(crate) fn shifted(mut self, offset: usize) -> Self {
        if let Some(c) = self.column.as_mut() {
            *c += offset;
        }
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(c) = self.column {
            write!(f, "column {c}: ")?;
        }
        f.write_str(&self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Library(#[from] gwa::Error),
}

impl CliError {
    /// 2 usage or invalid argument, 3 unsupported input, 4 parse error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse(_) => 4,
            CliError::Library(gwa::Error::InvalidArgument(_)) => 2,
            CliError::Library(_) => 3,
        }
    }
}
