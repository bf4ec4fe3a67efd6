//! Command-line front end: algebra specifications, element expressions and
//! the `gwa` subcommands.

pub mod command;
pub mod error;
pub mod expr;
pub mod report;
pub mod spec;

pub use command::{run_command, USAGE};
pub use error::{CliError, ParseError};
pub use expr::{parse_element_expr, parse_expr, Expr};
pub use report::Report;
pub use spec::{parse_algebra_spec, parse_roots, AlgebraSpec};
