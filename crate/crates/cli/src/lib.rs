//! File formats, reports and commands for `bckcode`.

pub mod commands;
pub mod files;
pub mod report;

pub use commands::{run, Outcome, EXIT_FAILS, EXIT_HOLDS, EXIT_INPUT};
pub use files::{parse_code, parse_table, serialize_code, serialize_table, ParseError, TableFile};
