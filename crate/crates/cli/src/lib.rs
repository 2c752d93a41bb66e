//! Parser, printer and subcommands behind the `mgstill` binary.

pub mod commands;
pub mod input;

pub use commands::{max_pairs_from_env, run, Cli, Command, Format, Outcome, MAX_PAIRS_ENV, REPORT_KEYS};
pub use input::{parse_field_descriptor, parse_input, print_input, ParseError};
