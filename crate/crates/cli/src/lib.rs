//! File formats and commands behind the `proprep` binary.

pub mod cli;
pub mod commands;
pub mod error;
pub mod format;
pub mod record;

pub use cli::{run, Cli};
pub use commands::Output;
pub use error::CliError;
pub use format::{parse_instance, render_instance};
pub use record::ResultRecord;
