//! Request parsing, dispatch and JSON reports for the `bochner` command.

pub mod error;
pub mod report;
pub mod request;
pub mod run;

pub use error::CliError;
pub use report::{summary, Outcome, Report};
pub use request::{CheckRequest, Command};
pub use run::run;
