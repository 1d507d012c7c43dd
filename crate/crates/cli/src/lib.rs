//! Command-line front end: JSON documents, atom files, reports and oracle
//! verification on top of `sebthom-core`.

pub mod app;
pub mod atomfile;
pub mod error;
pub mod json;
pub mod report;
pub mod verify;

pub use app::{run, Cli};
pub use error::CliError;
