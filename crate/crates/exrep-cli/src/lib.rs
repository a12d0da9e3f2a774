//! Library surface of the command-line front end, split out so integration
//! tests can drive the commands without spawning processes.

pub mod commands;
pub mod error;
pub mod render;
pub mod report;

pub use commands::{
    cmd_chars, cmd_classify, cmd_scan, cmd_verify_example, load_fixture, parse_fixture,
    ClassifyArgs, ScanArgs, P59_FIXTURE_JSON,
};
pub use error::CliError;
pub use report::ReportDocument;
