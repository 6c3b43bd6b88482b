//! Word parser, JSON reports, verification suites and the command-line
//! front end for `maxclass3-core`.

pub mod cli;
pub mod published;
pub mod report;
pub mod tables;
pub mod verify;
pub mod word;
