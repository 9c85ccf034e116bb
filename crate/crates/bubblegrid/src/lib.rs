//! IO, file formats, renderers, the parallel oracle driver, and the
//! command-line front end for the `bubblegrid-core` toolkit.

pub mod cli;
pub mod format;
pub mod parallel;
pub mod render;

pub use format::{parse_config, write_config, ConfigFile, ParseError};
