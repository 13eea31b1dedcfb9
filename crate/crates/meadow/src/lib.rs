//! Command-line front end over `meadow-core`.

pub mod commands;
pub mod format;
pub mod tables;
pub mod target;

pub use format::OutputFormat;
pub use tables::TableKind;
pub use target::{ModelSelector, RingSelector, Target};
