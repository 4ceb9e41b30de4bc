//! Manifest-driven front end for `yblie-core`: load structures from JSON,
//! run their axiom batteries, build new structures, and verify the bundled
//! example corpus.

pub mod bundled;
pub mod commands;
pub mod convert;
pub mod manifest;
pub mod render;

pub use manifest::Manifest;

/// Input problems; the CLI reports these with exit code 2.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {0}")]
    Io(String),
    #[error("cannot parse manifest: {0}")]
    Parse(String),
    #[error("invalid manifest: {0}")]
    Invalid(String),
    #[error("unresolved reference: {0}")]
    Reference(String),
    #[error(transparent)]
    Core(#[from] yblie_core::Error),
}
