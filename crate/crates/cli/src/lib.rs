//! Text formats and command dispatch for the `artin` binary.

pub mod commands;
pub mod format;
