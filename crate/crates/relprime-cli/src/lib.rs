//! Implementation of the `relprime` binary: argument types, command
//! runners, and the record/emitter machinery. Split out as a library so the
//! contract tests can parse the machine-readable output into the same types
//! the binary serializes from.

pub mod output;
pub mod run;
