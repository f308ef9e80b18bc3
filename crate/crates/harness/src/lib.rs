//! Batch computations, invariant verification and counterexample searches
//! for domination in modular graph products.

pub mod classes;
pub mod cli;
pub mod compute;
pub mod config;
pub mod inputs;
pub mod oracle;
pub mod report;
pub mod search;
pub mod verify;
