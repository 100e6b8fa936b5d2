//! Executable checks over the corpus.

pub mod checks;
pub mod corpus;
pub mod runner;
