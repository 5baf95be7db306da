pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod group;
pub mod report;
pub mod tables;
pub mod towers;

pub use error::{Error, Result};
pub use group::{PermGroup, Permutation};
pub use report::Report;
