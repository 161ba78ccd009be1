//! Command-line front end, file formats and exhaustive search campaigns for
//! [`semitorsion_core`].

pub mod parse;
pub mod report;
pub mod search;

pub use semitorsion_core as core;
