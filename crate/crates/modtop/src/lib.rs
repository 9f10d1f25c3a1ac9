//! Std-side tooling over `modtop-core`: JSON formats, countermodel search,
//! property suites and the census.

pub use modtop_core as core;

pub mod census;
pub mod error;
pub mod gen;
pub mod json;
pub mod resolve;
pub mod search;
pub mod suite;
