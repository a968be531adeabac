//! Exact cell models of configuration spaces, covering-space transfers and
//! the superposition product on their cohomology.

pub mod config_models;
pub mod covers;
pub mod error;
pub mod fixtures;
pub mod formal_sums;
pub mod integer;
pub mod par;
pub mod report;
pub mod simplicial;
pub mod suites;
pub mod superposition;
pub mod thom;

pub use error::{Error, Result};
pub use integer::Int;
