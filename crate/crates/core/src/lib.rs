//! Exact recognizing-set complexity of clutters, with the clutters of
//! maximal independent sets and maximal matchings of graphs as the main
//! subject.

pub mod bitset;
pub mod census;
pub mod cli;
pub mod clutter;
pub mod complexity;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod graph;
pub mod hitting;
pub mod limits;
pub mod rational;
pub mod reductions;
pub mod tree;
pub mod verification;

pub use bitset::VertexSet;
pub use clutter::Clutter;
pub use error::{Error, Result};
pub use graph::Graph;
pub use rational::Rational;
