//! Integral sum graphs and their edge-sum structure.
//!
//! A graph is an integral sum graph `G+(S)` when its vertices carry the
//! distinct integers of `S` and `{u, v}` is an edge exactly when `u + v` is
//! again in `S`. This crate builds the interval families `G_n` and `G_{r,s}`,
//! partitions edge sets into edge-sum classes, evaluates the closed-form
//! degree/edge counts against brute force, constructs proper edge colorings
//! with `|r| + s` colors, and decides exact chromatic indices for small
//! graphs by backtracking.
//!
//! Batch sweeps (the [`suite`] module) run data-parallel through rayon when
//! the default `parallel` feature is on, and sequentially otherwise.

pub mod coloring;
pub mod dot;
pub mod edge_sum;
pub mod error;
pub mod extremal;
pub mod formulas;
pub mod graph;
pub mod par;
pub mod star;
pub mod suite;

pub use coloring::{ColorCertificate, EdgeColoring};
pub use error::{Error, Result};
pub use graph::{Edge, IntegralSumGraph, LabelSet};
