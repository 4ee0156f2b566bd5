//! Large induced subgraphs of bounded degree and bounded treewidth.
//!
//! Every graph of treewidth `k` contains a large induced subgraph of treewidth
//! at most `t` whose vertices all have degree at most `d` in the host graph.
//! This crate provides the constructive pieces around that statement:
//!
//! * [`graph`]: simple undirected graphs, chordality, k-tree recognition and
//!   completion, exact treewidth for small instances, and the clique-degree
//!   checker for k-trees.
//! * [`generators`]: path powers, the extremal constructions, random k-trees
//!   and exhaustive free-tree enumeration.
//! * [`extraction`]: greedy-colouring t-set extraction and the degree-bounded
//!   pipeline built on it.
//! * [`interval`]: interval models and the degree-`2k` maximum independent set
//!   algorithm for interval graphs with clique number at most `k + 1`.
//! * [`bounds`]: exact rational evaluators for every closed-form bound.
//! * [`oracles`]: exhaustive solvers for `α`, `α^t` and `α^t_d`.
//! * [`verify`]: the theorem-checking suites with machine-readable reports.

pub mod bounds;
pub mod error;
pub mod extraction;
pub mod generators;
pub mod graph;
pub mod interval;
pub mod oracles;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, EliminationOrder, Graph};
