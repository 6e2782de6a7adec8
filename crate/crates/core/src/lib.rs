//! Ordered Ramsey numbers of matchings versus triangles, made executable.
//!
//! The crate builds the explicit jumbled ordered matchings, computes the
//! shift statistic of permutations, runs the multi-thread scanning procedure
//! over red/blue color matrices, audits local-lemma parameter conditions,
//! measures interval densities of random bipartite matchings, and decides
//! small ordered Ramsey numbers by exhaustive search.
//!
//! Everything here is `no_std` with `alloc`. File formats, report
//! serialization and the command-line driver live in the `ordram` crate.
//!
//! Vertices, rows, columns and permutation images are zero-based throughout
//! the API. Text formats convert to one-based at the boundary.

#![no_std]

extern crate alloc;

pub mod coloring;
pub mod constructions;
pub mod density;
mod error;
pub mod graph;
pub mod lll;
pub mod matching;
pub mod ramsey;
pub mod rng;
pub mod scan;
pub mod shift;

pub use coloring::{Color, EdgeColoring};
pub use error::{Error, Result};
pub use graph::{Interval, IntervalPartition, OrderedGraph};
pub use matching::{OrderedMatching, Permutation};
