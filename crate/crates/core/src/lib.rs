// SPDX-License-Identifier: Apache-2.0

//! Routing and fault-tolerance analysis for enhanced hypercubes `Q_{n,k}`.
//!
//! * [`topology`]: the graph itself, as an implicit bitmask graph.
//! * [`metric`]: closed-form distance, diameter and a shortest router.
//! * [`symmetry`]: automorphisms used to normalize vertex pairs.
//! * [`pathgen`]: `n + 1` internally disjoint, length-bounded paths.
//! * [`oracle`]: brute-force ground truth (BFS, fault and wide diameters,
//!   connectivity, path-set checker).

#![forbid(unsafe_code)]

pub mod error;
pub mod metric;
pub mod oracle;
pub mod pathgen;
pub mod symmetry;
pub mod topology;

pub use error::{Error, Result};
pub use pathgen::{disjoint_paths, DimensionList, Guarantee, PathSet, RoutedPath};
pub use topology::{EnhancedHypercube, Vertex};
