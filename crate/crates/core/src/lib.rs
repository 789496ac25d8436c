//! Graph decomposition by batch-activated center growth, with two
//! applications built on top of it: k-center approximation and diameter
//! approximation through quotient graphs.
//!
//! The crate is organized around the pipeline:
//!
//! 1. [`graph`] — compressed adjacency graphs, BFS, and exact desk-scale
//!    oracles (diameter, k-center) used as ground truth in tests.
//! 2. [`io`] — edge-list loading and synthetic generators (meshes,
//!    expander-plus-path, chain appending).
//! 3. [`decomposition`] — the growth engine and the three decomposition
//!    algorithms (`cluster`, `cluster2`, and the exponential-shift
//!    baseline `mpx`), plus the round ledger that accounts for
//!    synchronous growing steps.
//! 4. [`quotient`] — contraction of a clustering into a (optionally
//!    weighted) quotient graph and exact diameter/APSP on it.
//! 5. [`estimators`] — diameter estimation, a cluster-based distance
//!    oracle, and k-center approximation with cluster merging.
//!
//! All randomized operations take an explicit 64-bit seed and produce
//! bit-identical results regardless of worker-thread count.

pub mod decomposition;
pub mod estimators;
pub mod graph;
pub mod io;
pub mod quotient;

pub use graph::{DistanceVector, Graph, UNREACHABLE};
