//! Partition-dimension laboratory for corona products of complete and wheel
//! graphs.
//!
//! The crate builds the `K_n ⊙ W_m` family (and friends), computes exact
//! all-pairs distances, detects vertex-equivalence structure, decides the
//! partition dimension by pruned exhaustive search with an independent
//! brute-force oracle, materializes the published explicit partitions for
//! these families, and mechanically confirms or refutes every published
//! value against computed ground truth.
//!
//! ```
//! use pdlab::graph::{build, FamilySpec};
//! use pdlab::solver::{partition_dimension, SolveOpts};
//!
//! let spec = FamilySpec::parse("corona:complete:2,wheel:3").unwrap();
//! let g = build(&spec).unwrap();
//! let result = partition_dimension(&g, &SolveOpts::default(), spec.family_tag()).unwrap();
//! assert_eq!(result.pd(), Some(5));
//! ```

pub mod bounds;
pub mod claims;
pub mod construct;
pub mod dist;
pub mod error;
pub mod graph;
pub mod io;
pub mod naive;
pub mod partition;
pub mod report;
pub mod solver;
pub mod structure;

pub use error::{Error, Result};
