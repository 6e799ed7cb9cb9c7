//! Exact computation of total-domination invariants on small graphs.
//!
//! The crate decides vertex compliance (membership in some minimal total
//! dominating set), computes per-vertex total domination degrees and the
//! total domination index, generates the named graph families and graph
//! operations those invariants are studied on, and ships a verification
//! harness that cross-checks the enumeration engine against closed-form
//! predictions.
//!
//! Everything is exact: the engine enumerates subsets by ascending
//! cardinality over bit masks, so results carry witnesses and the cost is
//! `Θ(2^n · n)`. A practical order cap (default 24) guards the entry points.
//!
//! ```
//! use totaldom::{generate, sweep_minimal_tds, FamilySpec, DEFAULT_MAX_N};
//!
//! let g = generate(&FamilySpec::Cycle { n: 8 }).unwrap();
//! let result = sweep_minimal_tds(&g, DEFAULT_MAX_N).unwrap();
//! assert_eq!(result.report.gamma_t, 4);
//! assert!(result.report.is_tdr);
//! assert_eq!(result.report.tdi, Some(32));
//! ```

pub mod bitset;
pub mod constructs;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod solver;
pub mod verify;

pub use bitset::VertexSet;
pub use families::{generate, FamilyError, FamilySpec};
pub use graph::{Graph, GraphError};
pub use solver::{
    domination_degree, gamma_t, is_ds, is_minimal_ds, is_minimal_tds, is_tds,
    sweep_minimal_tds, tdd, upper_gamma_t, Certificate, DominationReport, SolverError,
    SweepResult, DEFAULT_MAX_N,
};
