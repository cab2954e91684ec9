//! Exact computations around Hessian K3 surfaces of non-Sylvester type:
//! cubic-surface invariants, the curve lattice of the toric model and its
//! discriminant form, the orthogonal/symplectic group dictionary,
//! hypergeometric period series, and the ring of genus-2 theta constants.
//!
//! [`suites::run`] executes the checks and returns one citation-keyed report.

pub mod error;
pub mod exact;
pub mod lattice;
pub mod periods;
pub mod report;
pub mod suites;
pub mod surfaces;
pub mod theta;

pub use error::Error;
