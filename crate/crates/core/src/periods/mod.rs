//! Hypergeometric period series, the constant-term period oracle, and the
//! elliptic invariants of the `u₃ = 0` degeneration.

pub mod elliptic;
pub mod hypergeom;
pub mod oracle;
pub mod series;
pub mod checks;
