//! Genus-1 and genus-2 theta constants as exact truncated series, the level-2
//! generator ring, its restrictions, and the identities between them.

pub mod chars;
pub mod checks;
pub mod genus1;
pub mod genus2;
pub mod numeric;
pub mod restrict;
pub mod suite;

pub use chars::{tc, Scale, ThetaChar};
pub use checks::{determine_theta_constants, ThetaConstants};
pub use genus1::{e4, e6, eta24, h1, h2, theta1, GenusOneForm};
pub use genus2::{generators, theta2, Generators, SiegelForm};
pub use restrict::{restrict_diagonal, restrict_product, siegel_phi, ProductSeries};
