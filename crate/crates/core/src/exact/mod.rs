//! Exact arithmetic substrate.

pub mod cone;
pub mod poly;
pub mod rational;
pub mod series1;
pub mod wp;
pub mod zmatrix;

pub use cone::{ConeKey, ConeSeries, CONE_UNIT};
pub use poly::{vars, MultiPoly, Vars};
pub use rational::{int, rat, QmodTwo, Rational};
pub use series1::LaurentSeries1;
pub use wp::{wp_eq, WPPoint, WpScalar};
pub use zmatrix::ZMatrix;
