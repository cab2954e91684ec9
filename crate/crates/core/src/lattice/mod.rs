//! The Néron–Severi side: the 20-curve configuration, discriminant forms and
//! the orthogonal group of `U ⊕ U(2) ⊕ ⟨−4⟩`.

pub mod curves;
pub mod disc;
pub mod ortho;
pub mod sublattice;
pub mod checks;
