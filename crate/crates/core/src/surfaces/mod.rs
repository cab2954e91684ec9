//! Cubic-surface strata in weighted projective space, symbolic Hessians, and the
//! boundary geometry of the toric model `H(u)`.

pub mod checks;
pub mod cubic;
pub mod toric;
