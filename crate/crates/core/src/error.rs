use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight vectors differ: {left:?} vs {right:?}")]
    WeightMismatch { left: Vec<u32>, right: Vec<u32> },
    #[error("all coordinates vanish; not a projective point")]
    DegeneratePoint,
    #[error("modular form weights differ: {0} vs {1}")]
    FormWeightMismatch(i64, i64),
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("matrix does not preserve the quadratic form")]
    NotOrthogonal,
    #[error("input is not a solution of xy - z^2 = 3: ({0}, {1}, {2})")]
    NotASolution(i64, i64, i64),
    #[error("reduction did not terminate within {0} steps")]
    StepBound(usize),
    #[error("search budget of {0} nodes exhausted")]
    SearchBudget(usize),
    #[error("pair is not hyperbolic: x.x = {xx}, y.y = {yy}, x.y = {xy}")]
    NotHyperbolic { xx: i64, yy: i64, xy: i64 },
    #[error("lower hypergeometric parameter must be positive, got {0}")]
    NonPositiveLowerParameter(String),
    #[error("point is not in the upper half space")]
    NotInUpperHalfSpace,
    #[error("truncation order {got} below the minimum {min}")]
    OrderTooSmall { got: i64, min: i64 },
    #[error("form is not homogeneous of degree {expected}: found degrees {found:?}")]
    NotHomogeneous { expected: u32, found: Vec<u32> },
    #[error("form has multidegree {found:?}, expected {expected:?}")]
    WrongMultidegree { expected: Vec<u32>, found: Vec<u32> },
    #[error("{0} is not the square of a rational")]
    NotASquare(String),
    #[error("{0}")]
    Linear(#[from] crate::exact::zmatrix::SolveError),
}
