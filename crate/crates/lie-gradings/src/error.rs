//! Crate-wide error type.

use crate::exactmath::Poly;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("the Lie algebra is not nilpotent")]
    NotNilpotent,

    #[error("a field extension of the rationals is required; irreducible factor {minimal_polynomial}")]
    FieldExtensionRequired { minimal_polynomial: Poly },

    #[error("the given maps do not commute pairwise")]
    NotCommuting,

    #[error("a map is not semisimple (its minimal polynomial is not square-free)")]
    NotSemisimple,

    #[error("the candidate layers do not form a direct sum decomposition")]
    NotDirectSum,

    #[error("the layers violate the grading property at layer pair ({0}, {1})")]
    NotAGrading(usize, usize),

    #[error("the grading quotient group has torsion")]
    TorsionInQuotient,

    #[error("the two gradings live on different Lie algebras")]
    DifferentAlgebra,

    #[error("grading group rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("integer variable {0} has no finite box bounds")]
    UnboundedIntegerVariable(usize),

    #[error("optimal positive realization refused: {weights} weights exceeds the cap of {cap}; use fast mode")]
    OptimalModeTooLarge { weights: usize, cap: usize },

    #[error("the positivity cone is empty")]
    EmptyCone,

    #[error("form is not homogeneous: monomials {0:?} and {1:?} have different weights")]
    InhomogeneousForm(Vec<usize>, Vec<usize>),

    #[error("form index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("basis vector {0} does not lie in a single layer of the grading")]
    MixedLayerIndex(usize),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
