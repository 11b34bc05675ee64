use thiserror::Error;

/// Errors produced by the geometric and classification pipelines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("vector is not primitive")]
    NotPrimitive,
    #[error("empty input point set")]
    EmptyInput,
    #[error("polytope is not full-dimensional (dim {found}, ambient {ambient})")]
    NotFullDimensional { found: i32, ambient: usize },
    #[error("halfspace intersection is unbounded")]
    Unbounded,
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("cone is not pointed")]
    NotPointed,
    #[error("polytope has no interior lattice points under dilation")]
    NoInteriorPoints,
    #[error("input is not a canonical Fano polytope ({0} interior lattice points)")]
    NotCanonicalFano(usize),
    #[error("dual lattice hull is not reflexive")]
    NotAlmostReflexive,
    #[error("Fine interior is empty")]
    EmptyFineInterior,
    #[error("Fine interior is not a segment through the origin")]
    NotAxisSegment,
    #[error("no facet contains the given point in its relative interior")]
    NoMatchingFacet,
    #[error("facet polygon matches none of the three reference types")]
    UnrecognizedFacetType,
    #[error("projection along the given direction is not 2-dimensional")]
    DegenerateProjection,
    #[error("sublattice has rank {0} < ambient rank; quotient is infinite")]
    InfiniteQuotient(usize),
    #[error("polytope is not a simplex")]
    NotSimplex,
    #[error("relation is not sign-definite")]
    IndefiniteRelation,
    #[error("point {0} violates the affine lattice constraints")]
    AffineConstraintViolated(String),
    #[error("affine lattice solution set has rank {0}, expected {1}")]
    AffineRank(usize, usize),
    #[error("polygon input is not 2-dimensional")]
    NotPolygon,
    #[error("iteration limit exceeded: {0}")]
    IterationLimit(&'static str),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
