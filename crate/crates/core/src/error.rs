//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by the exact predicates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("degenerate segment: both endpoints at ({}, {})", at.0, at.1)]
    DegenerateSegment { at: (i64, i64) },
    #[error("segments overlap collinearly (general position violated)")]
    CollinearOverlap,
    #[error(
        "segment endpoint lies in the interior of the other segment (general position violated)"
    )]
    EndpointOnInterior,
    #[error("point ({}, {}) lies on the supporting line of the segment", at.0, at.1)]
    PointOnSupportingLine { at: (i64, i64) },
    #[error("perturbation failed to reach general position after {attempts} attempts")]
    PerturbationFailed { attempts: u32 },
}

/// Errors raised while constructing or loading graphs and matrices.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("input does not parse: {0}")]
    Parse(String),
    #[error("coordinate ({x}, {y}) exceeds the magnitude budget 2^30")]
    CoordinateOutOfBudget { x: i64, y: i64 },
    #[error("vertex index {index} out of range for {count} points")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("edge {index} is a self-loop on vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("edges {first} and {second} are duplicates")]
    DuplicateEdge { first: usize, second: usize },
    #[error("points {i} and {j} coincide")]
    DuplicatePoint { i: usize, j: usize },
    #[error("points {i}, {j}, {k} are collinear")]
    CollinearTriple { i: usize, j: usize, k: usize },
    #[error("matrix entry for pair ({i}, {j}) is {problem}")]
    BadMatrixEntry { i: usize, j: usize, problem: String },
    #[error("matrix is not total: pair ({i}, {j}) is missing")]
    MissingMatrixEntry { i: usize, j: usize },
    #[error("geometric data required but the input is an abstract intersection matrix")]
    NotGeometric,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Errors raised by the detectors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectError {
    #[error("pattern parameters must be at least 1 (got k={k}, l={l})")]
    BadArguments { k: usize, l: usize },
    #[error("edge set {{{i}, {j}}} is not a matching: the pair shares an endpoint")]
    NotAMatching { i: usize, j: usize },
    #[error("edge index {index} out of range for {count} edges")]
    EdgeOutOfRange { index: usize, count: usize },
    #[error("enumeration size C({edges}, {choose}) exceeds the oracle cap of 10^7")]
    EnumerationTooLarge { edges: usize, choose: usize },
}

/// Errors raised by the partition procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("the point count {n} is odd; drop a vertex before halving")]
    OddPointCount { n: usize },
    #[error("at least {min} points are required, got {n}")]
    TooFewPoints { n: usize, min: usize },
    #[error("leaf size must be at least 2, got {0}")]
    BadLeafSize(usize),
    #[error("internal invariant failure: {0}")]
    InvariantFailure(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors raised by the good-endpoint analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("edges {i} and {j} are not disjoint")]
    NotDisjoint { i: usize, j: usize },
    #[error("matching has {len} edges; the good-endpoint bound needs at least 4")]
    TooSmall { len: usize },
    #[error("fourth edge endpoint lies on the triangle boundary")]
    OnTriangleBoundary,
    #[error("generation failed after {attempts} rejection attempts")]
    GenerationFailed { attempts: u32 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors raised by the extremal harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("point generation failed after {attempts} attempts")]
    GenerationFailed { attempts: u32 },
    #[error("at least 2 points are required, got {0}")]
    TooFewPoints(usize),
    #[error("internal invariant failure: {0}")]
    InvariantFailure(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Detect(#[from] DetectError),
}
