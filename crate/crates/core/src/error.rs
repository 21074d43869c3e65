//! Error type shared by all modules of the crate.

use std::fmt;

use crate::mirror::MirrorReport;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building polytopes or evaluating
/// invariants on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Ambient dimension outside the supported range {2, 3, 4}.
    DimensionOutOfRange { dim: usize },
    /// Input points have mixed coordinate lengths.
    DimensionMismatch { expected: usize, actual: usize },
    /// The affine hull of the input points is a proper subspace.
    NotFullDimensional { ambient: usize, affine: usize },
    /// The origin is not strictly interior, so there is no polar dual
    /// lattice polytope.
    OriginNotInterior,
    /// Some facet of the polytope is not at lattice distance one from the
    /// origin.
    NotReflexive,
    /// The operation is defined only for edges and 2-faces.
    UnsupportedFaceDimension { dim: usize },
    /// A curve configuration violates one of its structural rules.
    InvalidConfiguration(String),
    /// An internal cross-check failed; this indicates a bug, not bad input.
    InternalInconsistency(String),
    /// A mirror identity that should hold for every reflexive polytope was
    /// violated. Carries the full report for inspection.
    VerificationFailed {
        identity: String,
        report: Box<MirrorReport>,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionOutOfRange { dim } => {
                write!(f, "ambient dimension {dim} is outside the supported range 2..=4")
            }
            Error::DimensionMismatch { expected, actual } => {
                write!(f, "point of dimension {actual} in input of dimension {expected}")
            }
            Error::NotFullDimensional { ambient, affine } => {
                write!(
                    f,
                    "points span an affine subspace of dimension {affine} < ambient {ambient}"
                )
            }
            Error::OriginNotInterior => {
                write!(f, "the origin is not an interior point of the polytope")
            }
            Error::NotReflexive => write!(f, "the polytope is not reflexive"),
            Error::UnsupportedFaceDimension { dim } => {
                write!(f, "operation supports faces of dimension 1 or 2, got {dim}")
            }
            Error::InvalidConfiguration(msg) => write!(f, "invalid curve configuration: {msg}"),
            Error::InternalInconsistency(msg) => write!(f, "internal inconsistency: {msg}"),
            Error::VerificationFailed { identity, .. } => {
                write!(f, "mirror verification failed at identity `{identity}`")
            }
        }
    }
}

impl std::error::Error for Error {}
