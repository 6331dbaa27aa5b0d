use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("congruence violated on samples: {0}")]
    CongruenceViolation(String),
    #[error("sub-groupoid is not normal: {0}")]
    NotNormal(String),
    #[error("sub-groupoid relates distinct objects: {0}")]
    NotTotallyDisconnected(String),
    #[error("not a group action: {0}")]
    NotAnAction(String),
    #[error("groupoid axiom violated on samples: {0}")]
    AxiomViolation(String),
    #[error("malformed path: {0}")]
    MalformedPath(String),

    #[error("value outside the ambient domain: {0}")]
    OutOfDomain(String),
    #[error("ambients differ: {0} vs {1}")]
    AmbientMismatch(String, String),
    #[error("worldline slices do not match")]
    SliceMismatch,
    #[error("map does not fix the boundary of the interval")]
    NotBoundaryFixing,
    #[error("endpoint does not return the basepoint: {0}")]
    NotALoop(String),
    #[error("endpoint does not preserve the integers: {0}")]
    NotZPreserving(String),
    #[error("invalid piecewise-linear data: {0}")]
    InvalidMap(String),
    #[error("invalid flow: {0}")]
    InvalidFlow(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),

    #[error("no motion exists between the given subsets")]
    NoMotionExists,
    #[error("flow is not a motion between the given subsets")]
    NotAMotion,

    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("invalid braid word: {0}")]
    InvalidBraid(String),

    #[error("configurations do not match: {0}")]
    ConfigMismatch(String),
    #[error("invalid point configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid strand set: {0}")]
    InvalidStrands(String),
    #[error("projection is degenerate under every shear tried: {0}")]
    DegenerateProjection(String),

    #[error("unsupported render kind: {0}")]
    UnsupportedKind(String),
    #[error("invalid render spec: {0}")]
    InvalidRenderSpec(String),

    #[error("parse error: {0}")]
    Parse(String),
}
