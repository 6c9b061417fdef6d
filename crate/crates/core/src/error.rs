use thiserror::Error;

/// Errors raised by the algebraic and combinatorial kernels.
///
/// Most verification routines never return these: a failed identity is
/// reported as data in a [`crate::report::Report`]. These variants signal
/// misuse or a broken invariant.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("series has constant term {0}, which is not a unit in Z[[q]]")]
    NonUnitConstantTerm(String),
    #[error("x-degree {xdeg} term is not invertible alongside the x^0 part (needs positive q-valuation)")]
    NonTopologicalInverse { xdeg: i64 },
    #[error("substitution pushes a nonzero coefficient below q^0 at x^{xdeg}")]
    NegativeQDegree { xdeg: i64 },
    #[error("polynomial division leaves a nonzero remainder")]
    InexactDivision,
    #[error("truncation order must be positive")]
    ZeroTruncation,
    #[error("no crystal element with phi = {0}")]
    NoGroundElement(String),
    #[error("dominant weight {0} does not match the crystal level {1}")]
    LevelMismatch(String, u32),
    #[error("weight difference {0} is not a nonnegative integral combination of simple roots")]
    NonIntegralGrading(String),
    #[error("modified length is only defined for 3L0 and 2L0+L1, got {0}")]
    UnsupportedWeight(String),
    #[error("D = {0} does not divide d*HT(delta) = {1}")]
    InvalidDivisor(u32, i64),
    #[error("f'/g' depend on the representative for q={q:?}, p={p:?}")]
    RepresentativeDependence {
        q: (usize, usize),
        p: (usize, usize),
    },
    #[error("computed matrix differs from the reference in {} cells, first {:?}", .0.len(), .0.first())]
    MatrixMismatch(Vec<(usize, usize)>),
    #[error("coefficient bridge fails at n = {n}")]
    BridgeMismatch { n: usize },
    #[error("malformed crystal: {0}")]
    MalformedCrystal(String),
    #[error("theorem sum did not terminate: min-degree of term {0} stayed below the truncation")]
    NonTerminating(usize),
    #[error("window enumeration did not stabilize by window {0}")]
    NoStabilization(usize),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown series `{0}`")]
    UnknownSeries(String),
    #[error("unknown table family `{0}`")]
    UnknownFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
