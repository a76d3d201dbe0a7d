use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("non-polynomial expression at byte {offset}: division by a main-variable expression")]
    NonPolynomial { offset: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("values come from different variable/parameter declarations")]
    SpaceMismatch,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("unsupported dimension {0}: only two main variables are handled")]
    UnsupportedDimension(usize),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("singularity is not isolated")]
    NotIsolated,
    #[error("input is not a germ in m^2: {0}")]
    NonGermInput(String),
    #[error("constraint violated: {0} vanishes")]
    ConstraintViolated(String),
    #[error("resource limit exceeded after {0} reductions")]
    ResourceLimit(usize),
    #[error("polynomial is not quasihomogeneous")]
    NotQuasihomogeneous,
    #[error("scheme fails for {which}: {reason}")]
    SchemeFails { which: String, reason: String },
    #[error("decomposition h = sum P_i dF/dx_i does not hold")]
    DecompositionMismatch,
    #[error("not a control function: {0}")]
    NotControlFunction(String),
    #[error("truncation order {got} too small, need at least {need}")]
    TruncationTooSmall { got: usize, need: usize },
    #[error("coefficient index {index} is beyond truncation order {order}")]
    BeyondTruncation { index: usize, order: usize },
    #[error("series has non-unit constant term")]
    NonUnitConstantTerm,
    #[error("constant term is not a square in the coefficient field")]
    NonSquareConstant,
    #[error("parameter domain violation: {0}")]
    DomainViolation(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
