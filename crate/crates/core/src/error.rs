use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("characteristic {0} divides a curve degree of the construction")]
    ExcludedCharacteristic(u32),
    #[error("division by zero in F_p")]
    DivisionByZero,
    #[error("ideal is not zero-dimensional in this chart")]
    NotZeroDimensional,

    #[error("retry budget exhausted: {0}")]
    RetryExhausted(String),
    #[error("degenerate residual scheme: {0}")]
    DegenerateResidual(String),
    #[error("linear system has dimension {found}, expected {expected}")]
    WrongDimension { expected: usize, found: usize },
    #[error("coordinate chart check failed: {0}")]
    ChartViolation(String),

    #[error("extra singularity: {0}")]
    ExtraSingularity(String),
    #[error("node at point #{index} is not ordinary")]
    NonOrdinaryNode { index: usize },
    #[error("resolution profile mismatch: {0}")]
    ProfileMismatch(String),
    #[error("ramification scheme has degree {found}, expected {expected}")]
    WrongRamificationDegree { expected: usize, found: usize },
    #[error("ramification scheme is not reduced ({0})")]
    NonReducedRamification(String),
    #[error("two ramification points share a branch point")]
    BranchCollision,
    #[error("no pencil coordinate is a unit on the ramification scheme")]
    UnitFailure,
    #[error("curve meets the point set R")]
    CurveMeetsR,
    #[error("pencil through P and Q has dimension {0}, expected 2")]
    WrongPencilDimension(usize),
    #[error("the pencil has a fixed component")]
    CommonComponent,
    #[error("base locus defect: {0}")]
    BaseLocusDefect(String),
    #[error("recovered ideal differs from I_R")]
    RecoveryMismatch,

    #[error("certificate schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
