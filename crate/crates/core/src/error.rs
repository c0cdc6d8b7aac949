use thiserror::Error;

/// Errors raised by model construction and the operations in this crate.
///
/// Emptiness of a credal set is deliberately *not* here when it is a
/// meaningful query answer; see [`crate::credal::LpResult`]. It does appear
/// as [`Error::EmptyCredalSet`] for operations whose output cannot represent
/// an empty set (e.g. converting a cloud into a random set).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse number {0:?}")]
    BadNumber(String),
    #[error("outcome space must contain at least one element")]
    EmptySpace,
    #[error("outcome space is limited to 128 elements, got {0}")]
    SpaceTooLarge(usize),
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("missing value for element {0:?}")]
    MissingValue(String),
    #[error("event uses a different outcome space")]
    SpaceMismatch,
    #[error("value {value} for element {element:?} is outside [0,1]")]
    ValueOutOfUnit { element: String, value: String },
    #[error("delta exceeds pi at element {0}")]
    DeltaExceedsPi(String),
    #[error("pi never reaches 1")]
    PiNotNormalized,
    #[error("delta never reaches 0")]
    DeltaNeverZero,
    #[error("level {0} is outside [0,1]")]
    LevelOutOfRange(String),
    #[error("constraint bound {0} is outside [0,1]")]
    BoundOutOfUnit(String),
    #[error("cloud is not comonotonic")]
    NotComonotone,
    #[error("credal set is empty")]
    EmptyCredalSet,
    #[error("order must list every element exactly once")]
    BadOrder,
    #[error("pi is not nondecreasing along the supplied order")]
    OrderInconsistent,
    #[error("flow exceeds fhigh at element {0}")]
    FlowExceedsFhigh(String),
    #[error("flow/fhigh must be nondecreasing along the preorder (violated at {0})")]
    PreorderInconsistent(String),
    #[error("no element reaches flow = fhigh = 1")]
    PboxNotNormalized,
    #[error("lower bound exceeds upper bound at element {0}")]
    LowerExceedsUpper(String),
    #[error("interval bounds sum to an empty credal set (need sum(l) <= 1 <= sum(u))")]
    IntervalsInfeasible,
    #[error("problem size {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("mass function masses must be positive and sum to 1")]
    BadMass,
    #[error("mass on the empty set is not allowed")]
    MassOnEmpty,
    #[error("focal set {0} is empty; the cloud induces an empty or inconsistent credal set")]
    EmptyFocal(usize),
    #[error("piecewise-linear function needs at least two breakpoints")]
    TooFewBreakpoints,
    #[error("breakpoint abscissas must be strictly increasing")]
    BreakpointsNotIncreasing,
    #[error("piecewise-linear value {0} is outside [0,1]")]
    PlValueOutOfUnit(String),
    #[error("distributions are defined on different supports")]
    SupportMismatch,
    #[error("event boundary does not align with the cell partition")]
    EventNotCellAligned,
    #[error("discretization needs at least one level")]
    ZeroLevels,
    #[error("distribution is not unimodal")]
    NotUnimodal,
    #[error("pi must vanish at both support ends")]
    BoundaryNotZero,
    #[error("function must be nondecreasing")]
    NotMonotone,
    #[error("mixture weight {0} is outside [0,1]")]
    LambdaOutOfRange(String),
    #[error("random sets are defined on different outcome spaces")]
    MarginalSpaceMismatch,
}
