use thiserror::Error;

/// Errors raised across the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by an exact zero")]
    DivisionByZero,
    #[error("square root of a negative number")]
    NegativeRadicand,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("objects coincide")]
    Coincident,
    #[error("segments of unequal length cannot be superposed")]
    SuperpositionMismatch,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("two of the lengths taken together are not greater than the remaining one")]
    TriangleInequalityViolated,
    #[error("strategy `{strategy}` is not applicable: {reason}")]
    StrategyInapplicable { strategy: String, reason: String },
    #[error("figure is not simple")]
    NotSimple,
    #[error("hypothesis of {theorem} not satisfied: {reason}")]
    HypothesisNotSatisfied { theorem: String, reason: String },
    #[error("no such intersection")]
    NoSuchIntersection,
    #[error("unknown proposition `{0}`")]
    UnknownProposition(String),
    #[error("unknown strategy `{0}`")]
    UnknownStrategy(String),
    #[error("nothing to render")]
    NothingToRender,
    #[error("postcondition failed: {0}")]
    PostconditionFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
