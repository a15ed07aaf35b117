use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { divisor: String, dividend: String },

    #[error("homogenizing variable x{0} already occurs in the binomial")]
    HomogenizingVariableInUse(usize),

    #[error("invalid semigroup: {0}")]
    InvalidSemigroup(String),

    #[error("{0} is not an element of the semigroup")]
    NotAMember(String),

    #[error("invalid gluing: {}", format_violations(.0))]
    InvalidGluing(Vec<crate::semigroups::GluingViolation>),

    #[error("invalid extension: {0}")]
    InvalidExtension(String),

    #[error("invalid join: {0}")]
    InvalidJoin(String),

    #[error("unsupported monomial order: {0}")]
    WrongOrder(String),

    #[error("basis is not reduced: {0}")]
    NotReduced(String),

    #[error("degree bound {bound} is insufficient: nonzero Betti number at {degree} on the boundary shell")]
    BoundInsufficient { bound: String, degree: String },

    #[error("scan of {points} points exceeds the budget of {budget}")]
    ScanBudget { points: u64, budget: u64 },

    #[error("gap box {0} cannot be certified: gaps found on the outer shell")]
    UncertifiedBox(String),

    #[error("window {given} too small to certify stabilization (needs {needed})")]
    WindowTooSmall { needed: usize, given: usize },

    #[error("semigroup is not MPD: projective dimension {pd}, {n} generators")]
    NotMpd { pd: usize, n: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("deadline exceeded")]
    DeadlineExceeded,

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

fn format_violations(v: &[crate::semigroups::GluingViolation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

impl Error {
    /// Errors caused by running out of time or scan budget rather than by bad input.
    pub fn is_resource_failure(&self) -> bool {
        matches!(
            self,
            Error::DeadlineExceeded
                | Error::ScanBudget { .. }
                | Error::BoundInsufficient { .. }
                | Error::UncertifiedBox(_)
                | Error::WindowTooSmall { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
