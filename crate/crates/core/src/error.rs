/// Errors surfaced by the equilibrium and optimization routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A problem input violates one of its invariants.
    InvalidInput(String),
    /// The survival probability of the tail underflowed below 1e-300, so the
    /// conditional tail mean is numerically undefined.
    DegenerateTail { t: f64 },
    /// An operation requires an exponential private-valuation distribution.
    WrongDistribution { expected: &'static str },
    /// An operation is not defined for the requested objective.
    WrongObjective { detail: String },
    /// Total surplus is zero, so surplus shares are undefined.
    DegenerateTotal,
    /// Exact enumeration was requested for more products than the cap allows.
    SizeCap { n: usize, cap: usize },
    /// A matrix failed the doubly-stochastic check.
    NotDoublyStochastic(String),
    /// An iterative solver stopped before reaching its tolerance.
    NonConvergence { what: &'static str, residual: f64 },
    /// Adaptive quadrature could not reach the requested tolerance.
    QuadratureNonConvergence { estimate: f64, error: f64 },
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::DegenerateTail { t } => {
                write!(f, "degenerate tail: survival at t={t} underflowed below 1e-300")
            }
            Error::WrongDistribution { expected } => {
                write!(f, "operation requires {expected} private valuations")
            }
            Error::WrongObjective { detail } => write!(f, "unsupported objective: {detail}"),
            Error::DegenerateTotal => write!(f, "total surplus is zero; shares undefined"),
            Error::SizeCap { n, cap } => {
                write!(f, "instance has {n} products, exceeding enumeration cap {cap}")
            }
            Error::NotDoublyStochastic(msg) => {
                write!(f, "matrix is not doubly stochastic: {msg}")
            }
            Error::NonConvergence { what, residual } => {
                write!(f, "{what} did not converge (residual {residual:.3e})")
            }
            Error::QuadratureNonConvergence { estimate, error } => write!(
                f,
                "quadrature did not converge (estimate {estimate:.6e}, error bound {error:.3e})"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
