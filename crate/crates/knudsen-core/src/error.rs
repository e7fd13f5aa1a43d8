//! Crate-wide error type.

use alloc::vec::Vec;
use core::fmt;

/// Errors from kernel evaluation, quadrature construction and the
/// discrete-velocity solver.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument fell outside its contract (negative `a`, x < 0, μ of the
    /// wrong sign for a one-sided branch, ...).
    Domain { what: &'static str, value: f64 },
    /// μ = 0 was passed where the distribution is two-valued; the caller must
    /// pick a side via the `h_plus`/`h_minus` branch evaluators.
    SideRequired,
    /// Quadrature node count outside the supported 2..=256 range.
    NodeCount { requested: usize },
    /// The orthogonalization lost positive-definiteness while building the
    /// three-term recurrence: the squared norm at `degree` came out ≤ 0.
    LostPositivity { degree: usize, norm: f64 },
    /// A constructed rule failed its moment self-check at monomial `degree`.
    ExactnessCheck { degree: usize, relative_error: f64 },
    /// The tridiagonal eigensolver did not converge for one eigenvalue.
    EigenFailure { index: usize },
    /// An integrand returned a non-finite value at quadrature node `node`.
    NonFiniteSample { node: f64 },
    /// The iteration produced a non-finite field entry.
    NonFiniteField { cell: usize, node: f64, iteration: usize },
    /// Source iteration hit the iteration cap; carries the tail of the
    /// sup-norm change history for diagnostics.
    NotConverged { iterations: usize, last_changes: Vec<f64> },
    /// Asymptote extraction was asked of a non-converged field.
    RequiresConverged,
    /// The asymptote fit window holds too few grid points.
    FitWindow { points: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "{what} (got {value})"),
            Error::SideRequired => {
                write!(f, "mu = 0 is two-valued; evaluate h_plus or h_minus instead")
            }
            Error::NodeCount { requested } => {
                write!(f, "node count must be in 2..=256 (got {requested})")
            }
            Error::LostPositivity { degree, norm } => write!(
                f,
                "recurrence construction lost positive-definiteness at degree {degree} (norm {norm:e})"
            ),
            Error::ExactnessCheck { degree, relative_error } => write!(
                f,
                "constructed rule misses the exact moment of degree {degree} by {relative_error:e} relative"
            ),
            Error::EigenFailure { index } => {
                write!(f, "tridiagonal eigensolver stalled on eigenvalue {index}")
            }
            Error::NonFiniteSample { node } => {
                write!(f, "integrand returned a non-finite value at node {node}")
            }
            Error::NonFiniteField { cell, node, iteration } => write!(
                f,
                "non-finite field value at cell {cell}, node {node}, iteration {iteration}"
            ),
            Error::NotConverged { iterations, last_changes } => write!(
                f,
                "source iteration did not converge in {iterations} iterations (last sup-changes {last_changes:?})"
            ),
            Error::RequiresConverged => write!(f, "operation requires a converged field"),
            Error::FitWindow { points } => {
                write!(f, "fit window holds only {points} grid points (need at least 8)")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
