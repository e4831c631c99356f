use thiserror::Error;

/// Errors surfaced by the diffraction engine and its analysis tools.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A constructor argument violates a domain invariant.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// A two-slit operation was asked of a single-slit geometry.
    #[error("geometry has no second slit; double-slit operation rejected")]
    NotDoubleSlit,

    /// A field evaluation point lies outside the slit opening.
    #[error("coordinate out of aperture: {0}")]
    OutOfAperture(String),

    /// Screen coordinate incompatible with the scan's out-of-plane angle.
    #[error("screen point s = {s} m rejected: cos^2(alpha) < (s/R)^2")]
    InvalidScreenPoint { s: f64 },

    /// Fringe analysis found no interior extremum to report on.
    #[error("no fringe found: {0}")]
    NoFringe(String),

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature did not converge: error estimate {error:.3e} above tolerance {tolerance:.3e} after {intervals} intervals")]
    QuadratureNoConvergence {
        error: f64,
        tolerance: f64,
        intervals: usize,
    },

    /// Far-field (Fraunhofer) validity check failed.
    #[error("far-field condition violated: a^2/(lambda*l) = {fresnel_number:.3} exceeds 1")]
    FarField { fresnel_number: f64 },

    /// Experimental trace and model profile share no abscissae.
    #[error("no overlap between model profile and experimental trace after shift {shift} m")]
    EmptyOverlap { shift: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }
}
