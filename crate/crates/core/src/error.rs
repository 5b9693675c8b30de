use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the numerical kernels and model constructors.
#[derive(Debug, Error)]
pub enum Error {
    /// A quadrature or iterative scheme exhausted its budget before reaching
    /// the requested tolerance.
    #[error("numerical scheme did not converge: {0}")]
    NonConvergence(String),

    /// Root bracketing failed: `f(lo)` and `f(hi)` do not have opposite signs.
    #[error("no sign change on [{lo}, {hi}] (f(lo)={flo:e}, f(hi)={fhi:e})")]
    NoBracket { lo: f64, hi: f64, flo: f64, fhi: f64 },

    /// Enumeration over 4^d mixture components was requested beyond the cap.
    #[error("dimension {d} exceeds enumeration cap {max}")]
    DimensionTooLarge { d: usize, max: usize },

    /// An input vector does not match the expected dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// The plateau half-width `x0` is outside (0, 1/4).
    #[error("plateau half-width x0={0} outside (0, 1/4)")]
    BadPlateau(f64),

    /// Attempted to normalise a network with zero path norm.
    #[error("cannot normalise a network with zero path norm")]
    ZeroNetwork,

    /// A Fourier-route value came out with an imaginary residual above the
    /// contract threshold.
    #[error("imaginary residual {residual:e} too large for value {value:e}")]
    ImaginaryResidual { value: f64, residual: f64 },

    /// Rejection sampler stalled (acceptance rate below threshold).
    #[error("rejection sampler stalled: {accepted} accepted out of {proposed} proposals")]
    RejectionStall { accepted: usize, proposed: usize },

    /// The principal-value singular window is not separated from the first
    /// quadrature node.
    #[error("singular window {eps_sing} not below first quadrature node {node}")]
    SingularitySpacing { eps_sing: f64, node: f64 },

    /// The sine-pair segment bounds are vacuous when θ₁ = 0.
    #[error("theta_1 = 0: segment bounds degenerate (v ≡ 0)")]
    DegenerateTheta,

    /// A spec constructor rejected its parameters.
    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    /// An operation only implemented for the α = 1 (ReLU family) activation.
    #[error("unsupported activation: {0}")]
    UnsupportedActivation(String),
}
