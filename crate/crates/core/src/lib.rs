//! Numerical kernels for two families of Segal-Bargmann transforms: the rank-1
//! Dunkl (Coxeter) family on the complex plane and the SU(2) family on the
//! complexified group SL(2, C).
//!
//! The crate provides
//!
//! * certified-truncation evaluators for the Dunkl kernel, the Dunkl heat
//!   kernel and the SU(2) heat kernel (series values carry explicit tail
//!   bounds),
//! * the A/B/C transform kernels of both families together with identity
//!   suites that measure the algebraic relations among them,
//! * Gaussian-type quadrature rules for the weighted measures the transforms
//!   integrate against, plus a product rule for normalized Haar measure on
//!   SU(2),
//! * a reproduction of the failure of the Coxeter-style kernel factorization
//!   on SU(2), certified with explicit error bounds.
//!
//! Everything is deterministic: sampling is driven by a seeded counter-based
//! generator and identical configurations produce identical reports.

pub mod chebyshev;
pub mod dunkl;
pub mod quadrature;
pub mod report;
pub mod sampling;
pub mod su2;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A reflection multiplicity was negative.
    #[error("multiplicity must be non-negative, got {0}")]
    NegativeMultiplicity(f64),

    /// A time/Planck parameter was zero, negative or non-finite.
    #[error("time parameter must be positive and finite, got {0}")]
    NonPositiveTime(f64),

    /// Positive multiplicity is implemented for one dimension only.
    #[error("positive multiplicity requires dimension 1 (mu = {mu}, dimension {dim})")]
    RankUnsupported { mu: f64, dim: usize },

    /// Dimension mismatch between two points.
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    /// A series failed to reach its truncation target within the term cap.
    #[error("series did not converge within {max_terms} terms")]
    SeriesDivergence { max_terms: usize },

    /// The trigonometric Chebyshev form is only defined on the open interval.
    #[error("trigonometric form requires |x| < 1, got x = {0}")]
    TrigDomain(f64),

    /// The Dunkl difference term divides by the evaluation point.
    #[error("dunkl operator is undefined at x = 0")]
    ZeroEvaluationPoint,

    /// A finite-difference step must be positive.
    #[error("finite-difference step must be positive, got {0}")]
    NonPositiveStep(f64),

    /// A quadrature rule was used with an operation expecting another measure.
    #[error("quadrature rule mismatch: expected {expected}, got {got}")]
    MeasureMismatch { expected: String, got: String },

    /// A rule parameter (order, resolution) was out of range.
    #[error("invalid quadrature parameter: {0}")]
    InvalidRule(String),

    /// A matrix failed the SU(2) membership check.
    #[error("not an SU(2) element: |a|^2 + |b|^2 = {norm}")]
    NotSpecialUnitary { norm: f64 },

    /// A matrix failed the determinant-one check.
    #[error("not unimodular: det = {re} + {im}i")]
    NotUnimodular { re: f64, im: f64 },

    /// The conjugacy angle is only defined for matrices with |Re a| <= 1.
    #[error("conjugacy angle undefined: Re(a) = {0} lies outside [-1, 1]")]
    AngleDomain(f64),

    /// A heat-kernel value that must be a positive real failed the check.
    #[error("heat kernel value must be positive real, got {re} + {im}i")]
    HeatNotPositive { re: f64, im: f64 },

    /// The requested kernel version does not support the operation.
    #[error("operation does not support version {0}")]
    UnsupportedVersion(String),

    /// A sampling sweep aborted while evaluating a concrete sample.
    #[error("evaluation failed at {context}: {source}")]
    SampleEvaluation {
        context: String,
        #[source]
        source: Box<Error>,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

pub use dunkl::{
    dunkl_kernel, dunkl_operator_apply, factorization_check, gram_kernel, heat_kernel_rho, kernel,
    pointwise_bound_check, sigma, transform_apply, verify_coxeter_identities, ComplexPoint,
    KernelVersion, Multiplicity, Time,
};
pub use quadrature::{haar_invariance_check, haar_rule, m_rule, omega_rule, QuadratureRule};
pub use report::{IdentityReport, IdentityStat, LieSampleSpec, SampleSpec};
pub use su2::{
    character, conjugacy_angle, counterexample_report, heat_kernel, kernel_lie,
    transform_apply_lie, verify_lie_identities, CounterexampleReport, HalfInteger, Mat2C,
    SL2CElement, SU2Element, TruncatedSum,
};
