//! Default tolerances, collected in one place.
//!
//! Scale-dependent tolerances state the quantity they multiply.

/// Trace tolerance per matrix dimension: an element of `sl(N, C)` must have
/// `|tr| < TRACE_PER_DIM * N`.
pub const TRACE_PER_DIM: f64 = 1e-12;

/// Frobenius tolerance (times the element scale) for sl2-triple commutators.
pub const SL2_COMMUTATOR: f64 = 1e-10;

/// Relative eigenvalue threshold for the nilpotency test.
pub const NILPOTENT: f64 = 1e-8;

/// Relative singular-value threshold for rank and nullspace decisions.
pub const RANK_SVD: f64 = 1e-10;

/// Minimal pairwise separation of a point configuration.
pub const SEPARATION: f64 = 1e-9;

/// Eigenvalue clustering threshold, times the spectral radius.
pub const CLUSTER: f64 = 1e-6;

/// Residual bound on normalized characteristic-polynomial coefficients for
/// fibre membership.
pub const FIBRE: f64 = 1e-10;

/// Newton iteration cap for fibre solves.
pub const FIBRE_MAX_ITER: usize = 100;

/// Central finite-difference step for coordinate Jacobians, times `1 + |c|`.
pub const FD_STEP: f64 = 1e-6;

/// Interior sup-norm bound on the nonlinear grid residual.
pub const PDE: f64 = 1e-9;

/// Distance below which an entrance path merges two points.
pub const MERGE: f64 = 1e-6;

/// Default deduplication radius for fixed-point reports, in slice coordinates.
pub const DEDUPE_RADIUS: f64 = 1e-4;

/// Hard divergence radius for transport in slice coordinates.
pub const DIVERGENCE_RADIUS: f64 = 1e6;
