//! Numerical toolkit for monopole moduli modelled on Slodowy slices.
//!
//! The crate provides five interlocking layers:
//!
//! - [`lie`]: partitions, nilpotent normal forms, sl2-completions and
//!   Slodowy slices in `sl(N, C)`;
//! - [`quotient`]: the adjoint quotient, the thick/thin eigenvalue stratum
//!   of `sl(kN, C)`, and Newton solving for fibre points over a point
//!   configuration;
//! - [`model`] / [`pde`]: closed-form boundary model solutions of the
//!   moment-map equation, finite-difference residual checks, a nonlinear
//!   Newton solver on truncated grids, and the order-by-order homotopy
//!   expansion for moving strands;
//! - [`braid`]: braid words realised as non-colliding strand trajectories,
//!   crossingless matchings and their entrance paths;
//! - [`transport`]: horizontal parallel transport of fibre points along
//!   configuration-space paths, monodromy fixed-point search,
//!   vanishing-cycle membership and Lagrangian sampling.
//!
//! All operations are pure functions of their inputs; values are immutable
//! after construction and safe to use from parallel workers.

pub mod braid;
pub mod error;
pub mod grid;
pub mod higgs;
pub mod lie;
pub mod linalg;
pub mod model;
pub mod pde;
pub mod quotient;
pub mod tol;
pub mod transport;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Dense complex matrix used for Lie-algebra elements.
pub type CMat = nalgebra::DMatrix<num_complex::Complex64>;
/// Dense complex vector.
pub type CVec = nalgebra::DVector<num_complex::Complex64>;
/// Complex scalar.
pub type C64 = num_complex::Complex64;
