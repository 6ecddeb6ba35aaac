use thiserror::Error;

/// Error type shared by all modules.
///
/// Variants are grouped by the exit-code class the CLI maps them to:
/// precondition violations (bad inputs) and numerical failures
/// (iteration did not converge, a path left its domain of definition).
#[derive(Debug, Clone, Error)]
pub enum Error {
    // --- precondition violations ---
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("matrix is not nilpotent: largest eigenvalue magnitude {0:.3e}")]
    NotNilpotent(f64),
    #[error("zero nilpotent element has no sl2-completion")]
    ZeroNilpotent,
    #[error("partitions have different sums: {0} vs {1}")]
    MismatchedN(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("point configuration violates the thick/thin stratum: {0}")]
    StratumViolation(String),
    #[error("strand collision: {0}")]
    CollisionDetected(String),
    #[error("matching arcs are not disjoint: {0}")]
    ArcsNotDisjoint(String),
    #[error("evaluation at a singular locus: {0}")]
    DomainError(String),
    #[error("grid touches the singular boundary: {0}")]
    DomainTouchesSingularity(String),
    #[error("top wedge map is identically zero (line is not cyclic)")]
    IdenticallyZeroWedge,
    #[error("braid word is not pure: permutation {0:?}")]
    NotPure(Vec<usize>),

    // --- numerical failures ---
    #[error("Newton iteration diverged: residual {residual:.3e} after {iterations} iterations")]
    NewtonDiverged { residual: f64, iterations: usize },
    #[error("thick-eigenvalue Jacobian is singular: {0}")]
    SingularJacobian(String),
    #[error("transport diverged: coordinate norm {0:.3e}")]
    Diverged(f64),
    #[error("step size underflow at t = {0:.6}")]
    StepUnderflow(f64),
    #[error("no transported sample converged")]
    NoSamplesConverged,
    #[error("only {survivors} of {requested} requested seeds survived the vanishing condition")]
    InsufficientSeeds { survivors: usize, requested: usize },
    #[error("vanishing-cycle convergence is indeterminate: final distance {0:.3e}")]
    IndeterminateConvergence(f64),
    #[error("linear solver failed: {0}")]
    LinearSolveFailed(String),
}

impl Error {
    /// Exit-code class used by the command-line front end:
    /// 3 for numerical failures, 4 for precondition violations.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            NewtonDiverged { .. }
            | SingularJacobian(_)
            | Diverged(_)
            | StepUnderflow(_)
            | NoSamplesConverged
            | InsufficientSeeds { .. }
            | IndeterminateConvergence(_)
            | LinearSolveFailed(_) => 3,
            _ => 4,
        }
    }
}
