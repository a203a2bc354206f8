//! Crate error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("spatial axis index {0} out of range (expected 1..=3)")]
    InvalidAxis(u8),
    #[error("coherence pair ({0}, {1}) out of range for dimension {2}")]
    PairOutOfRange(usize, usize, usize),
    #[error("velocity-order cutoff not configured for the symbolic product")]
    TruncationUnset,
    #[error("residual off-diagonal term below the target order: {0}")]
    ResidualOddTerm(String),
    #[error("charge transformation left a first-order residue: {0}")]
    ChargeResidue(String),
    #[error("grid size {0} is not a power of two")]
    GridNotPowerOfTwo(usize),
    #[error("grid dimension {0} unsupported (expected 1 or 3)")]
    GridDimension(usize),
    #[error("dense master-equation guard exceeded: 2N = {0} > {1}")]
    DenseGuard(usize, usize),
    #[error("time step must be positive (got {0})")]
    NonPositiveDt(f64),
    #[error("noise spec invalid: {0}")]
    NoiseSpec(String),
    #[error("kernel spectral density negative at mode {mode}: {value}")]
    KernelNotPositive { mode: usize, value: f64 },
    #[error("need at least {need} samples, got {got}")]
    InsufficientSamples { need: usize, got: usize },
    #[error("step size too large: local truncation estimate {estimate:.3e} exceeds {limit:.3e}")]
    StepTooLarge { estimate: f64, limit: f64 },
    #[error("propagation lost hermiticity: drift {0:.3e}")]
    HermiticityLost(f64),
    #[error("electromagnetic fields must be off for this comparison")]
    EmFieldsActive,
    #[error("decay-rate fit needs at least {need} positive points, got {got}")]
    FitTooShort { need: usize, got: usize },
    #[error("{0}")]
    Config(String),
}
