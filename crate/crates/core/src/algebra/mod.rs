//! Exact graded tensor and free Lie algebra arithmetic over `H ≅ Q^{2g}`.

pub mod hvector;
pub mod ia;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod scalar;
pub mod symplectic;
pub mod tensor;
pub mod word;

pub use hvector::{dot, HVector, SIGMA};
pub use ia::{bracket_map, IaMap};
pub use lie::{omega, omega_partial, to_lie_string};
pub use scalar::Scalar;
pub use symplectic::LinearMap;
pub use tensor::Tensor;

/// Largest supported truncation degree (words are packed into a `u64`).
pub const MAX_DEGREE: usize = 8;

/// Truncation degree used when none is given.
pub const DEFAULT_DEGREE: usize = 5;
