//! Quaternionic exponential and logarithm with explicit branches, 4D
//! hyperspherical coordinates, and cycle shifts of complexified-time
//! quaternions `(t + τI) + x i + y j + z k`.
//!
//! All values are immutable `Copy` types and every operation is a pure
//! function, so everything here is `Send + Sync`.

pub mod cli;
pub mod cycle;
pub mod error;
pub mod hyperspherical;
pub mod log;
pub mod oracle;
pub mod quaternion;
pub mod verify;

pub use cycle::{
    complex_exp_scalar, cycle_equivalent, eta, fundamental_domain, log_eta, shift_cycle,
    ComplexScalar, LogEta, Polar, TimeQuaternion,
};
pub use error::{Error, Result};
pub use hyperspherical::{normalize_angles, HypersphericalCoords, NormalizedAngles};
pub use log::{log_branch, log_principal, LogBranch};
pub use oracle::{exp_matrix_oracle, exp_series_oracle, to_matrix4, Matrix4};
pub use quaternion::{Quaternion, Real, UnitQuaternion};

/// `e^q`; see [`Quaternion::exp`].
pub fn exp_q(q: Quaternion) -> Quaternion {
    q.exp()
}
