//! Quaternionic logarithm with an explicit branch index.
//!
//! For `q = |q| (cos θ + n̂ sin θ)` with `θ ∈ [0, π]` the branches are
//! `ln|q| + n̂ (θ + 2πk)`. Every branch exponentiates back to `q`; `k = 0`
//! is the principal value.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

/// A logarithm of some quaternion together with the branch it lies on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogBranch {
    pub value: Quaternion,
    pub k: i64,
    /// Set when the input had no vector part, so the rotation axis was
    /// taken to be `i` by convention.
    pub axis_defaulted: bool,
}

/// The principal logarithm, `θ ∈ [0, π]`.
pub fn log_principal(q: Quaternion) -> Result<LogBranch> {
    log_branch(q, 0)
}

/// The logarithm on branch `k`: `ln|q| + n̂ (θ + 2πk)`.
///
/// A negative real input has every axis available; `i` is used and
/// `axis_defaulted` is set. A positive real input on `k ≠ 0` uses the same
/// convention. A positive real input on the principal branch has a zero
/// vector part.
pub fn log_branch(q: Quaternion, k: i64) -> Result<LogBranch> {
    let r = q.norm();
    if r == 0.0 {
        return Err(Error::Domain("logarithm of zero quaternion"));
    }
    let len = q.vector_norm();
    let theta = len.atan2(q.q1());
    let angle = theta + TAU * k as f64;

    let (axis, axis_defaulted) = if len > 0.0 {
        let [x, y, z] = q.vector_part();
        ([x / len, y / len, z / len], false)
    } else if q.q1() > 0.0 && k == 0 {
        ([0.0; 3], false)
    } else {
        ([1.0, 0.0, 0.0], true)
    };

    Ok(LogBranch {
        value: Quaternion::raw_parts(r.ln(), axis.map(|a| a * angle)),
        k,
        axis_defaulted,
    })
}
