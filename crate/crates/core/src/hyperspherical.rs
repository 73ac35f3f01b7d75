//! Four-dimensional generalized spherical coordinates.
//!
//! ```text
//! u1 = r cos θ1 cos θ2 cos θ3
//! u2 = r cos θ1 cos θ2 sin θ3
//! u3 = r cos θ1 sin θ2
//! u4 = r sin θ1
//! ```
//!
//! Canonical ranges are `θ1, θ2 ∈ [-π/2, π/2]` and `θ3 ∈ (-π, π]`, which
//! cover every nonzero point of R⁴. At a pole (`cos θ1 ≈ 0`, or
//! `cos θ2 ≈ 0`) the undetermined trailing angles are set to zero.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{check_finite, Error, Result};
use crate::quaternion::Quaternion;

/// Cosines at or below this value are treated as a pole.
pub const POLE_THRESHOLD: f64 = 1e-12;

/// Reduces an angle into `(-π, π]`, returning the reduced angle and the
/// number of whole turns removed: `x = reduced + 2π·turns`.
pub fn wrap_angle(x: f64) -> (f64, i64) {
    let mut turns = ((x - PI) / TAU).ceil() as i64;
    let mut reduced = x - turns as f64 * TAU;
    // The first guess can be off by one turn when x sits on a boundary.
    for _ in 0..4 {
        if reduced > PI {
            turns += 1;
        } else if reduced <= -PI {
            turns -= 1;
        } else {
            break;
        }
        reduced = x - turns as f64 * TAU;
    }
    (reduced, turns)
}

/// Smallest distance between two angles on the circle.
pub fn circular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(TAU);
    d.min(TAU - d)
}

/// The coordinate equations evaluated for arbitrary (not necessarily
/// canonical) angles.
pub fn cartesian_components(r: f64, theta1: f64, theta2: f64, theta3: f64) -> [f64; 4] {
    let (s1, c1) = theta1.sin_cos();
    let (s2, c2) = theta2.sin_cos();
    let (s3, c3) = theta3.sin_cos();
    [r * c1 * c2 * c3, r * c1 * c2 * s3, r * c1 * s2, r * s1]
}

/// Angles brought into canonical ranges.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedAngles {
    pub angles: [f64; 3],
    /// Whole turns removed from each input angle before any reflection.
    pub wraps: [i64; 3],
}

/// Reduces `(θ1, θ2, θ3)` into the canonical ranges.
///
/// Each angle first loses its whole turns (recorded in `wraps`). If a
/// latitude then lies outside `[-π/2, π/2]` it is reflected through the
/// pole and the remaining coordinates are moved to the antipodal point,
/// which leaves [`cartesian_components`] unchanged. When the inputs already
/// lie inside the ranges modulo 2π, only the wrap step applies and
/// `input[i] = angles[i] + 2π·wraps[i]`.
pub fn normalize_angles(theta1: f64, theta2: f64, theta3: f64) -> NormalizedAngles {
    let (mut t1, k1) = wrap_angle(theta1);
    let (mut t2, k2) = wrap_angle(theta2);
    let (mut t3, k3) = wrap_angle(theta3);

    if t1.abs() > FRAC_PI_2 {
        // cos θ1 changes sign; flip the (θ2, θ3) point to its antipode.
        t1 = PI.copysign(t1) - t1;
        t2 = -t2;
        t3 += PI;
    }
    if t2.abs() > FRAC_PI_2 {
        t2 = PI.copysign(t2) - t2;
        t3 += PI;
    }
    let (t3, _) = wrap_angle(t3);

    NormalizedAngles {
        angles: [t1, t2, t3],
        wraps: [k1, k2, k3],
    }
}

/// `(r, θ1, θ2, θ3)` with `r > 0` and canonical angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypersphericalCoords {
    r: f64,
    theta1: f64,
    theta2: f64,
    theta3: f64,
}

impl HypersphericalCoords {
    /// Validating constructor; angles must already be canonical.
    pub fn new(r: f64, theta1: f64, theta2: f64, theta3: f64) -> Result<Self> {
        check_finite("r", r)?;
        check_finite("theta1", theta1)?;
        check_finite("theta2", theta2)?;
        check_finite("theta3", theta3)?;
        if r <= 0.0 {
            return Err(Error::Domain("radius must be positive"));
        }
        if theta1.abs() > FRAC_PI_2 || theta2.abs() > FRAC_PI_2 {
            return Err(Error::Domain("latitude outside [-pi/2, pi/2]"));
        }
        if theta3 <= -PI || theta3 > PI {
            return Err(Error::Domain("azimuth outside (-pi, pi]"));
        }
        Ok(Self {
            r,
            theta1,
            theta2,
            theta3,
        })
    }

    /// Accepts arbitrary finite angles and normalizes them, also returning
    /// the whole turns removed.
    pub fn from_raw_angles(
        r: f64,
        theta1: f64,
        theta2: f64,
        theta3: f64,
    ) -> Result<(Self, [i64; 3])> {
        check_finite("theta1", theta1)?;
        check_finite("theta2", theta2)?;
        check_finite("theta3", theta3)?;
        let n = normalize_angles(theta1, theta2, theta3);
        let [t1, t2, t3] = n.angles;
        Ok((Self::new(r, t1, t2, t3)?, n.wraps))
    }

    /// Inverse of [`Self::to_cartesian`] on `H \ {0}`.
    pub fn from_cartesian(q: Quaternion) -> Result<Self> {
        let [a, b, c, d] = q.to_array();
        let r = q.norm();
        if r == 0.0 {
            return Err(Error::Domain("origin has no spherical coordinates"));
        }
        // atan2 forms of θ1 = asin(u4/r) and θ2 = asin(u3/(r cos θ1)); they
        // stay accurate next to the poles where asin loses half its digits.
        let rho3 = (a * a + b * b + c * c).sqrt();
        let theta1 = d.atan2(rho3);
        let (mut theta2, mut theta3) = (0.0, 0.0);
        if rho3 > POLE_THRESHOLD * r {
            let rho2 = (a * a + b * b).sqrt();
            theta2 = c.atan2(rho2);
            if rho2 > POLE_THRESHOLD * rho3 {
                theta3 = b.atan2(a);
                if theta3 == -PI {
                    theta3 = PI;
                }
            }
        }
        Ok(Self {
            r,
            theta1,
            theta2,
            theta3,
        })
    }

    pub fn to_cartesian(&self) -> Quaternion {
        let [a, b, c, d] = cartesian_components(self.r, self.theta1, self.theta2, self.theta3);
        Quaternion::raw(a, b, c, d)
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn theta1(&self) -> f64 {
        self.theta1
    }

    pub fn theta2(&self) -> f64 {
        self.theta2
    }

    pub fn theta3(&self) -> f64 {
        self.theta3
    }

    pub fn angles(&self) -> [f64; 3] {
        [self.theta1, self.theta2, self.theta3]
    }
}
