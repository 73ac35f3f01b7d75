//! Real quaternions `q1 + q2 i + q3 j + q4 k` with the Hamilton product
//! (`ij = k`, `jk = i`, `ki = j`) and the closed-form exponential.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{check_finite, Error, Result};

/// Below this magnitude `sin(x)/x` switches to its Taylor polynomial.
pub const SINC_TAYLOR_THRESHOLD: f64 = 1e-8;

/// Allowed deviation of a [`UnitQuaternion`]'s norm from 1.
pub const UNIT_NORM_TOLERANCE: f64 = 1e-12;

/// `sin(x)/x`, continuous at zero.
pub fn sinc(x: f64) -> f64 {
    if x.abs() < SINC_TAYLOR_THRESHOLD {
        let x2 = x * x;
        1.0 - x2 / 6.0 + x2 * x2 / 120.0
    } else {
        x.sin() / x
    }
}

/// A quaternion with finite real components.
///
/// `q1` is the scalar part and `(q2, q3, q4)` are the coefficients of
/// `i`, `j`, `k`. The checked constructors refuse NaN and infinities;
/// arithmetic on finite values can still overflow, as with `f64`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    q1: f64,
    q2: f64,
    q3: f64,
    q4: f64,
}

impl Quaternion {
    pub const ZERO: Self = Self::raw(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Self = Self::raw(1.0, 0.0, 0.0, 0.0);
    pub const I: Self = Self::raw(0.0, 1.0, 0.0, 0.0);
    pub const J: Self = Self::raw(0.0, 0.0, 1.0, 0.0);
    pub const K: Self = Self::raw(0.0, 0.0, 0.0, 1.0);

    pub fn new(q1: f64, q2: f64, q3: f64, q4: f64) -> Result<Self> {
        Ok(Self::raw(
            check_finite("q1", q1)?,
            check_finite("q2", q2)?,
            check_finite("q3", q3)?,
            check_finite("q4", q4)?,
        ))
    }

    /// Builds `scalar + vector[0] i + vector[1] j + vector[2] k`.
    pub fn from_parts(scalar: f64, vector: [f64; 3]) -> Result<Self> {
        Self::new(scalar, vector[0], vector[1], vector[2])
    }

    pub(crate) const fn raw(q1: f64, q2: f64, q3: f64, q4: f64) -> Self {
        Self { q1, q2, q3, q4 }
    }

    pub(crate) const fn raw_parts(scalar: f64, v: [f64; 3]) -> Self {
        Self::raw(scalar, v[0], v[1], v[2])
    }

    #[inline]
    pub fn q1(&self) -> f64 {
        self.q1
    }

    #[inline]
    pub fn q2(&self) -> f64 {
        self.q2
    }

    #[inline]
    pub fn q3(&self) -> f64 {
        self.q3
    }

    #[inline]
    pub fn q4(&self) -> f64 {
        self.q4
    }

    pub fn to_array(self) -> [f64; 4] {
        [self.q1, self.q2, self.q3, self.q4]
    }

    pub fn scalar_part(&self) -> f64 {
        self.q1
    }

    pub fn vector_part(&self) -> [f64; 3] {
        [self.q2, self.q3, self.q4]
    }

    /// Euclidean length of the vector part.
    pub fn vector_norm(&self) -> f64 {
        (self.q2 * self.q2 + self.q3 * self.q3 + self.q4 * self.q4).sqrt()
    }

    pub fn norm_squared(&self) -> f64 {
        self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3 + self.q4 * self.q4
    }

    pub fn norm(&self) -> f64 {
        self.norm_squared().sqrt()
    }

    pub fn conj(self) -> Self {
        Self::raw(self.q1, -self.q2, -self.q3, -self.q4)
    }

    pub fn inverse(self) -> Result<Self> {
        let n2 = self.norm_squared();
        if n2 == 0.0 {
            return Err(Error::Domain("zero quaternion has no inverse"));
        }
        Ok(self.conj() / n2)
    }

    /// The Hamilton product `self * rhs`.
    pub fn hamilton(self, rhs: Self) -> Self {
        let (a1, a2, a3, a4) = (self.q1, self.q2, self.q3, self.q4);
        let (b1, b2, b3, b4) = (rhs.q1, rhs.q2, rhs.q3, rhs.q4);
        Self::raw(
            a1 * b1 - a2 * b2 - a3 * b3 - a4 * b4,
            a1 * b2 + a2 * b1 + a3 * b4 - a4 * b3,
            a1 * b3 - a2 * b4 + a3 * b1 + a4 * b2,
            a1 * b4 + a2 * b3 - a3 * b2 + a4 * b1,
        )
    }

    /// `e^q = e^{q1} (cos|v| + v sin|v|/|v|)` where `v` is the vector part.
    ///
    /// The result has norm `e^{q1}`; a zero vector part gives the real
    /// exponential exactly.
    pub fn exp(self) -> Self {
        let angle = self.vector_norm();
        let scale = self.q1.exp();
        let s = scale * sinc(angle);
        Self::raw(scale * angle.cos(), s * self.q2, s * self.q3, s * self.q4)
    }

    /// Largest absolute componentwise difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `|self - reference| / |reference|`, or the absolute distance when the
    /// reference is zero.
    pub fn relative_error(&self, reference: &Self) -> f64 {
        let d = (*self - *reference).norm();
        let n = reference.norm();
        if n > 0.0 {
            d / n
        } else {
            d
        }
    }
}

impl TryFrom<[f64; 4]> for Quaternion {
    type Error = Error;

    fn try_from(c: [f64; 4]) -> Result<Self> {
        Self::new(c[0], c[1], c[2], c[3])
    }
}

impl From<Quaternion> for [f64; 4] {
    fn from(q: Quaternion) -> Self {
        q.to_array()
    }
}

impl Mul for Quaternion {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.hamilton(rhs)
    }
}

impl Mul<f64> for Quaternion {
    type Output = Self;

    fn mul(self, s: f64) -> Self {
        Self::raw(self.q1 * s, self.q2 * s, self.q3 * s, self.q4 * s)
    }
}

impl Div<f64> for Quaternion {
    type Output = Self;

    fn div(self, s: f64) -> Self {
        Self::raw(self.q1 / s, self.q2 / s, self.q3 / s, self.q4 / s)
    }
}

impl Add for Quaternion {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::raw(
            self.q1 + rhs.q1,
            self.q2 + rhs.q2,
            self.q3 + rhs.q3,
            self.q4 + rhs.q4,
        )
    }
}

impl Sub for Quaternion {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::raw(
            self.q1 - rhs.q1,
            self.q2 - rhs.q2,
            self.q3 - rhs.q3,
            self.q4 - rhs.q4,
        )
    }
}

impl Neg for Quaternion {
    type Output = Self;

    fn neg(self) -> Self {
        Self::raw(-self.q1, -self.q2, -self.q3, -self.q4)
    }
}

/// Shortest round-trip text for an `f64`: plain decimal for moderate
/// magnitudes, exponent form below `1e-5` or from `1e16` up.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Real(pub f64);

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.0.abs();
        if a == 0.0 || !a.is_finite() || (1e-5..1e16).contains(&a) {
            write!(f, "{}", self.0)
        } else {
            write!(f, "{:e}", self.0)
        }
    }
}

/// Space separated components, each formatted with [`Real`].
impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {}",
            Real(self.q1),
            Real(self.q2),
            Real(self.q3),
            Real(self.q4)
        )
    }
}

/// A quaternion of norm 1 (within [`UNIT_NORM_TOLERANCE`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitQuaternion(Quaternion);

impl UnitQuaternion {
    pub fn new(q: Quaternion) -> Result<Self> {
        let norm = q.norm();
        if (norm - 1.0).abs() <= UNIT_NORM_TOLERANCE {
            Ok(Self(q))
        } else {
            Err(Error::NotUnit {
                norm,
                tolerance: UNIT_NORM_TOLERANCE,
            })
        }
    }

    /// `e^v` for a pure vector `v`: the direction factor
    /// `cos|v| + v sin|v|/|v|`.
    pub fn exp_pure(v: [f64; 3]) -> Result<Self> {
        let v = Quaternion::from_parts(0.0, v)?;
        Self::new(v.exp())
    }

    pub fn quaternion(&self) -> Quaternion {
        self.0
    }
}

impl From<UnitQuaternion> for Quaternion {
    fn from(u: UnitQuaternion) -> Self {
        u.0
    }
}
