//! Independent routes to `e^q` used to cross-check [`Quaternion::exp`].
//!
//! Two oracles are provided. The power series sums `q^n / n!` with repeated
//! Hamilton products. The matrix route maps `q` to its 4x4 left
//! multiplication matrix and exponentiates that by scaling and squaring, so
//! it never touches the quaternion product at all.

use std::ops::Mul;

use crate::quaternion::Quaternion;

/// Number of series terms the verification suites use.
pub const SERIES_TERMS: usize = 60;

/// Kahan-compensated running sum of quaternions.
#[derive(Debug, Default, Clone, Copy)]
struct CompensatedSum {
    sum: [f64; 4],
    carry: [f64; 4],
}

impl CompensatedSum {
    fn add(&mut self, term: [f64; 4]) {
        for ((s, c), x) in self.sum.iter_mut().zip(&mut self.carry).zip(term) {
            let y = x - *c;
            let t = *s + y;
            *c = (t - *s) - y;
            *s = t;
        }
    }
}

/// Partial sum `sum_{n < terms} q^n / n!`.
///
/// For `|q| <= 10` and 60 terms the truncation error is far below `1e-13`.
///
/// # Panics
///
/// If `terms` is zero.
pub fn exp_series_oracle(q: Quaternion, terms: usize) -> Quaternion {
    assert!(terms >= 1, "series needs at least one term");
    let mut acc = CompensatedSum::default();
    let mut term = Quaternion::ONE;
    acc.add(term.to_array());
    for n in 1..terms {
        term = (term * q) / n as f64;
        acc.add(term.to_array());
    }
    let [a, b, c, d] = acc.sum;
    Quaternion::raw(a, b, c, d)
}

/// Dense row-major 4x4 real matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix4(pub [[f64; 4]; 4]);

impl Matrix4 {
    pub const IDENTITY: Self = Self([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ]);

    fn scaled(&self, s: f64) -> Self {
        Self(self.0.map(|row| row.map(|x| x * s)))
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.0;
        for (row, orow) in out.iter_mut().zip(&other.0) {
            for (x, y) in row.iter_mut().zip(orow) {
                *x += y;
            }
        }
        Self(out)
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        self.0
            .iter()
            .map(|row| row.iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// First column. For a left-multiplication matrix `M(q)` this is `q`.
    pub fn first_column(&self) -> [f64; 4] {
        [self.0[0][0], self.0[1][0], self.0[2][0], self.0[3][0]]
    }

    /// Matrix exponential by scaling and squaring a truncated Taylor series.
    pub fn exp(&self) -> Self {
        let norm = self.norm_inf();
        let squarings = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as i32
        } else {
            0
        };
        let a = self.scaled(0.5f64.powi(squarings));

        // ||a|| <= 0.5, so 24 terms leave a remainder below 1e-30.
        let mut sum = Self::IDENTITY;
        let mut term = Self::IDENTITY;
        for n in 1..=24 {
            term = (term * a).scaled(1.0 / n as f64);
            sum = sum.add(&term);
        }
        for _ in 0..squarings {
            sum = sum * sum;
        }
        sum
    }
}

impl Mul for Matrix4 {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = (0..4).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        Self(out)
    }
}

/// Left-multiplication matrix: `to_matrix4(a) * p == a * p` as 4-vectors,
/// hence `to_matrix4(a * b) == to_matrix4(a) * to_matrix4(b)`.
pub fn to_matrix4(q: Quaternion) -> Matrix4 {
    let [a, b, c, d] = q.to_array();
    Matrix4([[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]])
}

/// `e^q` read off the first column of `exp(M(q))`.
pub fn exp_matrix_oracle(q: Quaternion) -> Quaternion {
    let [a, b, c, d] = to_matrix4(q).exp().first_column();
    Quaternion::raw(a, b, c, d)
}
