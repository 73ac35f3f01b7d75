//! Complexified-time quaternions and their logarithmic cycles.
//!
//! A [`TimeQuaternion`] is `(t + τI) + x i + y j + z k`, where `I` is an
//! imaginary unit commuting with `i, j, k`. Its logarithmic form
//! ([`LogEta`]) keeps
//!
//! * `t`, the real log of `|e^{t+τI}| = e^t`, in which `τ` does not appear,
//! * the phase `τ` reduced into `(-π, π]`,
//! * the hyperspherical angles of the unit direction `e^{x i + y j + z k}`,
//!
//! plus the whole turns removed along the way. A cycle shift advances `τ`
//! and the spatial direction by the same number of turns, which changes the
//! turn counts but none of the canonical fields.

use std::f64::consts::{PI, TAU};
use std::fmt;

use crate::error::{check_finite, Result};
use crate::hyperspherical::{circular_distance, wrap_angle, HypersphericalCoords};
use crate::quaternion::{Real, UnitQuaternion};

/// Default tolerance for [`cycle_equivalent`] used by the command line.
pub const DEFAULT_CYCLE_TOLERANCE: f64 = 1e-10;

/// `t + τI` with a commuting imaginary unit `I`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexScalar {
    t: f64,
    tau: f64,
}

impl ComplexScalar {
    pub fn new(t: f64, tau: f64) -> Result<Self> {
        Ok(Self {
            t: check_finite("t", t)?,
            tau: check_finite("tau", tau)?,
        })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }
}

/// `e^{t+τI}` in polar form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polar {
    pub modulus: f64,
    /// In `(-π, π]`.
    pub phase: f64,
}

/// `e^{t+τI} = e^t (cos τ + I sin τ)`.
pub fn complex_exp_scalar(c: ComplexScalar) -> Polar {
    Polar {
        modulus: c.t.exp(),
        phase: wrap_angle(c.tau).0,
    }
}

/// `η = (t + τI) + x i + y j + z k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeQuaternion {
    time: ComplexScalar,
    x: f64,
    y: f64,
    z: f64,
}

/// Packs a time coordinate and a position into a [`TimeQuaternion`].
pub fn eta(time: ComplexScalar, x: f64, y: f64, z: f64) -> Result<TimeQuaternion> {
    Ok(TimeQuaternion {
        time,
        x: check_finite("x", x)?,
        y: check_finite("y", y)?,
        z: check_finite("z", z)?,
    })
}

impl TimeQuaternion {
    /// Shorthand for `eta(ComplexScalar::new(t, tau)?, x, y, z)`.
    pub fn new(t: f64, tau: f64, x: f64, y: f64, z: f64) -> Result<Self> {
        eta(ComplexScalar::new(t, tau)?, x, y, z)
    }

    pub fn time(&self) -> ComplexScalar {
        self.time
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn spatial(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl fmt::Display for TimeQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {}",
            Real(self.time.t),
            Real(self.time.tau),
            Real(self.x),
            Real(self.y),
            Real(self.z)
        )
    }
}

/// Canonical logarithmic form of a [`TimeQuaternion`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogEta {
    pub t: f64,
    pub tau_phase: f64,
    pub theta1: f64,
    pub theta2: f64,
    pub theta3: f64,
    /// Turns removed from `τ`, `θ1`, `θ2`, `θ3`.
    pub wrap_counts: [i64; 4],
}

impl LogEta {
    /// `[t, tau_phase, theta1, theta2, theta3]`.
    pub fn canonical(&self) -> [f64; 5] {
        [
            self.t,
            self.tau_phase,
            self.theta1,
            self.theta2,
            self.theta3,
        ]
    }

    /// Largest per-field distance between the canonical fields. The phase
    /// and the azimuth `θ3` are compared on the circle.
    pub fn canonical_distance(&self, other: &Self) -> f64 {
        [
            (self.t - other.t).abs(),
            circular_distance(self.tau_phase, other.tau_phase),
            (self.theta1 - other.theta1).abs(),
            (self.theta2 - other.theta2).abs(),
            circular_distance(self.theta3, other.theta3),
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

impl fmt::Display for LogEta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [kt, k1, k2, k3] = self.wrap_counts;
        write!(
            f,
            "t={} tau_phase={} theta1={} theta2={} theta3={} wraps=({},{},{},{})",
            Real(self.t),
            Real(self.tau_phase),
            Real(self.theta1),
            Real(self.theta2),
            Real(self.theta3),
            kt,
            k1,
            k2,
            k3
        )
    }
}

/// Decomposes a spatial vector as `v = axis · (θ + 2π·turns)` with
/// `θ ∈ [0, π]`, so `e^v = cos θ + axis sin θ`.
///
/// `turns` counts complete loops of the direction around its great circle
/// and is the quantity a cycle shift advances. When `θ` is (numerically)
/// zero the sign of the axis is ambiguous; the axis whose first nonzero
/// component is positive is chosen, and a zero vector gets axis `i`.
pub fn spatial_turns(v: [f64; 3]) -> ([f64; 3], i64) {
    let len = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    if len == 0.0 {
        return ([1.0, 0.0, 0.0], 0);
    }
    let unit = v.map(|c| c / len);
    let whole = (len / TAU).floor();
    let rem = len - whole * TAU;
    let slack = 8.0 * f64::EPSILON * len.max(1.0);

    if rem <= slack || TAU - rem <= slack {
        let turns = (len / TAU).round() as i64;
        let positive = unit.iter().find(|c| **c != 0.0).is_some_and(|c| *c > 0.0);
        return if positive {
            (unit, turns)
        } else {
            (unit.map(|c| -c), -turns)
        };
    }
    if rem <= PI {
        (unit, whole as i64)
    } else {
        (unit.map(|c| -c), -(whole as i64) - 1)
    }
}

/// The logarithmic form of `η`.
pub fn log_eta(q: &TimeQuaternion) -> LogEta {
    let (tau_phase, tau_turns) = wrap_angle(q.time.tau);
    let direction = UnitQuaternion::exp_pure(q.spatial())
        .expect("exponential of a finite pure vector has unit norm");
    let angles = HypersphericalCoords::from_cartesian(direction.quaternion())
        .expect("unit quaternion is nonzero");
    let (_, turns) = spatial_turns(q.spatial());
    LogEta {
        // ln|e^{t+τI}| = t; τ only survives in the phase.
        t: q.time.t,
        tau_phase,
        theta1: angles.theta1(),
        theta2: angles.theta2(),
        theta3: angles.theta3(),
        wrap_counts: [tau_turns, turns, turns, turns],
    }
}

/// Advances `τ` by `2πk` and the spatial direction by `k` loops of its
/// great circle, i.e. every direction angle by `2πk`.
pub fn shift_cycle(q: &TimeQuaternion, k: i64) -> TimeQuaternion {
    if k == 0 {
        return *q;
    }
    let step = TAU * k as f64;
    let (axis, _) = spatial_turns(q.spatial());
    TimeQuaternion {
        time: ComplexScalar {
            t: q.time.t,
            tau: q.time.tau + step,
        },
        x: q.x + axis[0] * step,
        y: q.y + axis[1] * step,
        z: q.z + axis[2] * step,
    }
}

/// Whether `a` and `b` have the same logarithmic form within `tol`.
///
/// Turn counts are ignored. Transitive only up to `2·tol`.
///
/// # Panics
///
/// If `tol` is not positive.
pub fn cycle_equivalent(a: &TimeQuaternion, b: &TimeQuaternion, tol: f64) -> bool {
    assert!(tol > 0.0, "tolerance must be positive");
    log_eta(a).canonical_distance(&log_eta(b)) <= tol
}

/// The member of the cycle orbit of `q` whose `τ` lies in `(-π, π]`.
pub fn fundamental_domain(q: &TimeQuaternion) -> TimeQuaternion {
    let (_, turns) = wrap_angle(q.time.tau);
    shift_cycle(q, -turns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{E, FRAC_PI_2, LN_2};

    fn tq(t: f64, tau: f64, x: f64, y: f64, z: f64) -> TimeQuaternion {
        TimeQuaternion::new(t, tau, x, y, z).unwrap()
    }

    #[test]
    fn eta_packs_fields() {
        let q = eta(ComplexScalar::new(0.0, PI).unwrap(), 1.0, 2.0, 3.0).unwrap();
        assert_eq!((q.time().t(), q.time().tau()), (0.0, PI));
        assert_eq!(q.spatial(), [1.0, 2.0, 3.0]);
        assert!(ComplexScalar::new(f64::NAN, 0.0).is_err());
        assert!(TimeQuaternion::new(0.0, 0.0, f64::INFINITY, 0.0, 0.0).is_err());
    }

    #[test]
    fn complex_exp_examples() {
        let p = complex_exp_scalar(ComplexScalar::new(0.0, 0.0).unwrap());
        assert_eq!(
            p,
            Polar {
                modulus: 1.0,
                phase: 0.0
            }
        );

        let p = complex_exp_scalar(ComplexScalar::new(LN_2, TAU).unwrap());
        assert!((p.modulus - 2.0).abs() < 1e-15);
        assert_eq!(p.phase, 0.0);

        let p = complex_exp_scalar(ComplexScalar::new(1.0, PI / 3.0 + 2.0 * TAU).unwrap());
        assert!((p.modulus - E).abs() < 1e-15);
        assert!((p.phase - PI / 3.0).abs() < 1e-14);
    }

    #[test]
    fn log_eta_examples() {
        let l = log_eta(&tq(0.0, 0.0, 0.0, 0.0, 0.0));
        assert_eq!(l.canonical(), [0.0; 5]);
        assert_eq!(l.wrap_counts, [0; 4]);

        let l = log_eta(&tq(2.0, TAU, 0.0, 0.0, 0.0));
        assert_eq!((l.t, l.tau_phase), (2.0, 0.0));
        assert_eq!(l.wrap_counts, [1, 0, 0, 0]);

        // e^{(π/2) i} = i, whose angles are (0, 0, π/2).
        let l = log_eta(&tq(1.0, 0.3, FRAC_PI_2, 0.0, 0.0));
        assert_eq!((l.t, l.tau_phase), (1.0, 0.3));
        let expected = [0.0, 0.0, FRAC_PI_2];
        for (a, b) in [l.theta1, l.theta2, l.theta3].iter().zip(expected) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn spatial_turns_decomposition() {
        assert_eq!(spatial_turns([0.0; 3]), ([1.0, 0.0, 0.0], 0));
        assert_eq!(spatial_turns([1.0, 0.0, 0.0]), ([1.0, 0.0, 0.0], 0));
        // 1.5π along i is θ = π/2 about -i, one turn back.
        assert_eq!(spatial_turns([1.5 * PI, 0.0, 0.0]), ([-1.0, 0.0, 0.0], -1));
        assert_eq!(spatial_turns([0.0, 2.5 * PI, 0.0]), ([0.0, 1.0, 0.0], 1));
        // θ = 0 lattice points pick the positive axis.
        assert_eq!(spatial_turns([TAU, 0.0, 0.0]), ([1.0, 0.0, 0.0], 1));
        assert_eq!(spatial_turns([-TAU, 0.0, 0.0]), ([1.0, 0.0, 0.0], -1));
    }

    #[test]
    fn shift_examples() {
        let q = tq(0.5, 0.3, 1.0, -2.0, 0.7);
        assert_eq!(shift_cycle(&q, 0), q);

        let q = tq(0.0, 0.3, 1.0, 0.0, 0.0);
        let s = shift_cycle(&q, 1);
        assert_eq!(s.time().tau(), 0.3 + TAU);
        assert_eq!(s.spatial(), [1.0 + TAU, 0.0, 0.0]);
        let (a, b) = (log_eta(&q), log_eta(&s));
        assert!(a.canonical_distance(&b) < 1e-14);
        assert_eq!(b.wrap_counts, [1, 1, 1, 1]);

        // Zero position: the shift runs along the conventional axis i.
        let s = shift_cycle(&tq(0.0, 0.0, 0.0, 0.0, 0.0), -2);
        assert_eq!(s.spatial(), [-2.0 * TAU, 0.0, 0.0]);
        assert_eq!(log_eta(&s).wrap_counts, [-2, -2, -2, -2]);
    }

    #[test]
    fn equivalence_examples() {
        let q = tq(1.0, 0.3, 1.0, 2.0, 3.0);
        assert!(cycle_equivalent(&q, &q, 1e-12));
        for k in -3..=3 {
            assert!(cycle_equivalent(&q, &shift_cycle(&q, k), 1e-10), "k={k}");
        }
        let other = tq(1.0, 0.4, 1.0, 2.0, 3.0);
        assert!(!cycle_equivalent(&q, &other, 1e-6));
    }

    #[test]
    fn phase_compared_on_circle() {
        let a = tq(0.0, PI - 1e-12, 0.2, 0.0, 0.0);
        let b = tq(0.0, -PI + 1e-12, 0.2, 0.0, 0.0);
        assert!(cycle_equivalent(&a, &b, 1e-10));
    }

    #[test]
    #[should_panic]
    fn equivalence_needs_positive_tolerance() {
        let q = tq(0.0, 0.0, 0.0, 0.0, 0.0);
        cycle_equivalent(&q, &q, 0.0);
    }

    #[test]
    fn fundamental_domain_examples() {
        let q = fundamental_domain(&tq(0.0, PI + TAU, 1.0, 0.0, 0.0));
        assert_eq!(q.time().tau(), PI);
        let q = fundamental_domain(&tq(0.0, 3.0 * PI, 1.0, 0.0, 0.0));
        assert!((q.time().tau() - PI).abs() < 1e-15);
        assert!(q.time().tau() > 0.0);
        let q = tq(0.0, 0.5, 1.0, 0.0, 0.0);
        assert_eq!(fundamental_domain(&q), q);
        let q = fundamental_domain(&tq(0.0, -PI, 0.0, 0.0, 0.0));
        assert_eq!(q.time().tau(), PI);
    }

    fn time_quaternion() -> impl Strategy<Value = TimeQuaternion> {
        (
            -5.0..5.0f64,
            -10.0 * PI..10.0 * PI,
            prop::array::uniform3(-3.0..3.0f64),
        )
            .prop_map(|(t, tau, [x, y, z])| tq(t, tau, x, y, z))
    }

    proptest! {
        #[test]
        fn shift_preserves_canonical_log(q in time_quaternion(), k in -5i64..=5) {
            let d = log_eta(&q).canonical_distance(&log_eta(&shift_cycle(&q, k)));
            prop_assert!(d <= 1e-10, "distance {}", d);
        }

        #[test]
        fn modulus_forgets_tau(t in -50.0..50.0f64, tau in -1e3..1e3f64) {
            let p = complex_exp_scalar(ComplexScalar::new(t, tau).unwrap());
            prop_assert!((p.modulus.ln() - t).abs() <= 1e-12 * t.abs().max(1.0));
            prop_assert!(p.phase > -PI && p.phase <= PI);
        }

        #[test]
        fn shift_advances_every_turn_count_together(q in time_quaternion(), k in -5i64..=5) {
            let before = log_eta(&q);
            let (_, turns) = spatial_turns(q.spatial());
            let len = q.spatial().iter().map(|c| c * c).sum::<f64>().sqrt();
            let rot = (len - turns as f64 * TAU).abs();
            // Interior only: away from the rotation-angle ends 0 and π, the
            // phase boundary, and the hyperspherical poles and seam.
            prop_assume!(rot > 1e-6 && rot < PI - 1e-6);
            prop_assume!((before.tau_phase.abs() - PI).abs() > 1e-6);
            prop_assume!(before.theta1.abs() < FRAC_PI_2 - 1e-6);
            prop_assume!(before.theta2.abs() < FRAC_PI_2 - 1e-6);
            prop_assume!((before.theta3.abs() - PI).abs() > 1e-6);

            let after = log_eta(&shift_cycle(&q, k));
            for (a, b) in after.wrap_counts.iter().zip(before.wrap_counts) {
                prop_assert_eq!(a - b, k);
            }
        }

        #[test]
        fn equivalence_is_reflexive_and_symmetric(
            a in time_quaternion(), b in time_quaternion(), tol in 1e-12..10.0f64,
        ) {
            prop_assert!(cycle_equivalent(&a, &a, tol));
            prop_assert_eq!(cycle_equivalent(&a, &b, tol), cycle_equivalent(&b, &a, tol));
        }

        #[test]
        fn equivalence_is_transitive_within_twice_tol(
            a in time_quaternion(), b in time_quaternion(), c in time_quaternion(),
            tol in 1e-3..5.0f64,
        ) {
            if cycle_equivalent(&a, &b, tol) && cycle_equivalent(&b, &c, tol) {
                prop_assert!(cycle_equivalent(&a, &c, 2.0 * tol));
            }
        }

        #[test]
        fn fundamental_domain_is_idempotent(
            q in (-5.0..5.0f64, -100.0 * PI..100.0 * PI, prop::array::uniform3(-3.0..3.0f64))
                .prop_map(|(t, tau, [x, y, z])| tq(t, tau, x, y, z))
        ) {
            let f = fundamental_domain(&q);
            let tau = f.time().tau();
            prop_assert!(tau > -PI && tau <= PI);
            prop_assert_eq!(fundamental_domain(&f), f);
            prop_assert!(cycle_equivalent(&q, &f, 1e-10));
        }
    }
}
