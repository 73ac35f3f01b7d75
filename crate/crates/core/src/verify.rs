//! Seeded randomized cross-checks of the whole library, reported as the
//! worst deviation seen per check.

use std::f64::consts::{PI, TAU};
use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::cycle::{fundamental_domain, log_eta, shift_cycle, TimeQuaternion};
use crate::hyperspherical::HypersphericalCoords;
use crate::log::{log_branch, log_principal};
use crate::oracle::{exp_series_oracle, to_matrix4, SERIES_TERMS};
use crate::quaternion::Quaternion;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub name: &'static str,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.max_deviation <= self.tolerance
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<28} max_deviation={:<24e} tolerance={:e} {}",
            self.name,
            self.max_deviation,
            self.tolerance,
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

fn uniform_quaternion(rng: &mut StdRng, half_width: f64) -> Quaternion {
    let c: [f64; 4] = std::array::from_fn(|_| rng.random_range(-half_width..half_width));
    Quaternion::try_from(c).expect("finite sample")
}

fn nonzero_quaternion(rng: &mut StdRng, half_width: f64) -> Quaternion {
    loop {
        let q = uniform_quaternion(rng, half_width);
        if q.norm() > 1e-9 {
            return q;
        }
    }
}

struct Worst(f64);

impl Worst {
    fn see(&mut self, x: f64) {
        // NaN must surface as a failure.
        if x.is_nan() || x > self.0 {
            self.0 = x;
        }
    }
}

/// Runs every check on `samples` random inputs drawn from a generator
/// seeded with `seed`.
pub fn run_suite(samples: usize, seed: u64) -> Vec<CheckReport> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut series = Worst(0.0);
    let mut matrix = Worst(0.0);
    let mut norm_law = Worst(0.0);
    let mut periodic = Worst(0.0);
    let mut log_inv = Worst(0.0);
    let mut log_round = Worst(0.0);
    let mut coords = Worst(0.0);
    let mut theorem = Worst(0.0);
    let mut fundamental = Worst(0.0);

    for _ in 0..samples {
        let q = uniform_quaternion(&mut rng, 3.0);
        let e = q.exp();
        series.see(e.relative_error(&exp_series_oracle(q, SERIES_TERMS)));
        matrix.see(to_matrix4(e).max_abs_diff(&to_matrix4(q).exp()));
        norm_law.see((e.norm() - q.q1().exp()).abs() / q.q1().exp());

        let len = q.vector_norm();
        if len > 0.0 {
            let k = rng.random_range(-3i64..=3);
            let stretched = (len + TAU * k as f64) / len;
            let v = q.vector_part().map(|c| c * stretched);
            let shifted = Quaternion::from_parts(q.q1(), v).unwrap();
            periodic.see(shifted.exp().max_abs_diff(&e));
        }

        let x = nonzero_quaternion(&mut rng, 3.0);
        let k = rng.random_range(-3i64..=3);
        let l = log_branch(x, k).expect("nonzero");
        log_inv.see(l.value.exp().relative_error(&x));

        let angle = rng.random_range(0.01..PI - 0.01);
        let dir = nonzero_quaternion(&mut rng, 1.0);
        let dir_len = dir.vector_norm();
        if dir_len > 1e-6 {
            let v = dir.vector_part().map(|c| c * angle / dir_len);
            let w = Quaternion::from_parts(rng.random_range(-3.0..3.0), v).unwrap();
            log_round.see(log_principal(w.exp()).unwrap().value.max_abs_diff(&w));
        }

        let c = nonzero_quaternion(&mut rng, 10.0);
        let back = HypersphericalCoords::from_cartesian(c)
            .unwrap()
            .to_cartesian();
        coords.see(back.max_abs_diff(&c));

        let tq = TimeQuaternion::new(
            rng.random_range(-5.0..5.0),
            rng.random_range(-10.0 * PI..10.0 * PI),
            rng.random_range(-3.0..3.0),
            rng.random_range(-3.0..3.0),
            rng.random_range(-3.0..3.0),
        )
        .unwrap();
        let base = log_eta(&tq);
        for k in -5..=5 {
            theorem.see(base.canonical_distance(&log_eta(&shift_cycle(&tq, k))));
        }

        let wide = TimeQuaternion::new(
            tq.time().t(),
            rng.random_range(-100.0 * PI..100.0 * PI),
            tq.x(),
            tq.y(),
            tq.z(),
        )
        .unwrap();
        let f = fundamental_domain(&wide);
        let tau = f.time().tau();
        let in_range = tau > -PI && tau <= PI;
        let idempotent = fundamental_domain(&f) == f;
        fundamental.see(if in_range && idempotent {
            0.0
        } else {
            f64::INFINITY
        });
        fundamental.see(log_eta(&wide).canonical_distance(&log_eta(&f)));
    }

    vec![
        CheckReport {
            name: "exp_vs_series_oracle",
            max_deviation: series.0,
            tolerance: 1e-11,
        },
        CheckReport {
            name: "exp_vs_matrix_oracle",
            max_deviation: matrix.0,
            tolerance: 1e-10,
        },
        CheckReport {
            name: "exp_norm_law",
            max_deviation: norm_law.0,
            tolerance: 1e-12,
        },
        CheckReport {
            name: "exp_hyper_periodicity",
            max_deviation: periodic.0,
            tolerance: 1e-10,
        },
        CheckReport {
            name: "log_branch_inversion",
            max_deviation: log_inv.0,
            tolerance: 1e-10,
        },
        CheckReport {
            name: "log_principal_round_trip",
            max_deviation: log_round.0,
            tolerance: 1e-10,
        },
        CheckReport {
            name: "spherical_round_trip",
            max_deviation: coords.0,
            tolerance: 1e-10,
        },
        CheckReport {
            name: "cycle_shift_invariance",
            max_deviation: theorem.0,
            tolerance: 1e-10,
        },
        CheckReport {
            name: "fundamental_domain",
            max_deviation: fundamental.0,
            tolerance: 1e-10,
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let reports = run_suite(200, 7);
        assert_eq!(reports.len(), 9);
        for r in &reports {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn nan_is_a_failure() {
        let mut w = Worst(0.0);
        w.see(f64::NAN);
        w.see(1.0);
        let r = CheckReport {
            name: "x",
            max_deviation: w.0,
            tolerance: 1.0,
        };
        assert!(!r.passed());
    }
}
