//! Command-line front end.
//!
//! Exit codes: 0 success or equivalent, 1 not equivalent (or a failed
//! `verify`), 2 bad arguments, 3 domain error, 4 I/O error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::cycle::{log_eta, shift_cycle, TimeQuaternion, DEFAULT_CYCLE_TOLERANCE};
use crate::error::Error as CoreError;
use crate::hyperspherical::HypersphericalCoords;
use crate::log::log_branch;
use crate::oracle::{exp_matrix_oracle, exp_series_oracle, SERIES_TERMS};
use crate::quaternion::{Quaternion, Real};
use crate::verify::run_suite;

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_NOT_EQUIVALENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Bit-exact header of the `sweep` CSV.
pub const SWEEP_HEADER: &str =
    "k,tau_input,t_canonical,tau_phase,theta1,theta2,theta3,max_abs_diff_vs_k0";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Core(CoreError::NonFinite { .. }) => EXIT_USAGE,
            CliError::Core(_) => EXIT_DOMAIN,
            CliError::Io { .. } | CliError::Csv { .. } => EXIT_IO,
        }
    }
}

fn finite_f64(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("`{s}` is not a finite number"))
    }
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let x = finite_f64(s)?;
    if x > 0.0 {
        Ok(x)
    } else {
        Err(format!("`{s}` must be positive"))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "logcycle",
    version,
    about = "Quaternion exp/log, 4D spherical coordinates and complexified-time cycles"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
#[command(allow_negative_numbers = true)]
struct QuaternionArgs {
    #[arg(value_parser = finite_f64)]
    q1: f64,
    #[arg(value_parser = finite_f64)]
    q2: f64,
    #[arg(value_parser = finite_f64)]
    q3: f64,
    #[arg(value_parser = finite_f64)]
    q4: f64,
}

impl QuaternionArgs {
    fn quaternion(&self) -> Result<Quaternion, CoreError> {
        Quaternion::new(self.q1, self.q2, self.q3, self.q4)
    }
}

#[derive(Debug, clap::Args)]
#[command(allow_negative_numbers = true)]
struct EtaArgs {
    #[arg(value_parser = finite_f64)]
    t: f64,
    #[arg(value_parser = finite_f64)]
    tau: f64,
    #[arg(value_parser = finite_f64)]
    x: f64,
    #[arg(value_parser = finite_f64)]
    y: f64,
    #[arg(value_parser = finite_f64)]
    z: f64,
}

impl EtaArgs {
    fn eta(&self) -> Result<TimeQuaternion, CoreError> {
        TimeQuaternion::new(self.t, self.tau, self.x, self.y, self.z)
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Quaternion exponential.
    #[command(allow_negative_numbers = true)]
    Exp {
        #[command(flatten)]
        q: QuaternionArgs,
        /// Also evaluate the power-series and matrix oracles.
        #[arg(long)]
        verify: bool,
    },
    /// Quaternion logarithm on branch k.
    #[command(allow_negative_numbers = true)]
    Log {
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        k: i64,
        #[command(flatten)]
        q: QuaternionArgs,
    },
    /// Cartesian to (r, theta1, theta2, theta3), or back with --inverse.
    #[command(allow_negative_numbers = true)]
    Spherical {
        /// Read r theta1 theta2 theta3 and print the Cartesian components.
        #[arg(long)]
        inverse: bool,
        #[arg(num_args = 4, value_parser = finite_f64, required = true)]
        values: Vec<f64>,
    },
    /// Logarithmic form of (t + tau I) + x i + y j + z k.
    #[command(name = "eta-log", allow_negative_numbers = true)]
    EtaLog {
        #[command(flatten)]
        eta: EtaArgs,
    },
    /// Compare a point with its k-th cycle shift (or with --against).
    #[command(name = "cycle-check", allow_negative_numbers = true)]
    CycleCheck {
        #[command(flatten)]
        eta: EtaArgs,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, default_value_t = DEFAULT_CYCLE_TOLERANCE, value_parser = positive_f64)]
        tol: f64,
        /// Second point `t tau x y z`, shifted by k, to compare against.
        #[arg(
            long,
            num_args = 5,
            value_names = ["T", "TAU", "X", "Y", "Z"],
            value_parser = finite_f64,
            allow_negative_numbers = true
        )]
        against: Option<Vec<f64>>,
    },
    /// Tabulate the logarithmic form of every shift k_min..=k_max as CSV.
    #[command(allow_negative_numbers = true)]
    Sweep {
        #[command(flatten)]
        eta: EtaArgs,
        #[arg(long, allow_negative_numbers = true)]
        k_min: i64,
        #[arg(long, allow_negative_numbers = true)]
        k_max: i64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the randomized oracle suite and print the worst deviations.
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// One row of the `sweep` CSV.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRow {
    pub k: i64,
    pub tau_input: f64,
    pub t_canonical: f64,
    pub tau_phase: f64,
    pub theta1: f64,
    pub theta2: f64,
    pub theta3: f64,
    pub max_abs_diff_vs_k0: f64,
}

/// Rows for every shift in `k_min..=k_max`, ascending in `k`.
pub fn sweep_rows(q: &TimeQuaternion, k_min: i64, k_max: i64) -> Vec<SweepRow> {
    let reference = log_eta(q);
    (k_min..=k_max)
        .map(|k| {
            let shifted = shift_cycle(q, k);
            let l = log_eta(&shifted);
            SweepRow {
                k,
                tau_input: shifted.time().tau(),
                t_canonical: l.t,
                tau_phase: l.tau_phase,
                theta1: l.theta1,
                theta2: l.theta2,
                theta3: l.theta3,
                max_abs_diff_vs_k0: l.canonical_distance(&reference),
            }
        })
        .collect()
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], w: W) -> csv::Result<()> {
    let mut wtr = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w);
    for row in rows {
        wtr.serialize(row)?;
    }
    // An empty sweep still gets its header.
    if rows.is_empty() {
        wtr.write_record(SWEEP_HEADER.split(','))?;
    }
    wtr.flush()?;
    Ok(())
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                EXIT_USAGE
            } else {
                let _ = write!(out, "{}", e.render());
                EXIT_SUCCESS
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn stdout_err(source: io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Exp { q, verify } => {
            let q = q.quaternion()?;
            let e = q.exp();
            writeln!(out, "{e}").map_err(stdout_err)?;
            if verify {
                let series = exp_series_oracle(q, SERIES_TERMS);
                let matrix = exp_matrix_oracle(q);
                writeln!(out, "series_oracle {series}").map_err(stdout_err)?;
                writeln!(out, "matrix_oracle {matrix}").map_err(stdout_err)?;
                writeln!(out, "max_abs_diff_series {}", Real(e.max_abs_diff(&series)))
                    .map_err(stdout_err)?;
                writeln!(out, "max_abs_diff_matrix {}", Real(e.max_abs_diff(&matrix)))
                    .map_err(stdout_err)?;
            }
            Ok(EXIT_SUCCESS)
        }
        Command::Log { k, q } => {
            let l = log_branch(q.quaternion()?, k)?;
            writeln!(
                out,
                "{} k={} axis_defaulted={}",
                l.value, l.k, l.axis_defaulted
            )
            .map_err(stdout_err)?;
            Ok(EXIT_SUCCESS)
        }
        Command::Spherical { inverse, values } => {
            let [a, b, c, d] = <[f64; 4]>::try_from(values)
                .map_err(|_| CliError::Usage("expected four numbers".into()))?;
            if inverse {
                let (h, _) = HypersphericalCoords::from_raw_angles(a, b, c, d)?;
                writeln!(out, "{}", h.to_cartesian()).map_err(stdout_err)?;
            } else {
                let h = HypersphericalCoords::from_cartesian(Quaternion::new(a, b, c, d)?)?;
                writeln!(
                    out,
                    "{} {} {} {}",
                    Real(h.r()),
                    Real(h.theta1()),
                    Real(h.theta2()),
                    Real(h.theta3())
                )
                .map_err(stdout_err)?;
            }
            Ok(EXIT_SUCCESS)
        }
        Command::EtaLog { eta } => {
            writeln!(out, "{}", log_eta(&eta.eta()?)).map_err(stdout_err)?;
            Ok(EXIT_SUCCESS)
        }
        Command::CycleCheck {
            eta,
            k,
            tol,
            against,
        } => {
            let q = eta.eta()?;
            let other = match against {
                Some(v) => TimeQuaternion::new(v[0], v[1], v[2], v[3], v[4])?,
                None => q,
            };
            let other = shift_cycle(&other, k);
            let (la, lb) = (log_eta(&q), log_eta(&other));
            let distance = la.canonical_distance(&lb);
            let equivalent = distance <= tol;
            writeln!(out, "q        {q}").map_err(stdout_err)?;
            writeln!(out, "log q    {la}").map_err(stdout_err)?;
            writeln!(out, "q_phi    {other}").map_err(stdout_err)?;
            writeln!(out, "log q_phi {lb}").map_err(stdout_err)?;
            writeln!(out, "distance {} tol {}", Real(distance), Real(tol)).map_err(stdout_err)?;
            writeln!(
                out,
                "{}",
                if equivalent {
                    "EQUIVALENT"
                } else {
                    "NOT EQUIVALENT"
                }
            )
            .map_err(stdout_err)?;
            Ok(if equivalent {
                EXIT_SUCCESS
            } else {
                EXIT_NOT_EQUIVALENT
            })
        }
        Command::Sweep {
            eta,
            k_min,
            k_max,
            out: path,
        } => {
            if k_min > k_max {
                return Err(CliError::Usage(format!(
                    "k-min ({k_min}) must not exceed k-max ({k_max})"
                )));
            }
            let rows = sweep_rows(&eta.eta()?, k_min, k_max);
            write_sweep_file(&rows, &path)?;
            let worst = rows
                .iter()
                .map(|r| r.max_abs_diff_vs_k0)
                .fold(0.0, f64::max);
            writeln!(
                out,
                "wrote {} rows to {}; max_abs_diff_vs_k0 {}",
                rows.len(),
                path.display(),
                Real(worst)
            )
            .map_err(stdout_err)?;
            Ok(EXIT_SUCCESS)
        }
        Command::Verify { samples, seed } => {
            let reports = run_suite(samples, seed);
            for r in &reports {
                writeln!(out, "{r}").map_err(stdout_err)?;
            }
            Ok(if reports.iter().all(|r| r.passed()) {
                EXIT_SUCCESS
            } else {
                EXIT_NOT_EQUIVALENT
            })
        }
    }
}

fn write_sweep_file(rows: &[SweepRow], path: &Path) -> Result<(), CliError> {
    let file = File::create(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    write_sweep_csv(rows, file).map_err(|source| CliError::Csv {
        path: path.to_owned(),
        source,
    })
}
