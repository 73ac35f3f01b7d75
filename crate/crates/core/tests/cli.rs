use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logcycle"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn numbers(line: &str) -> Vec<f64> {
    line.split_whitespace()
        .map(|s| s.parse().unwrap())
        .collect()
}

#[test]
fn exp_prints_round_trip_digits() {
    let o = run(&["exp", "0.25", "-1", "0.5", "2"]);
    assert!(o.status.success());
    let printed = numbers(stdout(&o).trim());
    let q = logcycle::Quaternion::new(0.25, -1.0, 0.5, 2.0).unwrap();
    // Bitwise: the text form must parse back to the same doubles.
    assert_eq!(printed, q.exp().to_array());
}

#[test]
fn exp_verify_lines() {
    let o = run(&["exp", "--verify", "-2.1", "1.7", "-0.3", "2.9"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("series_oracle "));
    assert!(lines[2].starts_with("matrix_oracle "));
    for (prefix, tol) in [
        ("max_abs_diff_series ", 1e-11),
        ("max_abs_diff_matrix ", 1e-10),
    ] {
        let d: f64 = lines
            .iter()
            .find_map(|l| l.strip_prefix(prefix))
            .unwrap()
            .parse()
            .unwrap();
        assert!(d <= tol, "{prefix}{d}");
    }
}

#[test]
fn log_branch_magnitude() {
    let o = run(&["log", "--k", "1", "1", "0", "0", "0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let v = numbers(text.split(" k=").next().unwrap());
    let len = (v[1] * v[1] + v[2] * v[2] + v[3] * v[3]).sqrt();
    assert_eq!(len, std::f64::consts::TAU);
    assert!(text.trim_end().ends_with("k=1 axis_defaulted=true"));
}

#[test]
fn spherical_round_trip_through_the_binary() {
    let o = run(&["spherical", "0.3", "-1.2", "0.8", "2.5"]);
    assert!(o.status.success());
    let coords = stdout(&o);
    let mut args = vec!["spherical", "--inverse"];
    args.extend(coords.split_whitespace());
    let back = numbers(stdout(&run(&args)).trim());
    for (a, b) in back.iter().zip([0.3, -1.2, 0.8, 2.5]) {
        assert!((a - b).abs() < 1e-12, "{back:?}");
    }
}

#[test]
fn spherical_inverse_normalizes_wrapped_angles() {
    let o = run(&["spherical", "--inverse", "2", "0", "0", "7.853981633974483"]);
    assert!(o.status.success());
    let q = numbers(stdout(&o).trim());
    assert!(q[0].abs() < 1e-15 && (q[1] - 2.0).abs() < 1e-15);
}

#[test]
fn eta_log_reports_turns() {
    let o = run(&["eta-log", "1", "0.3", "1.5707963267948966", "0", "0"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "t=1 tau_phase=0.3 theta1=0 theta2=0 theta3=1.5707963267948966 wraps=(0,0,0,0)\n"
    );
}

#[test]
fn cycle_check_with_negative_shift() {
    let o = run(&["cycle-check", "-1", "-0.3", "-1", "2", "-3", "--k", "-4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("\nEQUIVALENT\n"));
}

#[test]
fn cycle_check_tolerance_flag() {
    let args = [
        "cycle-check",
        "1",
        "0.3",
        "1",
        "2",
        "3",
        "--against",
        "1",
        "0.4",
        "1",
        "2",
        "3",
    ];
    assert_eq!(run(&args).status.code(), Some(1));
    let mut loose = args.to_vec();
    loose.extend(["--tol", "0.2"]);
    assert_eq!(run(&loose).status.code(), Some(0));
}

#[test]
fn sweep_unwritable_path_is_io_error() {
    let o = run(&[
        "sweep",
        "0",
        "0",
        "1",
        "1",
        "1",
        "--k-min",
        "0",
        "--k-max",
        "2",
        "--out",
        "/nonexistent-dir/sub/sweep.csv",
    ]);
    assert_eq!(o.status.code(), Some(4));
    assert!(!o.stderr.is_empty());
}

#[test]
fn sweep_rows_ascend() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let o = run(&[
        "sweep",
        "0.5",
        "2",
        "0.1",
        "-0.2",
        "0.3",
        "--k-min",
        "-3",
        "--k-max",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(!text.contains('\r'));
    let ks: Vec<i64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(ks, (-3..=3).collect::<Vec<_>>());
}

#[test]
fn verify_subcommand_passes() {
    let o = run(&["verify", "--samples", "300", "--seed", "11"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().all(|l| l.ends_with("PASS")));
}
