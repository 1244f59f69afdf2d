//! End-to-end tests against the compiled `genylm` binary: frozen output strings,
//! exit-code contracts, determinism, and CSV round-tripping.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_genylm"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).expect("stdout is UTF-8"),
        String::from_utf8(output.stderr).expect("stderr is UTF-8"),
        output.status.code().expect("no signal"),
    )
}

#[test]
fn eval_prints_frozen_reference_values() {
    let (stdout, _, code) = run(&["eval", "--m", "0", "--axis", "0", "0", "--at", "0", "0"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "0.630783130505040 0");
    assert_eq!(lines[1], "0.630783130505040 0");

    let (stdout, _, code) = run(&["eval", "--m", "2", "--axis", "0", "0", "--at", "90", "0"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().next().unwrap(), "0.386274202023190 0");
}

#[test]
fn eval_clamps_rounding_noise_and_reports_the_phase() {
    // At (90°, 45°) the m = 2 harmonic is purely imaginary; the ~1e-17 real dust
    // from cos(π/2) must print as an exact 0 and the phase as π/2.
    let (stdout, _, code) = run(&["eval", "--m", "2", "--axis", "0", "0", "--at", "90", "45"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "0 0.386274202023190");
    assert_eq!(lines[1], "0.386274202023190 1.570796326794897");
}

#[test]
fn eval_honors_family_and_axis_selection() {
    // The composed harmonic at its own pole takes the standard polar value.
    let (stdout, _, code) = run(&[
        "eval", "--family", "composed", "--m", "0", "--axis", "63", "117", "--at", "63", "117",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().next().unwrap(), "0.630783130505040 0");
}

#[test]
fn validate_default_battery_passes() {
    let (stdout, _, code) = run(&["validate"]);
    assert_eq!(code, 0, "stdout:\n{stdout}");
    assert!(stdout.contains("VALIDATE 18/18 checks passed"));
    assert!(!stdout.contains(" FAIL"));
    assert!(stdout.contains("CHECK chi_unitarity"));
    assert!(stdout.contains("CHECK quadrature_std_gram"));
    // The battery still reports what the tabulated forms get wrong.
    assert!(stdout.contains("INFO erratum paper-closed-x m=0"));
}

#[test]
fn validate_coarse_grid_fails_by_aliasing() {
    let (stdout, _, code) = run(&["validate", "--grid", "4", "4"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("CHECK orthonormality_composed"));
    assert!(stdout.contains("FAIL"));
}

#[test]
fn validate_tabulated_x_family_fails_and_is_explained() {
    let (stdout, _, code) = run(&["validate", "--family", "paper-closed-x"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("CHECK orthonormality_paper_closed_x"));
    assert!(stdout.contains("CHECK substitution_agreement_paper_closed_x"));
    assert!(stdout.contains("FAIL"));
    assert!(stdout.contains("INFO erratum paper-closed-x m=0"));
    // Parity and the eigen identity still hold for the printed x′ forms.
    assert!(stdout.contains("CHECK parity_paper_closed_x") && stdout.contains("PASS"));
}

#[test]
fn validate_tabulated_y_family_fails_the_eigen_identity() {
    let (stdout, _, code) = run(&["validate", "--family", "paper-closed-y"]);
    assert_eq!(code, 1);
    let eigen_line = stdout
        .lines()
        .find(|l| l.starts_with("CHECK eigenvalue_paper_closed_y"))
        .expect("eigen check present");
    assert!(eigen_line.ends_with("FAIL"), "line: {eigen_line}");
}

#[test]
fn substitution_families_validate_clean() {
    for family in ["substitution-x", "substitution-y", "standard", "composed"] {
        let (stdout, _, code) = run(&["validate", "--family", family, "--dirs", "4"]);
        assert_eq!(code, 0, "family {family} stdout:\n{stdout}");
        assert!(!stdout.contains(" FAIL"));
    }
}

#[test]
fn invalid_configuration_exits_two() {
    let (_, stderr, code) = run(&["eval", "--m", "7", "--axis", "0", "0", "--at", "0", "0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("m = 7"));

    let (_, stderr, code) = run(&["eval", "--m", "0", "--axis", "200", "0", "--at", "0", "0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("polar angle"));

    let (_, _, code) = run(&["eval", "--no-such-flag"]);
    assert_eq!(code, 2);

    let (_, stderr, code) = run(&[
        "eval", "--family", "bogus", "--m", "0", "--axis", "0", "0", "--at", "0", "0",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown family"));
}

#[test]
fn validate_output_is_deterministic() {
    let args = [
        "validate",
        "--matrix-dirs",
        "50",
        "--dirs",
        "3",
        "--points",
        "40",
    ];
    let (first, _, code_a) = run(&args);
    let (second, _, code_b) = run(&args);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(first, second, "two identical invocations must agree byte-for-byte");
}

#[test]
fn plot_data_csv_round_trips_exactly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("field.csv");
    let path_str = path.to_str().unwrap();
    let args = [
        "plot-data", "--m", "1", "--axis", "30", "45", "--n-theta", "5", "--n-phi", "9",
        "--output", path_str,
    ];
    let (_, _, code) = run(&args);
    assert_eq!(code, 0);
    let first = std::fs::read_to_string(&path).unwrap();

    let mut lines = first.lines();
    assert_eq!(lines.next().unwrap(), "theta_deg,phi_deg,re,im,abs2");
    let mut rows = 0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 5);
        for field in fields {
            let value: f64 = field.parse().expect("numeric CSV field");
            // Shortest round-trip formatting: re-printing the parsed value must
            // reproduce the written text exactly.
            assert_eq!(value.to_string(), field);
        }
        rows += 1;
    }
    assert_eq!(rows, 5 * 9);

    let (_, _, code) = run(&args);
    assert_eq!(code, 0);
    let second = std::fs::read_to_string(&path).unwrap();
    assert_eq!(first, second, "regenerated CSV must be bit-identical");
}

#[test]
fn plot_data_defaults_to_stdout() {
    let (stdout, _, code) = run(&["plot-data", "--m", "0", "--n-theta", "2", "--n-phi", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("theta_deg,phi_deg,re,im,abs2\n"));
    assert_eq!(stdout.lines().count(), 1 + 2 * 2);
}

#[test]
fn table_chi_is_the_identity_on_the_z_axis() {
    let (stdout, _, code) = run(&["table", "chi", "--axis", "0", "0"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "m_i,m_f,re,im");
    assert_eq!(lines.len(), 26);
    for &m in &[2, 1, 0, -1, -2] {
        assert!(lines.contains(&format!("{m},{m},1,0").as_str()));
    }
    assert!(lines.contains(&"2,1,0,0"));
    assert!(lines.contains(&"-2,2,0,0"));
}

#[test]
fn table_gram_reports_orthonormality_of_the_composed_family() {
    let (stdout, _, code) = run(&[
        "table", "gram", "--family", "composed", "--axis", "40", "160", "--grid", "16", "16",
    ]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert_eq!(lines.next().unwrap(), "row_m,col_m,re,im");
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        let (row, col): (i32, i32) = (fields[0].parse().unwrap(), fields[1].parse().unwrap());
        let (re, im): (f64, f64) = (fields[2].parse().unwrap(), fields[3].parse().unwrap());
        let expected = if row == col { 1.0 } else { 0.0 };
        assert!((re - expected).abs() < 1e-12, "line: {line}");
        assert!(im.abs() < 1e-12, "line: {line}");
    }
}

#[test]
fn errata_report_pins_the_x_prefactor_correction() {
    let (stdout, _, code) = run(&["errata"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 20);
    let x0 = stdout
        .lines()
        .find(|l| l.starts_with("ERRATUM paper-closed-x m=0"))
        .expect("x′ m = 0 row");
    assert!(x0.contains("ratio=0.816496580928"));
    assert!(x0.contains("printed_prefactor=0.193137101011595"));
    assert!(x0.contains("corrected_prefactor=0.236543673939390"));
    let y1 = stdout
        .lines()
        .find(|l| l.starts_with("ERRATUM paper-closed-y m=1"))
        .expect("y′ m = 1 row");
    assert!(y1.contains("ratio=none"));
}

#[test]
fn closed_stdout_pipe_ends_the_process_quietly() {
    // `genylm validate | head -1` must not panic when head closes the pipe:
    // the process should treat the broken pipe as a normal early stop.
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_genylm"))
        .args(["validate", "--dirs", "2", "--matrix-dirs", "50", "--points", "40"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    drop(child.stdout.take());
    let output = child.wait_with_output().expect("binary exits");
    let stderr = String::from_utf8(output.stderr).expect("stderr is UTF-8");
    assert!(!stderr.contains("panicked"), "stderr:\n{stderr}");
    assert_eq!(output.status.code(), Some(0), "stderr:\n{stderr}");
}
