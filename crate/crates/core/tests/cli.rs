//! End-to-end tests of the command-line binary: file formats, query modes,
//! exit codes, and output determinism.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_slantsum"))
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, contents).expect("fixture write");
    path
}

/// 3x3 CSV image, rows top to bottom: total 45.
fn nine_csv(dir: &TempDir) -> PathBuf {
    write(dir, "nine.csv", "1,2,3\n4,5,6\n7,8,9\n")
}

fn path_arg(path: &Path) -> &str {
    path.to_str().expect("temp paths are UTF-8")
}

#[test]
fn sat_build_reports_dimensions_and_total_for_ascii_pgm() {
    let dir = TempDir::new().unwrap();
    let image = write(&dir, "ones.pgm", "P2\n2 2\n1\n1 1\n1 1\n");
    let out_path = dir.path().join("sat.csv");
    let output = run(&["sat-build", path_arg(&image), path_arg(&out_path)]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    assert_eq!(stdout(&output), "dimensions: 2x2\ntotal: 4\n");
    // Cumulative table rows are written top to bottom.
    assert_eq!(
        fs::read_to_string(&out_path).unwrap(),
        "0,2,4\n0,1,2\n0,0,0\n"
    );
}

#[test]
fn sat_build_accepts_binary_pgm_and_csv_identically() {
    let dir = TempDir::new().unwrap();
    let p5 = dir.path().join("nine.pgm");
    let mut bytes = b"P5\n3 3\n255\n".to_vec();
    bytes.extend_from_slice(&[1, 2, 3, 4, 5, 6, 7, 8, 9]);
    fs::write(&p5, bytes).unwrap();
    let csv = nine_csv(&dir);

    let from_p5 = run(&[
        "sat-build",
        path_arg(&p5),
        path_arg(&dir.path().join("a.csv")),
    ]);
    let from_csv = run(&[
        "sat-build",
        path_arg(&csv),
        path_arg(&dir.path().join("b.csv")),
    ]);
    assert!(from_p5.status.success());
    assert!(from_csv.status.success());
    assert_eq!(stdout(&from_p5), "dimensions: 3x3\ntotal: 45\n");
    assert_eq!(stdout(&from_p5), stdout(&from_csv));
    assert_eq!(
        fs::read_to_string(dir.path().join("a.csv")).unwrap(),
        fs::read_to_string(dir.path().join("b.csv")).unwrap()
    );
}

#[test]
fn truncated_binary_pgm_exits_2_with_a_specific_message() {
    let dir = TempDir::new().unwrap();
    let image = dir.path().join("trunc.pgm");
    let mut bytes = b"P5\n2 2\n255\n".to_vec();
    bytes.extend_from_slice(&[9, 9]);
    fs::write(&image, bytes).unwrap();
    let output = run(&[
        "sat-build",
        path_arg(&image),
        path_arg(&dir.path().join("s.csv")),
    ]);
    assert_eq!(output.status.code(), Some(2));
    assert!(
        stderr(&output).contains("unexpected end of pixel data"),
        "stderr: {}",
        stderr(&output)
    );
}

#[test]
fn malformed_pgm_header_exits_2_naming_the_byte_offset() {
    let dir = TempDir::new().unwrap();
    let image = write(&dir, "bad.pgm", "P2\nabc 2\n255\n1 1\n");
    let output = run(&[
        "sat-build",
        path_arg(&image),
        path_arg(&dir.path().join("s.csv")),
    ]);
    assert_eq!(output.status.code(), Some(2));
    assert!(
        stderr(&output).contains("malformed header at byte 3"),
        "stderr: {}",
        stderr(&output)
    );
}

#[test]
fn region_sum_corner_mode_matches_oracle_mode_byte_for_byte() {
    let dir = TempDir::new().unwrap();
    let image = nine_csv(&dir);
    let domain = write(&dir, "union.dom", "box 0 2 0 1\nbox 1 2 1 2\n");
    let eq1 = run(&[
        "region-sum",
        path_arg(&image),
        path_arg(&domain),
        "--mode",
        "eq1",
    ]);
    let oracle = run(&[
        "region-sum",
        path_arg(&image),
        path_arg(&domain),
        "--mode",
        "oracle",
    ]);
    assert!(eq1.status.success());
    assert!(oracle.status.success());
    assert_eq!(stdout(&eq1), stdout(&oracle));
}

#[test]
fn region_sum_full_box_totals_the_grid() {
    let dir = TempDir::new().unwrap();
    let image = nine_csv(&dir);
    let domain = write(&dir, "full.dom", "# whole image\nbox 0 2 0 2\n");
    let output = run(&[
        "region-sum",
        path_arg(&image),
        path_arg(&domain),
        "--mode",
        "eq1",
    ]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "45\n");
}

#[test]
fn region_sum_float_grids_take_the_float_path() {
    let dir = TempDir::new().unwrap();
    let image = write(&dir, "half.csv", "0.5,1.5\n2.5,3.5\n");
    let domain = write(&dir, "full.dom", "box 0 1 0 1\n");
    let output = run(&[
        "region-sum",
        path_arg(&image),
        path_arg(&domain),
        "--mode",
        "eq1",
    ]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "8\n");
}

#[test]
fn slanted_and_oracle_agree_on_an_l_shaped_curve() {
    let dir = TempDir::new().unwrap();
    let image = nine_csv(&dir);
    let domain = write(&dir, "l.dom", "curve 0 0 2 0 2 1 1 1 1 2 0 2\n");
    let slanted = run(&[
        "region-sum",
        path_arg(&image),
        path_arg(&domain),
        "--mode",
        "slanted",
    ]);
    let oracle = run(&[
        "region-sum",
        path_arg(&image),
        path_arg(&domain),
        "--mode",
        "oracle",
    ]);
    assert!(slanted.status.success(), "stderr: {}", stderr(&slanted));
    assert!(oracle.status.success());
    assert_eq!(stdout(&slanted), "19\n");
    assert_eq!(stdout(&slanted), stdout(&oracle));
}

#[test]
fn naive_mode_warns_and_misses_the_enclosed_region() {
    let dir = TempDir::new().unwrap();
    let image = nine_csv(&dir);
    let domain = write(&dir, "rect.dom", "curve 0 0 3 0 3 3 0 3\n");
    let output = run(&[
        "region-sum",
        path_arg(&image),
        path_arg(&domain),
        "--mode",
        "naive",
    ]);
    assert!(output.status.success());
    assert_eq!(stdout(&output), "0\n");
    assert!(
        stderr(&output).contains("deliberately flawed"),
        "stderr: {}",
        stderr(&output)
    );
}

#[test]
fn mode_and_geometry_mismatches_exit_2() {
    let dir = TempDir::new().unwrap();
    let image = nine_csv(&dir);
    let boxes = write(&dir, "b.dom", "box 0 1 0 1\n");
    let curve = write(&dir, "c.dom", "curve 0 0 3 0 3 3 0 3\n");
    let poly = write(&dir, "p.dom", "poly 1 2 0\n");

    let slanted_on_boxes = run(&[
        "region-sum",
        path_arg(&image),
        path_arg(&boxes),
        "--mode",
        "slanted",
    ]);
    assert_eq!(slanted_on_boxes.status.code(), Some(2));
    assert!(stderr(&slanted_on_boxes).contains("box records require"));

    let eq1_on_curve = run(&[
        "region-sum",
        path_arg(&image),
        path_arg(&curve),
        "--mode",
        "eq1",
    ]);
    assert_eq!(eq1_on_curve.status.code(), Some(2));
    assert!(stderr(&eq1_on_curve).contains("requires box records"));

    let poly_region = run(&[
        "region-sum",
        path_arg(&image),
        path_arg(&poly),
        "--mode",
        "eq1",
    ]);
    assert_eq!(poly_region.status.code(), Some(2));
    assert!(stderr(&poly_region).contains("box or curve records"));
}

#[test]
fn classify_prints_corner_coefficients_for_boxes() {
    let dir = TempDir::new().unwrap();
    let domain = write(&dir, "rect.dom", "box 0 4 0 2\n");
    let output = run(&["classify", path_arg(&domain)]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 4);
    assert!(text.contains("vertex (0, 0)  alpha +1"));
    assert!(text.contains("vertex (5, 3)  alpha +1"));
    assert!(text.contains("vertex (0, 3)  alpha -1"));
    assert!(text.contains("vertex (5, 0)  alpha -1"));
}

#[test]
fn classify_prints_indicators_and_tendencies_for_curves() {
    let dir = TempDir::new().unwrap();
    let domain = write(&dir, "l.dom", "curve 0 0 2 0 2 1 1 1 1 2 0 2\n");
    let output = run(&["classify", path_arg(&domain)]);
    assert!(output.status.success());
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 6);
    // The reflex corner where the west run turns north.
    assert!(
        text.contains("vertex (1, 1)  indicator (0,+1,+1,0)  tendency -1"),
        "stdout: {text}"
    );

    // A vertex passed in a straight line prints tendency 0, unsigned.
    let domain = write(&dir, "mid.dom", "curve 0 0 1 0 3 0 3 3 0 3\n");
    let output = run(&["classify", path_arg(&domain)]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    let text = stdout(&output);
    assert!(
        text.contains("vertex (1, 0)  indicator (+1,-1,0,0)  tendency 0"),
        "stdout: {text}"
    );
}

#[test]
fn verify_suite_passes_and_reports_counts() {
    let output = run(&["verify", "--suite", "appC", "--trials", "3", "--seed", "0"]);
    assert!(output.status.success());
    assert_eq!(
        stdout(&output),
        "suite appC: 3 passed, 0 failed (3 trials)\n"
    );
}

#[test]
fn verify_thm12_reports_both_suites_and_the_error_bound() {
    let output = run(&["verify", "--suite", "thm12", "--trials", "5", "--seed", "0"]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("suite thm12-grid: 5 passed, 0 failed (5 trials)"));
    assert!(text.contains("suite thm12-poly: 5 passed, 0 failed (5 trials)"));
    assert!(text.contains("suite thm12-poly: max relative error"));
}

#[test]
fn identical_inputs_produce_byte_identical_output() {
    let dir = TempDir::new().unwrap();
    let image = nine_csv(&dir);
    let domain = write(&dir, "l.dom", "curve 0 0 2 0 2 1 1 1 1 2 0 2\n");
    let args = [
        "region-sum",
        path_arg(&image),
        path_arg(&domain),
        "--mode",
        "slanted",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);

    let verify_args = [
        "verify", "--suite", "claims", "--trials", "20", "--seed", "7",
    ];
    assert_eq!(run(&verify_args).stdout, run(&verify_args).stdout);
}

#[test]
fn bench_lists_query_latencies_per_size() {
    let output = run(&[
        "bench",
        "--sizes",
        "16,32",
        "--queries",
        "10",
        "--seed",
        "1",
    ]);
    assert!(output.status.success(), "stderr: {}", stderr(&output));
    let text = stdout(&output);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("size,method,total_ns,ns_per_query"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    for (row, prefix) in rows
        .iter()
        .zip(["16,sat,", "16,naive,", "32,sat,", "32,naive,"])
    {
        assert!(row.starts_with(prefix), "row {row:?} lacks {prefix:?}");
    }
}

#[test]
fn bench_without_an_image_or_sizes_exits_2() {
    let output = run(&["bench"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("error:"));
}

#[test]
fn unknown_domain_keyword_exits_2() {
    let dir = TempDir::new().unwrap();
    let image = nine_csv(&dir);
    let domain = write(&dir, "bad.dom", "circle 0 0 5\n");
    let output = run(&[
        "region-sum",
        path_arg(&image),
        path_arg(&domain),
        "--mode",
        "eq1",
    ]);
    assert_eq!(output.status.code(), Some(2));
}
