//! End-to-end runs of the spr binary: verbs, exit codes, determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn spr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = spr(args);
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn path(name: &str) -> String {
    fixture(name).to_str().expect("utf8 path").to_string()
}

#[test]
fn validate_accepts_the_running_example() {
    let (code, stdout, _) = run(&["validate", &path("running_poset.txt")]);
    assert_eq!(code, 0);
    assert!(stdout.contains("type A: yes"));
    assert!(stdout.contains("maximals: {2,5,7}"));

    let (code, stdout, _) = run(&["validate", &path("running_quiver.txt")]);
    assert_eq!(code, 0);
    assert!(stdout.contains("alien set: valid"));
}

#[test]
fn validate_rejects_three_incomparable_points_under_one_peak() {
    let (code, _, stderr) = run(&["validate", &path("r1_poset.txt")]);
    assert_eq!(code, 1);
    assert!(stderr.contains("pairwise incomparable"));
    assert!(stderr.contains("{a,b,c}"));
}

#[test]
fn invalid_alien_set_is_a_validation_failure() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad_alien.txt");
    std::fs::write(
        &file,
        "quiver 4\narrow 1 2\narrow 3 2\narrow 3 4\nalien 1 3\n",
    )
    .unwrap();
    let (code, _, stderr) = run(&["validate", file.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("alien set invalid"));
    assert!(stderr.contains("1->3"));
}

#[test]
fn parse_errors_carry_the_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "point a\nbogus x\n").unwrap();
    let (code, _, stderr) = run(&["validate", file.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line 2"));

    let (code, _, stderr) = run(&["stability", file.to_str().unwrap()]);
    assert_eq!(code, 2, "missing --method is a usage error: {stderr}");
}

#[test]
fn subspaces_lists_the_two_proper_subspaces() {
    let (code, stdout, _) = run(&["subspaces", &path("running_poset.txt"), "1,2,3,4,5,6"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "support={1,2} dimv=(1,1,0,0,0,0,0)\nsupport={4,5,6} dimv=(0,0,0,1,1,1,0)\ntotal: 2\n"
    );
}

#[test]
fn bilinear_stability_certifies_all_fifteen_objects() {
    let (code, stdout, _) = run(&[
        "stability",
        &path("running_poset.txt"),
        "--method",
        "bilinear",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 16);
    assert!(stdout.ends_with("total: 15 objects, 15 stable, 0 other\n"));
    assert_eq!(stdout.matches("verdict=stable").count(), 15);
}

#[test]
fn explicit_theta_certifies_the_printed_weight() {
    let (code, stdout, _) = run(&[
        "stability",
        &path("running_poset.txt"),
        "--method",
        "bilinear",
        "--theta",
        "1,-2,2,1,-1,-1,0",
    ]);
    assert_eq!(code, 0);
    let line = stdout
        .lines()
        .find(|l| l.starts_with("support={1,2,3,4,5,6} "))
        .expect("sincere object row");
    assert!(line.contains("verdict=stable"));
    assert!(line.contains("witnesses=[]"));
}

#[test]
fn geometric_stability_matches_the_bilinear_count() {
    let (code, stdout, _) = run(&[
        "stability",
        &path("running_quiver.txt"),
        "--method",
        "geometric",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("total: 15 objects, 15 stable, 0 other\n"));
}

#[test]
fn sincere_route_certifies_interior_margins_and_reports_boundary_ones() {
    let (code, stdout, _) = run(&[
        "stability",
        &path("fence_s13.txt"),
        "--method",
        "geometric",
        "--m",
        "2",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.ends_with("total: 13 objects, 13 stable, 0 other\n"));

    let (code, stdout, _) = run(&[
        "stability",
        &path("fence_s13.txt"),
        "--method",
        "geometric",
        "--m",
        "1",
    ]);
    assert_eq!(code, 0, "margin 1 reports rather than fails");
    assert!(stdout.contains("verdict=boundary-angle"));
}

#[test]
fn geometric_route_needs_a_quiver_file() {
    let (code, _, stderr) = run(&[
        "stability",
        &path("running_poset.txt"),
        "--method",
        "geometric",
    ]);
    assert_eq!(code, 1);
    assert!(stderr.contains("quiver"));
}

#[test]
fn polygon_svg_is_byte_identical_across_runs() {
    let first = run(&["polygon", &path("running_quiver.txt"), "--svg"]);
    let second = run(&["polygon", &path("running_quiver.txt"), "--svg"]);
    assert_eq!(first.0, 0);
    assert_eq!(first.1, second.1);
    assert!(first.1.starts_with("<svg"));

    let (code, listing, _) = run(&["polygon", &path("running_quiver.txt")]);
    assert_eq!(code, 0);
    assert_eq!(listing.lines().count(), 28);
}

#[test]
fn ar_quiver_emits_dot_and_text() {
    let (code, dot, _) = run(&["ar-quiver", &path("running_quiver.txt"), "--dot"]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("digraph ar_quiver {"));
    assert!(dot.contains("\"\u{03b3}(0,2)\" -> \"\u{03b3}(0,5)\""));

    let (code, text, _) = run(&["ar-quiver", &path("running_quiver.txt")]);
    assert_eq!(code, 0);
    assert!(text.ends_with("total: 15 nodes, 18 arrows\n"));
}

#[test]
fn output_flag_writes_the_report_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("diagram.svg");
    let (code, stdout, _) = run(&[
        "polygon",
        &path("running_quiver.txt"),
        "--svg",
        "--output",
        file.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(&file).unwrap();
    let (_, direct, _) = run(&["polygon", &path("running_quiver.txt"), "--svg"]);
    assert_eq!(written, direct);
}

#[test]
fn verify_passes_and_agrees_with_the_smaller_sweep() {
    let (code, big, _) = run(&["verify", "--max-points", "4", "--jobs", "2"]);
    assert_eq!(code, 0);
    assert!(big.ends_with("result: pass\n"));

    let (code, small, _) = run(&["verify", "--max-points", "3", "--jobs", "1"]);
    assert_eq!(code, 0);
    let shared = |report: &str| -> Vec<String> {
        report
            .lines()
            .filter(|l| {
                [
                    "points=1:",
                    "points=2:",
                    "points=3:",
                    "vertices=2:",
                    "vertices=3:",
                ]
                .iter()
                .any(|k| l.trim_start().starts_with(k))
            })
            .map(str::to_string)
            .collect()
    };
    assert_eq!(
        shared(&big),
        shared(&small),
        "shared sizes get identical rows"
    );
}
