//! End-to-end tests of the command-line surface: documented output strings,
//! exit codes, flag/environment precedence, and JSON output.

use std::process::{Command, Output};

fn beltrami(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_beltrami"))
        .args(args)
        .env_remove("BELTRAMI_A")
        .env_remove("BELTRAMI_R")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn dist_prints_twelve_decimals() {
    let out = beltrami(&["dist", "--p", "0,0", "--q", "0.5,0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0.549306144334\n");
}

#[test]
fn dist_of_coincident_points_is_zero() {
    let out = beltrami(&["dist", "--p", "0.3,0.2", "--q", "0.3,0.2"]);
    assert_eq!(stdout(&out), "0.000000000000\n");
}

#[test]
fn dist_rejects_exterior_point_with_exit_2() {
    let out = beltrami(&["dist", "--p", "1.1,0", "--q", "0,0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("outside"), "{err}");
}

#[test]
fn parallelism_matches_documented_value() {
    let out = beltrami(&["parallelism", "--rho", "0.549306144334"]);
    assert_eq!(stdout(&out), "1.047197551197\n");
}

#[test]
fn convert_to_hyperboloid() {
    let out = beltrami(&["convert", "--to", "hyperboloid", "--p", "0.5,0"]);
    assert_eq!(
        stdout(&out),
        "0.577350269190 0.000000000000 1.154700538379\n"
    );
}

#[test]
fn convert_round_trips_through_disk() {
    let out = beltrami(&[
        "convert",
        "--to",
        "disk",
        "--h",
        "0.577350269190,0,1.154700538379",
    ]);
    assert_eq!(stdout(&out), "0.500000000000 0.000000000000\n");
}

#[test]
fn convert_to_polar_and_coordinates() {
    let out = beltrami(&["convert", "--to", "polar", "--p", "0.5,0"]);
    assert_eq!(
        stdout(&out),
        "0.500000000000 0.000000000000 0.549306144334\n"
    );

    let out = beltrami(&["convert", "--to", "equidistant", "--p", "0,0.462117157260"]);
    let line = stdout(&out);
    let parts: Vec<f64> = line
        .split_whitespace()
        .map(|s| s.parse().unwrap())
        .collect();
    assert!((parts[0] - 0.5).abs() < 1e-11);
    assert!(parts[1].abs() < 1e-12);

    let out = beltrami(&[
        "convert",
        "--to",
        "horocyclic",
        "--p",
        "0.5,0",
        "--ideal",
        "0",
    ]);
    assert_eq!(stdout(&out), "0.549306144334 0.000000000000\n");
}

#[test]
fn triangle_reports_angles_then_area() {
    let out = beltrami(&["triangle", "--v", "0,0", "--v", "0.5,0", "--v", "0.5,0.5"]);
    assert_eq!(
        stdout(&out),
        "angle 0.785398163397\nangle 1.570796326795\nangle 0.615479708670\narea 0.169918454727\n"
    );
}

#[test]
fn curve_circle_samples_euclidean_circle() {
    let out = beltrami(&[
        "curve",
        "circle",
        "--center",
        "0,0",
        "--rho",
        "0.549306144334",
        "--n",
        "4",
    ]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    for line in lines {
        let parts: Vec<f64> = line
            .split_whitespace()
            .map(|s| s.parse().unwrap())
            .collect();
        assert!((parts[0].hypot(parts[1]) - 0.5).abs() < 1e-9, "{line}");
    }
}

#[test]
fn curve_horocycle_includes_origin() {
    let out = beltrami(&[
        "curve",
        "horocycle",
        "--ideal",
        "0",
        "--rho",
        "0",
        "--n",
        "3",
    ]);
    assert!(stdout(&out)
        .lines()
        .any(|l| l == "0.000000000000 0.000000000000"));
}

#[test]
fn curve_geodesic_with_two_samples_gives_ideal_endpoints() {
    let out = beltrami(&[
        "curve", "geodesic", "--p", "0,0", "--q", "0.3,0.4", "--n", "2",
    ]);
    assert_eq!(
        stdout(&out),
        "-0.600000000000 -0.800000000000\n0.600000000000 0.800000000000\n"
    );
}

#[test]
fn curve_rejects_small_n() {
    let out = beltrami(&[
        "curve", "circle", "--center", "0,0", "--rho", "0.5", "--n", "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn curve_json_output_parses() {
    let out = beltrami(&[
        "--json", "curve", "circle", "--center", "0,0", "--rho", "0.5", "--n", "8",
    ]);
    let rows: Vec<[f64; 2]> = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(rows.len(), 8);
}

#[test]
fn environment_sets_defaults_and_flags_win() {
    let out = Command::new(env!("CARGO_BIN_EXE_beltrami"))
        .args(["dist", "--p", "0,0", "--q", "1,0"])
        .env("BELTRAMI_A", "2")
        .output()
        .unwrap();
    assert_eq!(stdout(&out), "0.549306144334\n");

    let out = Command::new(env!("CARGO_BIN_EXE_beltrami"))
        .args(["dist", "--p", "0,0", "--q", "1,0", "--a", "4"])
        .env("BELTRAMI_A", "1")
        .output()
        .unwrap();
    // flag a = 4 wins over env a = 1 (under which q would be outside)
    assert_eq!(stdout(&out), "0.255412811883\n");
}

#[test]
fn scale_parameters_reach_the_formulas() {
    // doubling R doubles every distance
    let unit = stdout(&beltrami(&["dist", "--p", "0,0", "--q", "0.5,0"]));
    let scaled = stdout(&beltrami(&[
        "dist", "--p", "0,0", "--q", "0.5,0", "--R", "2",
    ]));
    let d0: f64 = unit.trim().parse().unwrap();
    let d1: f64 = scaled.trim().parse().unwrap();
    assert!((d1 - 2.0 * d0).abs() < 1e-12);
}

#[test]
fn render_reports_schema_violations_with_object_index() {
    let dir = tempfile::tempdir().unwrap();
    let scene = dir.path().join("bad.json");
    std::fs::write(
        &scene,
        r#"{"a": 1, "R": 1, "objects": [{"type": "point", "u": 3.0, "v": 0, "label": "X"}]}"#,
    )
    .unwrap();
    let out = beltrami(&[
        "render",
        scene.to_str().unwrap(),
        dir.path().join("out.svg").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("object 0"), "{err}");
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let scene = dir.path().join("scene.json");
    std::fs::write(&scene, r#"{"a": 1, "R": 1, "objects": []}"#).unwrap();
    let out_path = dir.path().join("out.svg");
    let out = beltrami(&[
        "render",
        scene.to_str().unwrap(),
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let svg = std::fs::read_to_string(&out_path).unwrap();
    assert!(svg.contains("</svg>"));
}
