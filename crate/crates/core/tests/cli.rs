//! Command-line behaviour through `cli::run`.

use jones_slopes::cli::{run, EXIT_CAP, EXIT_FALSE_VERDICT, EXIT_OK, EXIT_USAGE, JONES_COLUMNS, VERIFY_COLUMNS};
use jones_slopes::jones::unknot_closed_form;
use jones_slopes::LaurentPoly;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("jones-slopes").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

#[test]
fn jones_json() {
    let (code, out, _) = call(&["jones", "--knot", "3_1", "-n", "3", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "jones");
    let values = v["reports"][0]["values"].as_array().unwrap();
    assert_eq!(values.len(), 3);
    let degrees: Vec<(i64, i64)> =
        values.iter().map(|r| (r["four_d_minus"].as_i64().unwrap(), r["four_d_plus"].as_i64().unwrap())).collect();
    assert_eq!(degrees, vec![(0, 0), (2, 18), (4, 48)]);
    let j2: LaurentPoly = serde_json::from_value(values[1]["polynomial"].clone()).unwrap();
    let reduced = LaurentPoly::from_terms([(-4, 1), (-12, 1), (-16, -1)]);
    assert_eq!(j2, &reduced * &unknot_closed_form(2).unwrap());
}

#[test]
fn verify_figure_eight() {
    let (code, out, _) = call(&["verify", "--knot", "4_1", "--nmax", "4", "--strict"]);
    assert_eq!(code, EXIT_OK);
    let line = out.lines().find(|l| l.starts_with("alternating ")).unwrap();
    assert!(line.split_whitespace().nth(1) == Some("true"), "{line}");
}

#[test]
fn verify_strict_false() {
    let (code, out, _) = call(&["verify", "--knot", "3_1/kink+", "-n", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("false"));
    let (code, _, _) = call(&["verify", "--knot", "3_1/kink+", "-n", "3", "--strict"]);
    assert_eq!(code, EXIT_FALSE_VERDICT);
}

#[test]
fn analyze_tables() {
    let (code, out, _) = call(&["analyze", "--pd", TREFOIL]);
    assert_eq!(code, EXIT_OK);
    for needle in ["S_A", "S_B", "circles", "adequate"] {
        assert!(out.contains(needle), "{needle} missing:\n{out}");
    }
}

#[test]
fn output_is_deterministic() {
    let runs = [
        vec!["jones", "--knot", "5_2", "-n", "3", "--format", "json"],
        vec!["verify", "--knot", "6_2", "-n", "3"],
        vec!["slopes", "--knot", "4_1", "--format", "csv"],
        vec!["analyze", "--knot", "nonalt_adequate_10", "--format", "json"],
        vec!["catalog"],
    ];
    for args in runs {
        let (c1, a, _) = call(&args);
        let (c2, b, _) = call(&args);
        assert_eq!((c1, c2), (EXIT_OK, EXIT_OK), "{args:?}");
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn provenance_on_stderr_only() {
    let (_, out, err) = call(&["jones", "--knot", "3_1", "-n", "2", "--format", "json"]);
    assert!(err.contains("wall="), "{err}");
    assert!(!out.contains("wall"));
}

#[test]
fn csv_headers() {
    let (_, out, _) = call(&["jones", "--knot", "3_1", "-n", "2", "--format", "csv"]);
    assert_eq!(out.lines().next().unwrap(), JONES_COLUMNS.join(","));
    assert_eq!(out.lines().count(), 3);
    let (_, out, _) = call(&["verify", "--knot", "3_1", "-n", "3", "--format", "csv"]);
    assert_eq!(out.lines().next().unwrap(), VERIFY_COLUMNS.join(","));
}

#[test]
fn exit_codes() {
    assert_eq!(call(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(call(&["jones", "--knot", "3_1", "--format", "yaml"]).0, EXIT_USAGE);
    assert_eq!(call(&["jones", "--pd", "X(1,2,3,4)"]).0, EXIT_USAGE);
    assert_eq!(call(&["slopes", "--knot", "3_1", "-n", "2"]).0, EXIT_USAGE);
    let (code, _, err) = call(&["jones", "--knot", "6_2", "-n", "4", "--engine", "sweep", "--width-cap", "10"]);
    assert_eq!(code, EXIT_CAP);
    assert!(err.contains("width-cap"));
}

#[test]
fn batch_file() {
    let dir = std::env::temp_dir().join(format!("jones-slopes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("batch.json");
    std::fs::write(
        &path,
        r#"[{"label":"t","pd":[[1,4,2,5],[3,6,4,1],[5,2,6,3]]},{"pd":[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]}]"#,
    )
    .unwrap();
    let (code, out, _) = call(&["adequacy", "--file", path.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(code, EXIT_OK);
    let labels: Vec<&str> = out.lines().skip(1).map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(labels, vec!["t", "batch[1]"]);
    std::fs::remove_dir_all(&dir).unwrap();
}
