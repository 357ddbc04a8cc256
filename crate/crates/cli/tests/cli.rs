//! End-to-end checks of the command-line interface, driving the real
//! binary.

use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> (i32, String, String) {
    let Output {
        status,
        stdout,
        stderr,
    } = Command::new(env!("CARGO_BIN_EXE_abstrata"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        status.code().expect("exit code"),
        String::from_utf8(stdout).expect("stdout is utf-8"),
        String::from_utf8(stderr).expect("stderr is utf-8"),
    )
}

fn parse(text: &str) -> Value {
    serde_json::from_str(text).expect("output parses as JSON")
}

/// Every number in the output must be an integer; rationals travel as
/// strings, and floats are forbidden everywhere.
fn assert_no_floats(value: &Value) {
    match value {
        Value::Number(n) => assert!(n.is_i64() || n.is_u64(), "float in output: {n}"),
        Value::Array(entries) => entries.iter().for_each(assert_no_floats),
        Value::Object(fields) => fields.values().for_each(assert_no_floats),
        _ => {}
    }
}

#[test]
fn order_reports_the_worked_comparison() {
    let (code, stdout, _) = run(&["order", "A2", r#"["2","1"]"#, r#"["1","1"]"#]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "\">\"");
}

#[test]
fn order_accepts_the_object_form_and_bare_integers() {
    let (code, stdout, _) = run(&[
        "order",
        "A2",
        r#"{"coords":["2","1"],"basis":"fundamental-coweight"}"#,
        "[1, 1]",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "\">\"");
}

#[test]
fn plan_emits_the_two_move_plan() {
    let (code, stdout, _) = run(&[
        "plan",
        "A2",
        "--from",
        r#"{"coords":["2","1"],"support":["a1"]}"#,
        "--to",
        r#"{"coords":["1","1"],"support":["a1","a2"]}"#,
    ]);
    assert_eq!(code, 0);
    let plan = parse(&stdout);
    let moves = plan["moves"].as_array().unwrap();
    assert_eq!(moves.len(), 2);
    assert_eq!(moves[0]["type"], 1);
    assert_eq!(moves[0]["vertex"], "a2");
    assert_eq!(moves[1]["type"], 3);
    assert_eq!(moves[1]["vertex"], "a1");
    assert_no_floats(&plan);
}

#[test]
fn emitted_pairs_parse_back_unchanged() {
    let (code, stdout, _) = run(&["minimal", "D4/z1z2"]);
    assert_eq!(code, 0);
    let points = parse(&stdout);
    assert_no_floats(&points);
    let points = points.as_array().unwrap();
    assert_eq!(points.len(), 2, "two minimally unstable points at the ears");
    for point in points {
        // Re-feed each emitted pair: a plan from a pair to itself is empty,
        // and the point compares equal to itself.
        let text = point.to_string();
        let (code, stdout, _) = run(&["plan", "D4/z1z2", "--from", &text, "--to", &text]);
        assert_eq!(code, 0);
        assert_eq!(parse(&stdout)["moves"], json!([]));
        let (code, stdout, _) = run(&["order", "D4/z1z2", &text, &text]);
        assert_eq!(code, 0);
        assert_eq!(stdout.trim(), "\"=\"");
    }
}

#[test]
fn between_lists_the_interval_ascending() {
    let (code, stdout, _) = run(&["between", "A2", r#"["2","1"]"#, r#"["1","1"]"#]);
    assert_eq!(code, 0);
    let points = parse(&stdout);
    let coords: Vec<&Value> = points
        .as_array()
        .unwrap()
        .iter()
        .map(|p| &p["coords"])
        .collect();
    assert_eq!(coords, vec![&json!(["1", "1"]), &json!(["2", "1"])]);
}

#[test]
fn catalog_check_agrees_for_so7() {
    let (code, stdout, _) = run(&["catalog-check", "B3/z1"]);
    assert_eq!(code, 0, "catalog-check B3/z1 must exit 0");
    let report = parse(&stdout);
    assert_eq!(report["agree"], true);
    assert_eq!(report["catalog"], report["search"]);
}

#[test]
fn catalog_check_refuses_uncataloged_groups() {
    let (code, _, stderr) = run(&["catalog-check", "G2"]);
    assert_eq!(code, 3);
    assert!(stderr.contains("not in the catalog"), "{stderr}");
}

#[test]
fn poset_json_lists_relations_low_to_high() {
    let (code, stdout, _) = run(&["poset", "B3/z1"]);
    assert_eq!(code, 0);
    let poset = parse(&stdout);
    assert_eq!(poset["minimal"], json!(["a3"]));
    assert!(
        poset["hasse"].as_array().unwrap().contains(&json!(["a3", "a2"])),
        "{stdout}"
    );
    assert_no_floats(&poset);
}

#[test]
fn poset_dot_labels_nodes_by_value() {
    let (code, stdout, _) = run(&["poset", "B3/z1", "--output", "dot"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("digraph"));
    assert!(stdout.contains("a3 [label=\"mu(a3)=1/2\"]"), "{stdout}");
    assert!(stdout.contains("a3 -> a2;"), "{stdout}");
}

#[test]
fn profile_prints_exact_values() {
    // A chain first: one segment with zero boundary nodes.
    let (code, stdout, _) = run(&["profile", "A2", r#"["1","1"]"#]);
    assert_eq!(code, 0);
    let profile = parse(&stdout);
    assert_eq!(profile["nodes"], json!([[null, "a1", "a2", null]]));
    assert_eq!(profile["values"], json!([["0", "1", "1", "0"]]));
    assert_eq!(profile["slopes"], json!([["1", "0", "-1"]]));
    assert_eq!(profile["verdict"], true);

    // A double bond splits the profile at the junction.
    let (code, stdout, _) = run(&["profile", "B2", r#"["1","3/2"]"#]);
    assert_eq!(code, 0);
    let profile = parse(&stdout);
    assert_eq!(profile["values"], json!([["0", "1"], ["1", "3/2", "0"]]));
    assert_eq!(profile["verdict"], false);
    assert_no_floats(&profile);
}

#[test]
fn special_reports_failures_with_reasons() {
    let (code, stdout, _) = run(&["special", "D4"]);
    assert_eq!(code, 0);
    let report = parse(&stdout);
    assert_eq!(report["special"], json!(["a2"]));
    let failures = report["failures"].as_array().unwrap();
    assert_eq!(failures.len(), 3);
    assert!(failures
        .iter()
        .any(|f| f["vertex"] == "a1" && f["conditions"] == json!(["meets-component-off-end"])));
}

#[test]
fn info_names_the_class_and_diagram() {
    let (code, stdout, _) = run(&["info", "E6/ad"]);
    assert_eq!(code, 0);
    let info = parse(&stdout);
    assert_eq!(info["rank"], 6);
    assert_eq!(info["center_order"], 3);
    assert_eq!(info["class"]["order"], 3);
    assert_eq!(info["vertices"][0], "a1");
    assert_no_floats(&info);

    // Exponents walk down the cyclic center: the square of the order-6
    // generator has order 3.
    let (code, stdout, _) = run(&["info", "A5/z1^2"]);
    assert_eq!(code, 0);
    assert_eq!(parse(&stdout)["class"]["order"], 3);
}

#[test]
fn parse_failures_exit_2() {
    // Zero denominator.
    let (code, _, stderr) = run(&["order", "A2", r#"["1/0","1"]"#, r#"["1","1"]"#]);
    assert_eq!(code, 2, "{stderr}");
    // Unknown vertex.
    let (code, _, _) = run(&[
        "plan",
        "A2",
        "--from",
        r#"{"coords":["1","1"],"support":["a9"]}"#,
        "--to",
        r#"{"coords":["1","1"],"support":["a1"]}"#,
    ]);
    assert_eq!(code, 2);
    // Unknown family.
    let (code, _, _) = run(&["info", "H3"]);
    assert_eq!(code, 2);
    // "ad" is ambiguous when the center is not cyclic.
    let (code, _, stderr) = run(&["minimal", "D4/ad"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("z1z2"), "{stderr}");
    // Floats are rejected with guidance.
    let (code, _, stderr) = run(&["order", "A2", "[1.5, 1]", r#"["1","1"]"#]);
    assert_eq!(code, 2);
    assert!(stderr.contains("rational string"), "{stderr}");
    // A generator the center does not have.
    let (code, _, _) = run(&["info", "B3/z2"]);
    assert_eq!(code, 2);
}

#[test]
fn precondition_failures_exit_3() {
    // Not harmonic off the support: not a pair at all.
    let (code, _, stderr) = run(&[
        "plan",
        "A2",
        "--from",
        r#"{"coords":["1","0"],"support":["a1"]}"#,
        "--to",
        r#"{"coords":["0","0"],"support":[]}"#,
    ]);
    assert_eq!(code, 3, "{stderr}");
    // Incomparable endpoints cannot be planned.
    let (code, _, _) = run(&[
        "plan",
        "A2",
        "--from",
        r#"{"coords":["1","1/2"],"support":["a1"]}"#,
        "--to",
        r#"{"coords":["1/2","1"],"support":["a2"]}"#,
    ]);
    assert_eq!(code, 3);
    // between needs a pointwise-dominating upper bound.
    let (code, _, _) = run(&["between", "A2", r#"["0","0"]"#, r#"["1","1"]"#]);
    assert_eq!(code, 3);
}
