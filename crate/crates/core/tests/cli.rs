use serde_json::Value;
use vmrt::cli::{main_with_args, EXIT_FAIL, EXIT_INPUT, EXIT_PASS};

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["vmrt"];
    full.extend_from_slice(args);
    let code = main_with_args(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).expect("valid json")
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify", "builtin:veronese-2-3", "--samples", "5"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(json(&out)["passed"], true);

    let (code, out, _) = run(&["verify", "builtin:adversarial-cubic", "--samples", "5"]);
    assert_eq!(code, EXIT_FAIL);
    let report = json(&out);
    let iso = report["checks"].as_array().unwrap().iter().find(|c| c["name"] == "isotropy").unwrap();
    assert_eq!(iso["passed"], false);
    assert!(!iso["witness"].is_null());

    let (code, _, _) = run(&["verify", &fixture("adversarial_cubic.json"), "--samples", "5"]);
    assert_eq!(code, EXIT_FAIL);
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let garbage = dir.path().join("bad.json");
    std::fs::write(&garbage, "{ not json").unwrap();
    for args in [
        vec!["verify", "builtin:no-such-variety"],
        vec!["verify", garbage.to_str().unwrap()],
        vec!["verify", "/nonexistent/spec.json"],
        vec!["verify", "builtin:veronese-2-3", "--checks", "isotropy,bogus"],
        vec!["frobnicate"],
    ] {
        let (code, _, err) = run(&args);
        assert_eq!(code, EXIT_INPUT, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let (code, out, _) = run(&[
        "verify",
        "builtin:flat-conic",
        "--samples",
        "4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.is_empty());
    let report = json(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(report["dims"]["dimU"], 0);
    assert!(report.get("wallTimeMs").is_none());
}

#[test]
fn info_dimensions() {
    // (dimW, dimU, n, family dimension) from the sl₂/sl₃ decomposition oracle.
    for (name, w, u, n, fam) in [
        ("veronese-2-3", 4, 1, 5, 5),
        ("veronese-2-4", 5, 3, 8, 8),
        ("veronese-3-3", 10, 10, 20, 21),
    ] {
        let (code, out, _) = run(&["info", &format!("builtin:{name}"), "--format", "json"]);
        assert_eq!(code, EXIT_PASS);
        let info = json(&out);
        assert_eq!(info["dimW"], w, "{name}");
        assert_eq!(info["dimU"], u, "{name}");
        assert_eq!(info["n"], n, "{name}");
        assert_eq!(info["predictedFamilyDim"], fam, "{name}");
    }
    let (_, text, _) = run(&["info", "builtin:veronese-2-3"]);
    assert!(text.contains("dimU: 1"));
}

#[test]
fn sample_line_on_heisenberg() {
    let (code, out, _) = run(&[
        "sample-line",
        &fixture("heisenberg_line.json"),
        "--point",
        "0",
        "--base-w",
        "0,1",
    ]);
    assert_eq!(code, EXIT_PASS);
    let v = json(&out);
    assert_eq!(v["direction"], serde_json::json!(["1", "0"]));
    assert_eq!(v["parametrization"]["u"]["slope"], serde_json::json!(["-1/2"]));
    assert_eq!(v["boundary"], serde_json::json!(["1", "0", "-1/2"]));

    let (code, _, _) = run(&["sample-line", &fixture("heisenberg_line.json"), "--point", "1,2"]);
    assert_eq!(code, EXIT_INPUT);
}

#[test]
fn build_omega_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cubic.json");
    let (code, _, _) = run(&["build-omega", &fixture("twisted_cubic.json"), "--out", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    let built = json(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(built["omega"]["dimU"], 1);

    let (code, out, _) = run(&["verify", path.to_str().unwrap(), "--samples", "5"]);
    assert_eq!(code, EXIT_PASS);
    let report = json(&out);
    assert_eq!(report["omegaSource"], "supplied");
    assert_eq!(report["dims"]["familyDim"], 5);

    let (_, again, _) = run(&["build-omega", path.to_str().unwrap()]);
    assert_eq!(json(&again)["omega"], built["omega"]);
}

#[test]
fn check_filter_keeps_verdicts() {
    let full = json(&run(&["verify", "builtin:veronese-2-3", "--samples", "6"]).1);
    let (code, out, _) = run(&[
        "verify",
        "builtin:veronese-2-3",
        "--samples",
        "6",
        "--checks",
        "levi,h-t-identity",
    ]);
    assert_eq!(code, EXIT_PASS);
    let partial = json(&out);
    let checks = partial["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    for c in checks {
        let same = full["checks"].as_array().unwrap().iter().find(|f| f["name"] == c["name"]).unwrap();
        assert_eq!(c, same);
    }
}

#[test]
fn text_format_and_timing() {
    let (code, out, _) = run(&["verify", "builtin:flat-linear-3", "--samples", "3", "--format", "text"]);
    assert_eq!(code, EXIT_PASS);
    assert!(out.contains("isotropy"));
    let (_, out, _) = run(&["verify", "builtin:flat-linear-3", "--samples", "3", "--timing"]);
    assert!(json(&out)["wallTimeMs"].is_number());
}
