use std::process::{Command, Output};

fn kinegeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kinegeo")).args(args).output().expect("run kinegeo")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn single_duality_check() {
    let o = kinegeo(&["verify", "--suite", "duality", "--only", "Min", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 1);
    assert_eq!(v["only"], "Min");
    assert_eq!(v["summary"]["overall"], "pass");
}

#[test]
fn aliases_resolve_for_only() {
    let o = kinegeo(&["verify", "--suite", "geometry", "--only", "NH2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("(-,-;+,-)"));
}

#[test]
fn json_out_file_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = kinegeo(&["verify", "--suite", "closure", "--format", "json", "--seed", "0x4b494e", "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(o.stdout.is_empty());
    }
    let (ja, jb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ja, jb);
    let v: serde_json::Value = serde_json::from_slice(&ja).unwrap();
    assert_eq!(v["seed"], "0x4b494e");
    assert_eq!(v["schema"], 1);
}

#[test]
fn timings_are_opt_in() {
    let o = kinegeo(&["verify", "--suite", "additivity", "--format", "json", "--timings"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["checks"][0].get("time_ms").is_some());
}

#[test]
fn injected_fault_exits_one_with_diagnostic() {
    let o = kinegeo(&["verify", "--suite", "geometry", "--only", "dS", "--inject", "geometry:dS"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("FAIL geometry/compatibility dS:"), "{err}");
    assert!(err.contains("[0][0][0]"), "{err}");
    assert!(stdout(&o).contains("overall: FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "--inject", "geometry"],
        vec!["verify", "--inject", "geometry:Nowhere"],
        vec!["verify", "--only", "Nowhere"],
        vec!["verify", "--seed", "xyz"],
        vec!["verify", "--suite", "bogus"],
        vec!["verify", "--spec", "/nonexistent/file.kg"],
        vec!["show", "geometry", "Nowhere"],
        vec!["frobnicate"],
    ] {
        let o = kinegeo(&args);
        assert_eq!(o.status.code(), Some(2), "{:?}: {}", args, stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn spec_files_are_merged_or_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.kg");
    std::fs::write(&bad, "algebra bad { time Q; trans P; boost K; rot J }\n").unwrap();
    let o = kinegeo(&["verify", "--spec", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Q"), "{}", stderr(&o));

    let good = dir.path().join("good.kg");
    std::fs::write(&good, "algebra mine { time H; trans P; boost Kg; rot J }\ncontract d_+ -> mine { rule cc_over_l_fixed_inf; expect contracts }\n").unwrap();
    let o = kinegeo(&["verify", "--spec", good.to_str().unwrap(), "--only", "mine", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["catalog_version"], format!("kinegeo-{}+2user", env!("CARGO_PKG_VERSION")));
    assert!(v["checks"].as_array().unwrap().len() >= 2);
    let show = kinegeo(&["show", "algebra", "mine", "--spec", good.to_str().unwrap()]);
    assert_eq!(show.status.code(), Some(0));
    assert!(stdout(&show).starts_with("algebra mine"));
}

#[test]
fn show_and_dump() {
    let o = kinegeo(&["show", "geometry", "E_2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("g[0][0]"));
    let o = kinegeo(&["show", "algebra", "d+"]);
    assert!(stdout(&o).starts_with("algebra d_+"));
    let text = kinegeo(&["dump-catalog"]);
    assert_eq!(text.status.code(), Some(0));
    let json = kinegeo(&["dump-catalog", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["geometries"].as_array().unwrap().len(), 45);
    assert_eq!(stdout(&text), stdout(&kinegeo(&["dump-catalog"])));
}

#[test]
fn version_and_help() {
    let o = kinegeo(&["--version"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(env!("CARGO_PKG_VERSION")));
    let o = kinegeo(&["verify", "--help"]);
    assert!(stdout(&o).contains("--inject"));
}
