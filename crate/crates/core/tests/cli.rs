use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torus-skein")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn chebyshev_three() {
    let o = run(&["chebyshev", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "s^3 - 3*s");
}

#[test]
fn trefoil_character_variety() {
    let o = run(&["char-variety", "2", "3", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let irreducible: Vec<_> = v["components"].as_array().unwrap().iter().filter(|c| c["kind"] != "abelian").collect();
    assert_eq!(irreducible.len(), 1);
    assert_eq!((irreducible[0]["k"].as_u64(), irreducible[0]["l"].as_u64()), (Some(1), Some(1)));
    assert!(stdout(&run(&["char-variety", "2", "3"])).contains("(k,l) = (1,1)"));
}

#[test]
fn trace_poly() {
    assert_eq!(stdout(&run(&["trace-poly", "2", "1"])).trim(), "x*z - y");
}

#[test]
fn verify_trefoil_is_deterministic() {
    let a = run(&["verify", "2", "3"]);
    let b = run(&["verify", "2", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("seed = "));
    let j1 = run(&["verify", "2", "3", "--json", "--seed", "5"]);
    let j2 = run(&["verify", "2", "3", "--json", "--seed", "5"]);
    assert_eq!(j1.stdout, j2.stdout);
    let report: serde_json::Value = serde_json::from_slice(&j1.stdout).unwrap();
    assert_eq!(report["config"], serde_json::json!({ "p": 2, "q": 3 }));
    for check in report["checks"].as_array().unwrap() {
        assert_eq!(check["pass"], true, "{check}");
        assert_eq!(check["ms"], 0);
    }
}

#[test]
fn thread_override_does_not_change_output() {
    let plain = run(&["verify", "2", "5", "--json"]);
    let single = Command::new(env!("CARGO_BIN_EXE_torus-skein"))
        .args(["verify", "2", "5", "--json"])
        .env("TORUS_SKEIN_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(plain.stdout, single.stdout);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["chebyshev", "minus"]).status.code(), Some(2));
    let bad = run(&["verify", "4", "6"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("coprime"));
    assert_eq!(run(&["bracket", "/nonexistent/tangle.json"]).status.code(), Some(2));
}

#[test]
fn bracket_of_a_kinked_arc() {
    let path = std::env::temp_dir().join(format!("torus-skein-kink-{}.json", std::process::id()));
    let tangle = r#"{"endpoints": 2, "slices": [
        {"op":"cup","pos":1}, {"op":"crossing","pos":0,"sign":1}, {"op":"cap","pos":1}, {"op":"cap","pos":0}
    ]}"#;
    std::fs::write(&path, tangle).unwrap();
    let o = run(&["bracket", path.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "(-A^3)*[(0,1)]");
    let j = run(&["bracket", path.to_str().unwrap(), "--json"]);
    let records: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(records[0]["coeff"], "-A^3");
    assert_eq!(records[0]["windings"], serde_json::json!([0]));
    std::fs::remove_file(path).ok();
}

#[test]
fn skein_basis_listing() {
    let o = run(&["skein-basis", "2", "3", "--degree", "0", "--bound", "5"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 5);
    assert!(lines[4].contains("d=5"));
    let k = run(&["skein-basis", "3", "5", "--degree", "2", "--json"]);
    let items: serde_json::Value = serde_json::from_slice(&k.stdout).unwrap();
    assert_eq!(items.as_array().unwrap().len(), 4);
    assert_eq!(items[0]["trace"], "z^2");
}
