use std::process::{Command, Output};

fn bgrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bgrank"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .trim_end()
        .to_string()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = bgrank(&full);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", stdout(&o)))
}

#[test]
fn bgrank_command() {
    let o = bgrank(&["bgrank", "4+3+3+1+1+1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-1");
    assert_eq!(stdout(&bgrank(&["bgrank", "0"])), "0");
    let o = bgrank(&["bgrank", "--check", "3,2,1"]);
    assert!(stdout(&o).starts_with("2\n"));
    assert_eq!(json(&["bgrank", "--check", "3+2+1"])["agree"], true);
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        &["bgrank", "1+2"][..],
        &["bgrank", "x"],
        &["core", "3+0"],
        &["decompose", "2+3"],
        &["compose", "1", "1+2", "0"],
        &["count", "pj", "13"],
        &["count", "p", "50", "--method", "enumerate"],
        &["count", "pj", "41", "1", "--method", "enumerate"],
        &["series", "--factors", "0:1"],
        &["verify", "nonsense"],
        &["verify", "refined", "--enum-bound", "41"],
    ] {
        let o = bgrank(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn core_and_bijection_commands() {
    assert_eq!(stdout(&bgrank(&["core", "4+3+3+1+1+1"])), "2+1");
    assert_eq!(stdout(&bgrank(&["compose", "3", "0", "0"])), "3+2+1");
    assert_eq!(
        stdout(&bgrank(&["decompose", "2+2"])),
        r#"{"core_height":0,"q0":"1","q1":"1"}"#
    );
    let d = json(&["decompose", "4+3+3+1+1+1"]);
    let back = bgrank(&[
        "compose",
        &d["core_height"].to_string(),
        d["q0"].as_str().unwrap(),
        d["q1"].as_str().unwrap(),
    ]);
    assert_eq!(stdout(&back), "4+3+3+1+1+1");
    assert_eq!(json(&["core", "2+2"])["core_height"], 0);
}

#[test]
fn count_command() {
    assert_eq!(stdout(&bgrank(&["count", "pj", "13", "-1"])), "36");
    assert_eq!(
        stdout(&bgrank(&["count", "pj", "13", "-1", "--method", "both"])),
        "36"
    );
    assert_eq!(
        stdout(&bgrank(&[
            "count",
            "pj",
            "13",
            "-1",
            "--method",
            "enumerate"
        ])),
        "36"
    );
    assert_eq!(stdout(&bgrank(&["count", "pp", "5"])), "36");
    assert_eq!(stdout(&bgrank(&["count", "p", "0"])), "1");
    assert_eq!(stdout(&bgrank(&["count", "p", "-4"])), "0");
    let v = json(&["count", "pj", "13", "-1"]);
    assert_eq!(v, serde_json::json!({"n": 13, "j": -1, "count": "36"}));
    // counts beyond 64 bits stay exact strings
    let big = json(&["count", "p", "1000"]);
    assert_eq!(big["count"], "24061467864032622473692149727991");
}

#[test]
fn series_command() {
    let v = json(&["series", "--factors", "1:-2", "--order", "5"]);
    assert_eq!(
        v["coeffs"],
        serde_json::json!(["1", "2", "5", "10", "20", "36"])
    );
    assert_eq!(v["modulus"], serde_json::Value::Null);
    let v = json(&[
        "series",
        "--factors",
        "1:-2",
        "--order",
        "5",
        "--modulus",
        "5",
    ]);
    assert_eq!(
        v["coeffs"],
        serde_json::json!(["1", "2", "0", "0", "0", "1"])
    );
    assert_eq!(v["modulus"], 5);
    assert_eq!(
        stdout(&bgrank(&["series", "--jacobi", "--order", "6"])),
        "1 -3 0 5 0 0 -7"
    );
}

#[test]
fn verify_command() {
    let o = bgrank(&["verify", "fifteen-pairs"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS fifteen-pairs"));
    assert_eq!(
        bgrank(&["verify", "pp-mod5", "--max-n", "2000"])
            .status
            .code(),
        Some(0)
    );
    let v = json(&["verify", "reduction", "--max-n", "100"]);
    assert_eq!(v["family"], "reduction");
    assert_eq!(v["range"], 100);
    assert_eq!(v["passed"], true);
}

#[test]
fn falsified_check_exits_1_with_counterexample() {
    let o = bgrank(&[
        "verify",
        "residue-class",
        "--kind",
        "p",
        "--offset",
        "3",
        "--max-n",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("n=3 value=3"));
    let o = bgrank(&[
        "--json",
        "verify",
        "residue-class",
        "--kind",
        "pp",
        "--offset",
        "1",
        "--max-n",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
    // pp(1) = 2
    assert_eq!(
        v["failures"][0],
        serde_json::json!({"n": 1, "j": null, "value": "2"})
    );
}
