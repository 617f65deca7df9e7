use std::path::Path;
use std::process::{Command, Output};
use std::time::Instant;

fn qfasym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qfasym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn row_value(json: &str, measure: &str) -> f64 {
    let v: serde_json::Value = serde_json::from_str(json).unwrap();
    v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["measure"] == measure)
        .and_then(|r| r["value"].as_f64())
        .unwrap_or_else(|| panic!("{measure} missing in {json}"))
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

#[test]
fn bell_state_file_gives_three_halves() {
    let dir = tempfile::tempdir().unwrap();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let bell = write(
        dir.path(),
        "bell.json",
        &format!(r#"{{"kind":"pure","dims":[2,2],"data":[[{s},0],[0,0],[0,0],[{s},0]]}}"#),
    );
    let out = qfasym(&["compute", "--input", &bell]);
    assert!(out.status.success());
    let json = stdout(&out);
    assert!((row_value(&json, "q_total") - 1.5).abs() < 1e-9);
    assert!((row_value(&json, "q_side_a") - 0.75).abs() < 1e-9);
    assert!((row_value(&json, "asymmetry_bipartite") - 1.5).abs() < 1e-9);

    let csv = stdout(&qfasym(&[
        "compute",
        "--input",
        &bell,
        "--format",
        "csv",
        "--measure",
        "q",
    ]));
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let rows: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(&rows[0][0], "q_total");
}

#[test]
fn product_state_file_gives_zero() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "prod.json",
        r#"{"kind":"density","dims":[2,2],"data":[
            [[0.375,0],[0.125,0],[0,0],[0,0]],
            [[0.125,0],[0.375,0],[0,0],[0,0]],
            [[0,0],[0,0],[0.125,0],[0.0416666666666666667,0]],
            [[0,0],[0,0],[0.0416666666666666667,0],[0.125,0]]]}"#,
    );
    let out = qfasym(&["compute", "--input", &file, "--measure", "q"]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(row_value(&stdout(&out), "q_total").abs() < 1e-10);
}

#[test]
fn input_errors_exit_with_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"kind\": \"density\", ");
    let out = qfasym(&["compute", "--input", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed JSON"));

    let not_psd = write(
        dir.path(),
        "neg.json",
        r#"{"kind":"density","dims":[2],"data":[[[1.5,0],[0,0]],[[0,0],[-0.5,0]]]}"#,
    );
    let out = qfasym(&["compute", "--input", &not_psd, "--partition", "1x2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("positive semidefinite"));

    let mixed = stdout(&qfasym(&["make", "random", "--dims", "2x2", "--seed", "1"]));
    let file = write(dir.path(), "r.json", &mixed);
    let out = qfasym(&["compute", "--input", &file, "--partition", "3x2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = qfasym(&[
        "compute",
        "--input",
        &dir.path().join("missing.json").to_string_lossy(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn make_families() {
    let a = qfasym(&["make", "random", "--dims", "2x3", "--seed", "7"]);
    let b = qfasym(&["make", "random", "--dims", "2x3", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);

    let werner = stdout(&qfasym(&["make", "werner", "--w", "1"]));
    let v: serde_json::Value = serde_json::from_str(&werner).unwrap();
    assert_eq!(v["kind"], "density");
    assert!((v["data"][1][2][0].as_f64().unwrap() + 0.5).abs() < 1e-15);

    let zero = stdout(&qfasym(&["make", "bell-diagonal", "--c", "0,0,0"]));
    let v: serde_json::Value = serde_json::from_str(&zero).unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let expected = if i == j { 0.25 } else { 0.0 };
            assert_eq!(v["data"][i][j][0].as_f64().unwrap(), expected);
        }
    }

    let bad = qfasym(&["make", "bell-diagonal", "--c", "0.25,0.25,0.25"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("beta"));

    let dir = tempfile::tempdir().unwrap();
    let ghz = dir.path().join("ghz.json");
    let out = qfasym(&[
        "make",
        "ghz",
        "--parties",
        "3",
        "--out",
        ghz.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let q = qfasym(&[
        "compute",
        "--input",
        ghz.to_str().unwrap(),
        "--partition",
        "2x4",
        "--measure",
        "q",
    ]);
    assert!(q.status.success());
    assert!(row_value(&stdout(&q), "q_total") > 0.0);
}

#[test]
fn qfi_documented_examples() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]", 0.0),
        ("[[[1,0],[0,0]],[[0,0],[0,0]]]", 1.0),
        ("[[[0.75,0],[0,0]],[[0,0],[0.25,0]]]", 0.25),
    ];
    for (k, (data, expected)) in cases.iter().enumerate() {
        let file = write(
            dir.path(),
            &format!("s{k}.json"),
            &format!(r#"{{"kind":"density","dims":[2],"data":{data}}}"#),
        );
        let out = qfasym(&["qfi", "--input", &file, "--observable", "X"]);
        assert!(out.status.success());
        let json = stdout(&out);
        assert!((row_value(&json, "qfi") - expected).abs() < 1e-12);
        assert!(row_value(&json, "sld_residual") < 1e-12);
    }
    let sx = write(dir.path(), "sx.json", "[[[0,0],[1,0]],[[1,0],[0,0]]]");
    let file = dir.path().join("s1.json");
    let out = qfasym(&[
        "qfi",
        "--input",
        file.to_str().unwrap(),
        "--observable-file",
        &sx,
    ]);
    assert!((row_value(&stdout(&out), "variance") - 1.0).abs() < 1e-12);

    let out = qfasym(&[
        "qfi",
        "--input",
        file.to_str().unwrap(),
        "--observable",
        "XX",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn werner_sweep_endpoints() {
    let out = qfasym(&[
        "sweep", "werner", "--from", "0", "--to", "1", "--steps", "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let q: Vec<f64> = reader
        .records()
        .map(|r| r.unwrap()[1].parse().unwrap())
        .collect();
    assert!(q[0].abs() < 1e-12);
    assert!((q[1] - 0.5).abs() < 1e-9);
    assert!((q[2] - 1.5).abs() < 1e-9);

    let out = qfasym(&[
        "sweep", "werner", "--from", "-1", "--to", "0", "--steps", "2",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn check_smoke_mode() {
    let start = Instant::now();
    let out = qfasym(&["check", "--trials", "1"]);
    assert!(start.elapsed().as_secs_f64() < 5.0);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(!text.contains("FAIL"));
    let section = text.split("known discrepancies").nth(1).unwrap();
    assert_eq!(section.lines().filter(|l| l.starts_with("  ")).count(), 3);

    let json = stdout(&qfasym(&[
        "check", "--trials", "1", "--suite", "qfi", "--format", "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["discrepancies"].as_array().unwrap().len(), 3);
    assert!(v["properties"]
        .as_array()
        .unwrap()
        .iter()
        .all(|p| p["passed"] == true));
}
