use std::path::PathBuf;
use std::process::{Command, Output};

fn aqsc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_aqsc"))
        .args(args)
        .env_remove("AQSC_FORMAT")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

#[test]
fn params_examples() {
    let o = aqsc(&["params", "--non-orientable", "-g", "5", "-p", "3", "-q", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[[63, 5, 7/4]]"));

    let o = aqsc(&["params", "--non-orientable", "-g", "9", "-p", "5", "-q", "8"]);
    assert!(stdout(&o).contains("[[20, 9, 3/2]]"));

    let o = aqsc(&["params", "--orientable", "-g", "1", "-p", "4", "-q", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("NotHyperbolic"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(
        aqsc(&["params", "-g", "5", "-p", "3", "-q", "7"]).status.code(),
        Some(1)
    );
    assert_eq!(aqsc(&["tables", "9"]).status.code(), Some(1));
    assert_eq!(
        aqsc(&["figures", "5", "--g-min", "4", "--g-max", "4"]).status.code(),
        Some(1)
    );
    assert_eq!(aqsc(&["oracle", "toric", "1"]).status.code(), Some(1));
    assert_eq!(aqsc(&["--help"]).status.code(), Some(0));
}

#[test]
fn confirm_marks_oracle_provenance() {
    let o = aqsc(&[
        "-f",
        "json",
        "params",
        "--orientable",
        "-g",
        "2",
        "-p",
        "8",
        "-q",
        "8",
        "--confirm",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"provenance\": \"oracle\""));
}

#[test]
fn tables_listing() {
    let o = aqsc(&["-f", "csv", "tables", "1"]);
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "p,q,n_f,l_pq,n,k,d_z,d_x");
    assert_eq!(lines.len(), 1 + 18);
    assert_eq!(lines[1], "3,7,42,1.0905,63,5,7,4");
    assert_eq!(lines[2], "7,3,18,0.5663,,,,");

    let t2 = stdout(&aqsc(&["tables", "2"]));
    assert!(t2
        .lines()
        .any(|l| l.starts_with("| {14, 4} ") && l.contains("[[14, 7, 3/2]]")));
    assert!(t2.contains("{3, 21} printed as [[21, 7, 4/2]]"));

    let t3 = stdout(&aqsc(&["-f", "json", "tables", "3"]));
    assert_eq!(t3.matches("\"printed_single_bracket\": true").count(), 1);

    let t5 = stdout(&aqsc(&["tables", "5"]));
    assert_eq!(
        t5.lines()
            .filter(|l| l.starts_with("| {") && !l.starts_with("| {p"))
            .count(),
        7
    );
    assert!(t5.contains("[[21(g - 2), g, d_z/d_x]]"));
}

#[test]
fn figure_series() {
    let six = stdout(&aqsc(&["-f", "csv", "figures", "6", "--g-max", "11"]));
    let gaps: Vec<_> = six
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().to_string())
        .collect();
    assert_eq!(gaps, ["3", "4", "4", "5"]);

    let five = stdout(&aqsc(&["-f", "json", "figures", "5"]));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&five).unwrap();
    assert_eq!(rows.len(), 7 * 14);
    for r in rows {
        let g = r["genus"].as_i64().unwrap();
        assert_eq!(r["ratio"], format!("{}/{}", g - 2, g - 1));
        assert!(r["r2_value"].as_f64().unwrap() > r["r1_value"].as_f64().unwrap());
    }
}

#[test]
fn verify_suites() {
    let o = aqsc(&["verify", "theorems", "--h-max", "6", "--pq-max", "15"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = aqsc(&["verify", "oracle", "--toric-max", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let o = aqsc(&["-f", "json", "verify", "tables"]);
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["failures"], 1);
    assert_eq!(o.status.code(), Some(3));
    let failed: Vec<_> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .collect();
    assert_eq!(failed[0]["name"], "table 2 {3, 21} record");
}

#[test]
fn enumerate_examples() {
    let t2 = stdout(&aqsc(&[
        "-f",
        "csv",
        "enumerate",
        "--non-orientable",
        "-g",
        "7",
        "--max",
        "21",
    ]));
    for row in [
        "3,7,70,", "7,3,30,", "3,21,14,", "21,3,2,", "4,14,7,", "14,4,2,", "4,6,15,",
    ] {
        assert!(t2.lines().any(|l| l.starts_with(row)), "{row}");
    }
    let t4 = stdout(&aqsc(&[
        "-f",
        "csv",
        "enumerate",
        "--non-orientable",
        "-g",
        "11",
        "--max",
        "12",
    ]));
    assert!(t4.lines().any(|l| l.starts_with("6,12,")));
    let torus = stdout(&aqsc(&[
        "-f",
        "json",
        "enumerate",
        "--orientable",
        "-g",
        "1",
        "--max",
        "30",
    ]));
    assert_eq!(torus.trim(), "[]");
    let rated = stdout(&aqsc(&[
        "-f",
        "csv",
        "enumerate",
        "--non-orientable",
        "-g",
        "7",
        "--min-rate",
        "0.3",
    ]));
    for line in rated.lines().skip(1) {
        let f: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        assert!(f[5] / f[4] >= 0.3);
    }
}

#[test]
fn oracle_commands() {
    let o = stdout(&aqsc(&["-f", "json", "oracle", "toric", "3"]));
    let v: serde_json::Value = serde_json::from_str(&o).unwrap();
    assert_eq!(
        (v["n"].as_u64(), v["k"].as_u64(), v["d_x"].as_u64(), v["d_z"].as_u64()),
        (Some(18), Some(2), Some(3), Some(3))
    );

    let o = stdout(&aqsc(&["-f", "json", "oracle", "file", &fixture("klein3.txt")]));
    let v: serde_json::Value = serde_json::from_str(&o).unwrap();
    assert_eq!(
        (v["euler_characteristic"].as_i64(), v["k"].as_u64()),
        (Some(0), Some(2))
    );

    let dumped = stdout(&aqsc(&["oracle", "klein", "3", "--dump"]));
    assert_eq!(dumped, std::fs::read_to_string(fixture("klein3.txt")).unwrap());

    let bad = aqsc(&["oracle", "file", &fixture("open.txt")]);
    assert_eq!(bad.status.code(), Some(2));
    let missing = aqsc(&["oracle", "file", "/nonexistent/complex.txt"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["tables", "4"][..],
        &["-f", "json", "figures", "5"],
        &["-f", "csv", "enumerate", "--orientable", "-g", "3"],
    ] {
        assert_eq!(aqsc(args).stdout, aqsc(args).stdout);
    }
}

#[test]
fn format_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_aqsc"))
        .args(["params", "--non-orientable", "-g", "5", "-p", "3", "-q", "7"])
        .env("AQSC_FORMAT", "csv")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "p,q,n_f,l_pq,n,k,d_z,d_x\n3,7,42,1.0905,63,5,7,4\n");
}
