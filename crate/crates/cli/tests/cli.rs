//! End-to-end runs of the `arthur` binary over the fixtures directory.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use arthur_core::schema::{CensusDoc, GLDoc, MultiSegmentDoc, ParameterDoc, SequenceDoc, UnitaryDoc};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

struct Run {
    code: i32,
    stdout: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn arthur_with(args: &[&str], env: &[(&str, &str)], stdin: Option<&str>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_arthur"));
    cmd.args(args).env_remove("ARTHUR_CAP").stdin(Stdio::piped()).stdout(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
    }
}

fn arthur(command: &str, file: &str, extra: &[&str]) -> Run {
    let path = fixture(file);
    let mut args = vec![command, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    arthur_with(&args, &[], None)
}

#[test]
fn nonvanishing_of_the_so5_fixture() {
    let r = arthur("nonvanishing", "so5_e1.json", &[]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["nonzero"], true);
    assert_eq!(v["engine_version"], env!("CARGO_PKG_VERSION"));
}

#[test]
fn characters_of_the_two_so5_members() {
    let sign = |file| arthur("character", file, &[]).json()["character"][0]["sign"].clone();
    assert_eq!(sign("so5_e1.json"), 1);
    assert_eq!(sign("so5_e2.json"), -1);
}

#[test]
fn induction_from_the_trivial_group() {
    let r = arthur("induce", "empty.json", &["--rho", "chi", "--a", "2", "--b", "1"]);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["components"], 2);
    let signs: Vec<&Value> = v["constituents"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| &c["character"][0]["sign"])
        .collect();
    assert_eq!(signs, [1, -1]);
    assert_eq!(v["inserted_support"]["A"], "1/2");
    let three = arthur("induce", "empty.json", &["--rho", "chi", "--a", "3", "--b", "2"]);
    assert_eq!(three.json()["components"], 3);
}

#[test]
fn sign_counts_and_reducibility() {
    let v = arthur("sign-counts", "empty.json", &["--rho", "chi", "--a", "3", "--b", "2"]).json();
    assert_eq!((v["plus"].as_u64().unwrap() + v["minus"].as_u64().unwrap()), 3);
    let v = arthur("reducible", "empty.json", &["--rho", "chi", "--a", "2", "--b", "1"]).json();
    assert_eq!(v["reducible"], true);
}

#[test]
fn gl_constraint_cases() {
    for file in ["gl3_case_vi.json", "gl2_case_iii.json"] {
        let r = arthur("gl-constraint", file, &[]);
        assert_eq!(r.code, 0, "a violating verdict is still a computed result");
        let v = r.json();
        assert_eq!(v["ok"], false);
        assert_eq!(v["violations"], serde_json::json!([0]));
    }
}

#[test]
fn unitarity_verdicts() {
    for (file, unitary) in [
        ("unitary_gl2_iii.json", false),
        ("unitary_gl2_iii_doubled.json", true),
        ("unitary_gl3_vi.json", false),
    ] {
        let r = arthur("unitary", file, &[]);
        assert_eq!(r.code, 0);
        assert_eq!(r.json()["unitary"], unitary, "{file}");
    }
}

#[test]
fn census_and_sweep() {
    let v = arthur("census", "census_1_0.json", &[]).json();
    assert_eq!((v["subsets"].clone(), v["intervals"].clone()), (8.into(), 7.into()));
    assert_eq!(v["non_intervals"].as_array().unwrap().len(), 1);
    let v = arthur("sweep", "sweep_so5.json", &[]).json();
    assert_eq!(v["packet_size"], 2);
    assert_eq!(v["collisions"], serde_json::json!([]));
}

#[test]
fn orbits_of_sequences() {
    let v = arthur("orbit", "sequence_nested.json", &[]).json();
    assert_eq!(v["size"], 2);
    assert_eq!(v["nonvanishing"], true);
    assert_eq!(v["p2"], v["members"][1]);
}

#[test]
fn cap_exceeded_exits_with_three() {
    let path = fixture("sequence_nested.json");
    let args = ["orbit", path.to_str().unwrap()];
    let r = arthur_with(&args, &[("ARTHUR_CAP", "1")], None);
    assert_eq!(r.code, 3);
    assert_eq!(r.json()["error"]["kind"], "CapExceeded");
    let flag = arthur("orbit", "sequence_nested.json", &["--cap", "1"]);
    assert_eq!(flag.code, 3);
    let wins = arthur_with(&[args[0], args[1], "--cap", "10"], &[("ARTHUR_CAP", "1")], None);
    assert_eq!(wins.code, 0, "the flag overrides the environment");
}

#[test]
fn malformed_input_reports_kind_and_path() {
    let bad = r#"{"cuspidals": [], "group": {"kind": "SOodd", "n": "x"}, "rows": []}"#;
    let r = arthur_with(&["nonvanishing", "-"], &[], Some(bad));
    assert_eq!(r.code, 1);
    let e = &r.json()["error"];
    assert_eq!(e["kind"], "Schema");
    assert_eq!(e["path"], "group.n");
    assert!(e["message"].as_str().unwrap().contains("expected i64"));

    let r = arthur_with(&["nonvanishing", "-"], &[], Some("{"));
    assert_eq!((r.code, r.json()["error"]["kind"].clone()), (1, "Syntax".into()));

    let r = arthur("induce", "empty.json", &["--rho", "psi", "--a", "1", "--b", "1"]);
    assert_eq!((r.code, r.json()["error"]["path"].clone()), (1, "--rho".into()));

    let r = arthur_with(&["no-such-command"], &[], None);
    assert_eq!((r.code, r.json()["error"]["kind"].clone()), (1, "Usage".into()));
}

#[test]
fn vanishing_input_to_induce_is_an_input_error() {
    let nv = arthur("nonvanishing", "so9_vanishing.json", &[]);
    assert_eq!((nv.code, nv.json()["nonzero"].clone()), (0, false.into()));
    let ch = arthur("character", "so9_vanishing.json", &[]);
    assert_eq!((ch.code, ch.json()["character"].clone()), (0, Value::Null));
    let r = arthur("induce", "so9_vanishing.json", &["--rho", "chi", "--a", "2", "--b", "1"]);
    assert_eq!((r.code, r.json()["error"]["kind"].clone()), (1, "Vanishing".into()));
}

#[test]
fn output_bytes_are_deterministic() {
    let runs = [
        ("census", "census_1_0.json", vec![]),
        ("induce", "empty.json", vec!["--rho", "chi", "--a", "3", "--b", "2"]),
        ("sweep", "sweep_so5.json", vec![]),
        ("orbit", "sequence_nested.json", vec!["--pretty"]),
    ];
    for (cmd, file, extra) in runs {
        let first = arthur(cmd, file, &extra).stdout;
        for _ in 0..3 {
            assert_eq!(arthur(cmd, file, &extra).stdout, first, "{cmd} {file}");
        }
    }
}

#[test]
fn pretty_output_is_the_same_document() {
    let plain = arthur("sweep", "sweep_so5.json", &[]);
    let pretty = arthur("sweep", "sweep_so5.json", &["--pretty"]);
    assert!(pretty.stdout.lines().count() > 1 && plain.stdout.lines().count() == 1);
    assert_eq!(plain.json(), pretty.json());
}

fn round_trips<T: DeserializeOwned + Serialize>(path: &Path) -> bool {
    let text = std::fs::read_to_string(path).unwrap();
    let Ok(doc) = serde_json::from_str::<T>(&text) else {
        return false;
    };
    let original: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(serde_json::to_value(&doc).unwrap(), original, "{}", path.display());
    true
}

#[test]
fn every_fixture_round_trips_through_its_schema() {
    let dir = fixture("");
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("json") {
            continue;
        }
        let parsed = round_trips::<MultiSegmentDoc>(&path)
            || round_trips::<UnitaryDoc>(&path)
            || round_trips::<GLDoc>(&path)
            || round_trips::<ParameterDoc>(&path)
            || round_trips::<SequenceDoc>(&path)
            || round_trips::<CensusDoc>(&path);
        assert!(parsed, "{} matches no schema", path.display());
        seen += 1;
    }
    assert!(seen >= 10);
}
