use std::path::PathBuf;
use std::process::{Command, Output};

use foxbraid::presets::preset_representation;
use foxbraid::rings::{parse_element, RingDescriptor, RingSpec};
use foxbraid::{lm_reduced, BraidWord, Coloring, RingMatrix};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foxbraid"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("foxbraid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn lm_reduced_trefoil_text() {
    let o = run(&[
        "lm",
        "--braid",
        "s1^3",
        "--colors",
        "1,1",
        "--rep",
        "trefoil_burau",
        "--reduced",
    ]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "[ s*t^3  -s*t^3 + s^2*t^3 ]\n[ s*t^3            -s*t^3 ]\n"
    );
}

#[test]
fn lm_identity_braid() {
    let o = run(&[
        "lm",
        "--braid",
        "",
        "--colors",
        "1,1",
        "--rep",
        "trefoil_burau",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 4);
    assert!(text.starts_with("[ 1  0  0  0 ]"));
}

#[test]
fn lm_json_round_trips() {
    let o = run(&[
        "lm",
        "--braid",
        "s1 s2^-1 s1 s2^-1",
        "--rep",
        "fig8_cyclotomic12",
        "--reduced",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let spec: RingSpec = serde_json::from_value(v["ring"].clone()).unwrap();
    let ring = RingDescriptor::from_spec(&spec).unwrap();
    let rows: Vec<Vec<String>> = serde_json::from_value(v["matrix"].clone()).unwrap();
    let parsed = RingMatrix::from_literals(&ring, &rows).unwrap();
    let rep = preset_representation("fig8_cyclotomic12", None).unwrap();
    let b = BraidWord::parse("s1 s2^-1 s1 s2^-1", 3).unwrap();
    assert_eq!(
        parsed,
        lm_reduced(&rep, &Coloring::monochrome(3).unwrap(), &b).unwrap()
    );
}

#[test]
fn alexander_json_round_trips() {
    let o = run(&[
        "alexander",
        "--braid",
        "s1^3",
        "--rep",
        "trefoil_burau",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let spec: RingSpec = serde_json::from_value(v["ring"].clone()).unwrap();
    let ring = RingDescriptor::from_spec(&spec).unwrap();
    let p = |s: &Value| parse_element(s.as_str().unwrap(), &ring).unwrap();
    let lm = &v["longmoody"];
    assert_eq!(
        p(&lm["numerator"]),
        parse_element("1 - s^3*t^6", &ring).unwrap()
    );
    assert_eq!(
        p(&lm["simplified"]),
        parse_element("1 - s*t^2", &ring).unwrap()
    );
    assert_eq!(
        &p(&lm["simplified"]) * &p(&lm["denominator"]),
        p(&lm["numerator"])
    );
    assert_eq!(v["equal_up_to_unit"], Value::Bool(true));
}

#[test]
fn alexander_text_reports_verdict() {
    let o = run(&[
        "alexander",
        "--braid",
        "s1^3",
        "--colors",
        "1,1",
        "--rep",
        "trefoil_burau",
        "--via",
        "both",
    ]);
    let text = stdout(&o);
    assert!(o.status.success());
    assert!(text.contains("equal_up_to_unit: true"));
    assert!(text.contains("simplified: 1 - s*t^2"));
    let o = run(&[
        "alexander",
        "--braid",
        "s1 s2^-1 s1 s2^-1",
        "--rep",
        "fig8_f7",
    ]);
    assert!(stdout(&o).contains("simplified unit-normal: 1 + 2*t + t^2"));
}

#[test]
fn alexander_from_presentation_file() {
    // trefoil group with the trivial representation
    let path = scratch(
        "trefoil_presentation.json",
        r#"{
            "ring": "int",
            "generators": ["x1", "x2"],
            "relators": ["x1 x2 x1 x2^-1 x1^-1 x2^-1"],
            "variables": ["t"],
            "abelianization": ["t", "t"],
            "images": [[["1"]], [["1"]]]
        }"#,
    );
    let o = run(&[
        "alexander",
        "--presentation",
        path.to_str().unwrap(),
        "--via",
        "definition",
        "--format",
        "json",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ring = RingDescriptor::laurent(&RingDescriptor::integers(), &["t"]).unwrap();
    let num = parse_element(v["definition"]["numerator"].as_str().unwrap(), &ring).unwrap();
    let den = parse_element(v["definition"]["denominator"].as_str().unwrap(), &ring).unwrap();
    assert!(num.equal_up_to_unit(&parse_element("t^2 - t + 1", &ring).unwrap()));
    assert!(den.equal_up_to_unit(&parse_element("t - 1", &ring).unwrap()));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| run(args).status.code().unwrap();
    // parse error, with position
    let o = run(&["lm", "--braid", "s1^", "--colors", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position"));
    // coloring violation
    assert_eq!(code(&["lm", "--braid", "s1", "--colors", "1,2"]), 3);
    assert_eq!(code(&["lm", "--braid", "s1", "--colors", "1,3"]), 3);
    // invalid representation lists the violated relation
    let bad = scratch(
        "bad_rep.json",
        r#"{"n": 2, "k": 1, "ring": "int", "sigma": [[["1"]]], "x": [[["1"]], [["-1"]]]}"#,
    );
    let o = run(&["lm", "--braid", "s1", "--rep", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("semidirect relation"));
    // representation not factoring through the closure
    let o = run(&["alexander", "--braid", "s1", "--rep", "trefoil_burau"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not factor through the closure"));
    // usage errors
    assert_eq!(code(&["preset", "torus2q", "--q", "4"]), 2);
    assert_eq!(code(&["preset", "torus2q", "--q", "5", "--r", "2"]), 2);
    assert_eq!(code(&["preset", "nope"]), 2);
    assert_eq!(code(&["preset", "trefoil_burau"]), 0);
    assert_eq!(code(&["preset", "torus2q", "--q", "5", "--r", "1"]), 0);
}

#[test]
fn sweep_is_ordered() {
    let o = Command::new(env!("CARGO_BIN_EXE_foxbraid"))
        .args(["preset", "torus2q", "--q", "7", "--sweep"])
        .env("FOXBRAID_THREADS", "3")
        .output()
        .unwrap();
    assert!(o.status.success());
    let heads: Vec<String> = stdout(&o)
        .lines()
        .filter(|l| l.starts_with("preset"))
        .map(String::from)
        .collect();
    assert_eq!(
        heads,
        [
            "preset torus2q(q=7, r=1)",
            "preset torus2q(q=7, r=3)",
            "preset torus2q(q=7, r=5)"
        ]
    );
}
