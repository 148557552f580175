use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, Output};

use foamcalc::linkcx::{euler_char, ColoredDiagram};
use foamcalc::symcore::LaurentPoly;
use foamcalc::webmoy::Web;

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foamcalc")).args(args).output().unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout).unwrap().trim_end().to_string()
}

fn laurent(json: &str) -> LaurentPoly {
    let m: BTreeMap<String, i64> = serde_json::from_str(json).unwrap();
    LaurentPoly::from_json_map(&m).unwrap()
}

fn scratch(name: &str, body: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.display().to_string()
}

#[test]
fn lr_examples() {
    assert_eq!(ok(&["lr", "[1]", "[1]"]), "[1,1]: 1\n[2]: 1");
    assert!(ok(&["lr", "[2,1]", "[2,1]"]).lines().any(|l| l == "[3,2,1]: 2"));
    assert_eq!(ok(&["lr", "[]", "[3]"]), "[3]: 1");
    assert_eq!(ok(&["lr", "[2,1]", "[2,1]", "--rows", "2"]), "[3,3]: 1\n[4,2]: 1");
    let j: BTreeMap<String, u64> = serde_json::from_str(&ok(&["lr", "[1]", "[1]", "--format", "json"])).unwrap();
    assert_eq!(j, [("[1,1]".to_string(), 1), ("[2]".to_string(), 1)].into());
}

#[test]
fn euler_and_deformed() {
    let unknot = corpus("unknot2.json");
    assert_eq!(ok(&["euler", &unknot, "--N", "3"]), "q^-2 + 1 + q^2");
    let hopf = corpus("hopf.json");
    assert_eq!(ok(&["deformed", &hopf, "--N", "2", "--sigma", "1,-1"]), "2 + 2t^2");
    // JSON output re-parses to the library value
    let trefoil = corpus("trefoil.json");
    let j = ok(&["euler", &trefoil, "--N", "2", "--format", "json"]);
    let d = ColoredDiagram::from_json(&std::fs::read_to_string(&trefoil).unwrap()).unwrap();
    assert_eq!(laurent(&j), euler_char(&d, 2).unwrap());
    let j = ok(&["deformed", &hopf, "--sigma", "1,-1", "--format", "json"]);
    assert_eq!(laurent(&j).to_string(), "2 + 2t^2");
}

#[test]
fn webs_round_trip() {
    let circle = scratch("circle2.json", &Web::circle(2).to_json());
    assert_eq!(ok(&["moy", &circle, "--N", "3"]), "q^-2 + 1 + q^2");
    assert_eq!(laurent(&ok(&["hom-dim", &circle, &circle, "--N", "3", "--format", "json"])).min_q(), Some(-4));
    let hopf = corpus("hopf.json");
    let text = ok(&["simple-res", &hopf]);
    let w = Web::from_json(&text).unwrap();
    assert_eq!(w.to_json(), text);
    let j: serde_json::Value = serde_json::from_str(&ok(&["simple-res", &hopf, "--format", "json"])).unwrap();
    assert_eq!(Web::from_json(&j.to_string()).unwrap(), w);
}

#[test]
fn grassmann_commands() {
    assert_eq!(ok(&["grassmann", "mult", "-a", "1", "--N", "2", "--sigma", "1,2", "s[1]", "s[1]"]), "(-2)*s[] + (3)*s[1]");
    assert_eq!(ok(&["grassmann", "trace", "-a", "2", "--N", "3", "s[1,1]"]), "-1");
    assert_eq!(ok(&["grassmann", "idempotents", "-a", "1", "--N", "3"]).lines().count(), 3);
}

#[test]
fn verify_reports_all_pass() {
    let text = ok(&["verify", "--max-label", "3", "--N", "6"]);
    assert!(text.ends_with("all 100% pass"), "{text}");
    let j: serde_json::Value = serde_json::from_str(&ok(&["verify", "--N", "6", "--format", "json"])).unwrap();
    assert_eq!(j["failed"], 0);
    assert!(j["cases"].as_array().unwrap().len() > 200);
    assert!(ok(&["reidemeister-scalars", "--N", "3", "--max-label", "2"]).lines().count() > 10);
}

#[test]
fn deterministic_output() {
    for args in [
        vec!["verify", "--N", "6", "--format", "json", "--seed", "7"],
        vec!["lr", "[3,2,1]", "[2,1]", "--format", "json"],
        vec!["reidemeister-scalars", "--N", "4", "--format", "json"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}

#[test]
fn errors_exit_nonzero() {
    let hopf = corpus("hopf.json");
    let unknot = corpus("unknot2.json");
    let bad = scratch("bad.json", "{\"components\": [\n");
    for (args, needle) in [
        (vec!["deformed", hopf.as_str(), "--sigma", "1,1"], "distinct"),
        (vec!["euler", unknot.as_str(), "--N", "1"], "exceeds"),
        (vec!["euler", bad.as_str()], "line 2"),
        (vec!["lr", "[2,1", "[1]"], "partition"),
        (vec!["verify", "--max-label", "4", "--N", "3"], ""),
    ] {
        let o = run(&args);
        assert!(!o.status.success(), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains(needle), "{args:?}");
    }
}
