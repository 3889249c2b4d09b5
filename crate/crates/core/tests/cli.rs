//! The command-line interface, driven in-process.

use matroid_workbench::cli::run;
use matroid_workbench::poly::BivariatePolynomial;
use serde_json::Value;

const FANO: &str = r#"{"type":"linear","field":"GF(2)","matrix":[[1,0,0,0,1,1,1],[0,1,0,1,0,1,1],[0,0,1,1,1,0,1]]}"#;
const U23: &str = r#"{"type":"uniform","r":2,"n":3}"#;
const K4: &str = r#"{"type":"graphic","edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn invoke(args: &[&str], stdin: &str) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("matroid-workbench").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(o: &Outcome) -> Value {
    assert_eq!(o.code, 0, "stderr: {}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

#[test]
fn tutte_output_is_exact() {
    let o = invoke(&["tutte"], U23);
    assert_eq!(
        o.stdout.trim(),
        r#"{"terms":[{"x":2,"y":0,"c":"1"},{"x":1,"y":0,"c":"1"},{"x":0,"y":1,"c":"1"}]}"#
    );
}

#[test]
fn polynomial_json_round_trips() {
    for input in [U23, FANO, K4] {
        let o = invoke(&["tutte"], input);
        let value = json(&o);
        let parsed = BivariatePolynomial::from_json(&value).unwrap();
        assert_eq!(format!("{}\n", parsed.to_json()), o.stdout);
        let h = json(&invoke(&["hlv"], input));
        let parsed = BivariatePolynomial::from_json(&h["h"]).unwrap();
        assert_eq!(parsed.to_json(), h["h"]);
    }
}

#[test]
fn os_dims_of_fano() {
    assert_eq!(invoke(&["os-dims"], FANO).stdout.trim(), "[1,7,14,8]");
    assert_eq!(
        invoke(&["os-dims", "--field", "GF(3)"], FANO).stdout.trim(),
        "[1,7,14,8]"
    );
}

#[test]
fn charpoly_and_bases_commands() {
    let c = json(&invoke(&["charpoly"], FANO));
    assert_eq!(c["reduced"]["terms"][1]["c"], "-6");
    let b = json(&invoke(&["os-basis", "--degree", "1"], U23));
    assert_eq!(b["degrees"][0]["basis"], serde_json::json!([[0], [1], [2]]));
    let r = json(&invoke(&["reduced-os-basis", "--degree", "2"], FANO));
    assert_eq!(
        r["degrees"][0]["index_sets"],
        serde_json::json!([[1, 2], [1, 3], [1, 4], [1, 6], [2, 5], [2, 6], [3, 4], [3, 5]])
    );
}

#[test]
fn euler_and_white_reports() {
    let e = json(&invoke(&["euler-table"], U23));
    assert_eq!(e["matches_h_polynomial"], true);
    let w = json(&invoke(&["white-check", "--degree", "3"], K4));
    assert_eq!(w["all_connected"], true);
    assert_eq!(w["verdict"], "no degree-3 minimal generators");
    assert_eq!(w["multisets"], 816);
}

#[test]
fn descriptor_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fano.json");
    std::fs::write(&path, FANO).unwrap();
    let o = invoke(&["os-dims", "--input", path.to_str().unwrap()], "");
    assert_eq!(o.stdout.trim(), "[1,7,14,8]");
}

#[test]
fn exit_codes() {
    assert_eq!(invoke(&["tutte"], "not json").code, 2);
    assert_eq!(invoke(&["tutte"], r#"{"type":"uniform","r":3,"n":2}"#).code, 2);
    assert_eq!(
        invoke(&["os-dims"], r#"{"type":"linear","field":"Q","matrix":[[1,0]]}"#).code,
        2
    );
    assert_eq!(invoke(&["os-dims", "--field", "GF(4)"], U23).code, 2);
    assert_eq!(invoke(&["tutte", "--degree", "3"], U23).code, 2);
    assert_eq!(invoke(&["frobnicate"], U23).code, 2);
    assert_eq!(invoke(&["tutte", "--input", "/nonexistent/file"], "").code, 2);
    let o = invoke(&["euler-table", "--budget", "10"], FANO);
    assert_eq!(o.code, 3);
    assert!(o.stderr.contains("too large"));
    assert_eq!(invoke(&["white-check", "--budget", "10"], FANO).code, 3);
    assert_eq!(invoke(&["--help"], "").code, 0);
}

#[test]
fn failed_corpus_entry_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corpus.json");
    std::fs::write(
        &path,
        r#"{"entries":[{"name":"bad","descriptor":{"type":"uniform","r":1,"n":2},
            "expected":[{"quantity":"bases","value":3,"provenance":"TRIVIAL"}]}]}"#,
    )
    .unwrap();
    let o = invoke(&["verify-corpus", "--input", path.to_str().unwrap()], "");
    assert_eq!(o.code, 4);
    let report: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(report["entries"][0]["passed"], false);
}

#[test]
fn verify_corpus_passes() {
    let report = json(&invoke(&["verify-corpus"], ""));
    assert_eq!(report["all_passed"], true);
    assert!(report["entries"].as_array().unwrap().len() >= 12);
}

#[test]
fn jobs_do_not_change_output() {
    for (args, input) in [
        (&["tutte"][..], FANO),
        (&["euler-table"][..], U23),
        (&["white-check", "--degree", "3"][..], K4),
        (&["reduced-os-basis"][..], FANO),
    ] {
        let one = invoke(&[args, &["--jobs", "1"]].concat(), input);
        let eight = invoke(&[args, &["--jobs", "8"]].concat(), input);
        assert_eq!(one.code, 0);
        assert_eq!(one.stdout, eight.stdout, "{args:?}");
    }
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let plain = invoke(&["tutte"], K4);
    let cold = invoke(&["tutte", "--cache", cache], K4);
    let files = std::fs::read_dir(dir.path()).unwrap().count();
    assert!(files > 0);
    let warm = invoke(&["tutte", "--cache", cache], K4);
    assert_eq!(plain.stdout, cold.stdout);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), files);
}

#[test]
fn binary_reads_cache_directory_from_environment() {
    use std::io::Write;
    use std::process::{Command, Stdio};
    let dir = tempfile::tempdir().unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_matroid-workbench"))
        .arg("tutte")
        .env(matroid_workbench::cli::CACHE_ENV, dir.path())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(K4.as_bytes()).unwrap();
    let output = child.wait_with_output().unwrap();
    assert!(output.status.success());
    assert_eq!(String::from_utf8(output.stdout).unwrap(), invoke(&["tutte"], K4).stdout);
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
}
