use std::io::Cursor;

use serde_json::Value;
use unexpected_curves::cli::{run_with, EXIT_INCONCLUSIVE, EXIT_INVALID, EXIT_OK};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn run(args: &[&str], stdin: &str) -> Output {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("unexpected").chain(args.iter().copied());
    let code = run_with(argv, &mut input, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", o.stdout))
}

#[test]
fn generate_b3_then_certify_from_stdin() {
    let doc = run(&["generate", "--family", "b3"], "");
    assert_eq!(doc.code, EXIT_OK, "{}", doc.stderr);
    let r = run(&["--json", "certify", "-"], &doc.stdout);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let v = json(&r);
    assert_eq!(v["verdict"]["admits"], true);
    assert_eq!(v["verdict"]["interval"]["low"], 3);
    assert_eq!(v["verdict"]["interval"]["high"], 4);
    assert_eq!(v["verdict"]["splitting"], serde_json::json!([3, 5]));
    assert_eq!(v["verdict"]["curve"]["irreducibility"], "unverified");
    assert!(v["verdict"]["curve"]["point"].is_array());
    let text = run(&["certify", "-"], &doc.stdout);
    assert!(text.stdout.contains("interval (3,4]"), "{}", text.stdout);
}

#[test]
fn analyze_p6bar() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p6bar.json");
    let p = path.to_str().unwrap();
    let g = run(&["generate", "--family", "complete-polygonal", "--N", "6", "-o", p], "");
    assert_eq!(g.code, EXIT_OK, "{}", g.stderr);
    let r = run(&["analyze", p], "");
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert!(r.stdout.contains("supersolvable = true"));
    assert!(r.stdout.contains("splitting (5,7)"));
    let v = json(&run(&["--json", "analyze", p], ""));
    assert_eq!(v["cross-field"]["agrees"], true);
    assert_eq!(v["partition-identity"], true);
}

#[test]
fn dim_of_b3_with_generic_triple_point() {
    let doc = run(&["generate", "--family", "b3"], "").stdout;
    let v = json(&run(&["--json", "dim", "--degree", "4", "--fat", "3@generic", "-"], &doc));
    assert_eq!(v["dimension"]["dimension"], 1);
    assert_eq!(v["dimension"]["stable"], true);
    assert_eq!(v["expected"], 0);
    let special = json(&run(&["--json", "dim", "--degree", "4", "--fat", "3@(1/3:2/7:1)", "-"], &doc));
    assert_eq!(special["dimension"]["samples-used"], 0);
}

#[test]
fn reports_are_deterministic_and_record_seeds() {
    let doc = run(&["generate", "--family", "complete-tictactoe", "--k", "1", "--j", "1"], "").stdout;
    let a = run(&["--json", "--seed", "7", "certify", "-"], &doc);
    let b = run(&["--json", "--seed", "7", "certify", "-"], &doc);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["options"]["seed"], 7);
    assert_eq!(v["input"]["digest"].as_str().unwrap().len(), 64);
    assert!(v.get("timing-ms").is_none());
    let timed = json(&run(&["--json", "--timing", "certify", "-"], &doc));
    assert!(timed["timing-ms"].is_u64());
}

#[test]
fn certify_degree_and_scheme_modes() {
    let doc = run(&["generate", "--family", "b3"], "").stdout;
    let v = json(&run(&["--json", "certify", "-", "--degree", "4"], &doc));
    assert_eq!(v["mode"], "degree");
    assert_eq!(v["verdict"]["admits"], true);
    assert_eq!(v["verdict"]["consistent"], true);
    let v = json(&run(&["--json", "certify", "-", "--degree", "4", "--fat", "3@generic"], &doc));
    assert_eq!(v["verdict"]["admits"], true);
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("out.json");
    let r = run(&["certify", "-", "--report", report.to_str().unwrap()], &doc);
    assert_eq!(r.code, EXIT_OK);
    let saved: Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(saved["verdict"]["admits"], true);
}

#[test]
fn splitting_methods() {
    let doc = run(&["generate", "--family", "complete-tictactoe", "--k", "1"], "").stdout;
    for m in ["empirical", "supersolvable", "chain"] {
        let v = json(&run(&["--json", "splitting", "-", "--method", m], &doc));
        assert_eq!(v["splitting"]["type"], serde_json::json!([3, 5]), "{m}");
    }
    let v = json(&run(&["--json", "splitting", "-", "--method", "chain"], &doc));
    assert!(v["certificate"]["steps"].as_array().unwrap().iter().all(|s| s["restriction-count"].is_u64()));

    let dir = tempfile::tempdir().unwrap();
    let steps = dir.path().join("steps.json");
    std::fs::write(
        &steps,
        r#"{"schema-version":"1","field":"Q","lines":[["1","-1","1"],["1","-1","-1"],["1","1","1"],["1","1","-1"]]}"#,
    )
    .unwrap();
    let v = json(&run(
        &["--json", "splitting", "-", "--method", "chain", "--chain-file", steps.to_str().unwrap()],
        &doc,
    ));
    assert_eq!(v["splitting"]["type"], serde_json::json!([5, 7]));
}

#[test]
fn dual_and_sing_emit_documents() {
    let doc = run(&["generate", "--family", "complete-polygonal", "--N", "4"], "").stdout;
    let dual: Value = serde_json::from_str(&run(&["dual", "-"], &doc).stdout).unwrap();
    assert_eq!(dual["points"].as_array().unwrap().len(), 9);
    let sing: Value = serde_json::from_str(&run(&["sing", "--min-mult", "3", "-"], &doc).stdout).unwrap();
    assert_eq!(sing["points"].as_array().unwrap().len(), 7);
    let nested = run(&["generate", "--family", "sing-geq-of", "--of", "complete-polygonal", "--N", "4", "--min-mult", "3"], "");
    let nested: Value = serde_json::from_str(&nested.stdout).unwrap();
    assert_eq!(nested["points"], sing["points"]);
}

#[test]
fn render_writes_svg() {
    let doc = run(&["generate", "--family", "complete-polygonal", "--N", "4"], "").stdout;
    let a = run(&["render", "-"], &doc);
    let b = run(&["render", "-"], &doc);
    assert_eq!(a.code, EXIT_OK, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.starts_with("<svg"));
    assert_eq!(a.stdout.matches("class=\"line infinity\"").count(), 1);
}

#[test]
fn invalid_input_exits_with_2() {
    assert_eq!(run(&["certify", "-"], "not json").code, EXIT_INVALID);
    let dup = r#"{"schema-version":"1","field":"Q","lines":[[1,0,0],[2,0,0],[0,1,0]]}"#;
    let r = run(&["analyze", "-"], dup);
    assert_eq!(r.code, EXIT_INVALID);
    assert!(r.stderr.contains("lines[1]") && r.stderr.contains("lines[0]"), "{}", r.stderr);
    assert_eq!(run(&["--bogus", "analyze", "-"], "").code, EXIT_INVALID);
    assert_eq!(run(&["generate", "--family", "tictactoe", "--k", "1", "--j", "2"], "").code, EXIT_INVALID);
    assert_eq!(run(&["generate", "--family", "polygonal", "--N", "5", "--field", "q"], "").code, EXIT_INVALID);
    assert_eq!(run(&["certify", "-", "--fat", "2@generic"], "").code, EXIT_INVALID);
}

#[test]
fn inconclusive_maps_to_3() {
    use unexpected_curves::cli::exit_code;
    use unexpected_curves::error::Error;
    assert_eq!(exit_code(&Error::Inconclusive("x".into())), EXIT_INCONCLUSIVE);
    assert_eq!(exit_code(&Error::NotUnique { dimension: 2 }), EXIT_INCONCLUSIVE);
    assert_eq!(exit_code(&Error::ZeroTriple), EXIT_INVALID);
}

#[test]
fn help_exits_with_0() {
    let r = run(&["--help"], "");
    assert_eq!(r.code, EXIT_OK);
    for cmd in ["generate", "analyze", "dim", "splitting", "certify", "dual", "sing", "render"] {
        assert!(r.stdout.contains(cmd), "{cmd}");
    }
}
