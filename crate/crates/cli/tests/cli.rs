use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn polyprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyprod")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", stdout(o)))
}

fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schema")
}

fn assert_valid(schema_file: &str, instance: &Value) {
    let load = |name: &str| -> Value {
        serde_json::from_str(&std::fs::read_to_string(schema_dir().join(name)).unwrap()).unwrap()
    };
    let validator = jsonschema::options()
        .with_base_uri("file:///schema/")
        .with_resource(
            "file:///schema/common.schema.json",
            jsonschema::Resource::from_contents(load("common.schema.json")).unwrap(),
        )
        .build(&load(schema_file))
        .unwrap();
    let errors: Vec<String> = validator.iter_errors(instance).map(|e| format!("{e} at {}", e.instance_path)).collect();
    assert!(errors.is_empty(), "{schema_file}: {errors:#?}");
}

const DISCRETE3: &str = r#"{"m":3,"facets":[[1],[2],[3]]}"#;
const NOT_SHIFTED: &str = r#"{"m":3,"facets":[[1,2],[3]]}"#;

#[test]
fn analyze_boundary_of_simplex() {
    let o = polyprod(&["analyze", "--inline", r#"{"m":3,"facets":[[1,2],[1,3],[2,3]]}"#, "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_valid("analyze.schema.json", &r);
    assert_eq!(r["summands"].as_array().unwrap().len(), 1);
    assert_eq!(r["summands"][0]["dim"], 5);
    assert_eq!(r["pinch_map"][0]["expression"], "ω{1,2,3}");
}

#[test]
fn analyze_discrete_and_human_output() {
    let o = polyprod(&["analyze", "--inline", DISCRETE3, "--format", "structured"]);
    let r = json(&o);
    assert_valid("analyze.schema.json", &r);
    assert_eq!(r["summands"].as_array().unwrap().len(), 5);
    let chains = r["pinch_map"].as_array().unwrap().iter().filter(|p| !p["structured"]["chain"].as_array().unwrap().is_empty()).count();
    assert_eq!(chains, 2);
    let human = stdout(&polyprod(&["analyze", "--inline", DISCRETE3]));
    assert!(human.contains("summands: 5"));
    assert!(human.contains("-[e2, j∘ω{1,3}] ∘ (1∧σ̂[2,1,3])"));
}

#[test]
fn analyze_non_shifted_emits_note() {
    let o = polyprod(&["analyze", "--inline", NOT_SHIFTED, "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_valid("analyze.schema.json", &r);
    assert_eq!(r["shifted"], false);
    assert!(r["note"].is_string());
    assert!(r["summands"].is_null());
}

#[test]
fn malformed_input_exits_2() {
    for bad in ["{", r#"{"m":3,"facets":[[4]]}"#, r#"{"m":3,"facets":[[1]]}"#] {
        let o = polyprod(&["analyze", "--inline", bad]);
        assert_eq!(o.status.code(), Some(2), "{bad}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
    let o = polyprod(&["analyze", "--input", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(polyprod(&["verify", "--inline", NOT_SHIFTED]).status.code(), Some(2));
    assert_eq!(polyprod(&["analyze"]).status.code(), Some(2));
}

#[test]
fn guard_violation_exits_3() {
    assert_eq!(polyprod(&["generate", "--m", "17"]).status.code(), Some(3));
    let o = polyprod(&["analyze", "--inline", DISCRETE3, "--max-m", "2"]);
    assert_eq!(o.status.code(), Some(3));
    let big = r#"{"m":17,"facets":[[1],[2],[3],[4],[5],[6],[7],[8],[9],[10],[11],[12],[13],[14],[15],[16],[17]]}"#;
    assert_eq!(polyprod(&["verify", "--inline", big]).status.code(), Some(3));
}

#[test]
fn verify_single_and_vacuous() {
    let o = polyprod(&["verify", "--inline", DISCRETE3, "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_valid("verify.schema.json", &r);
    assert_eq!(r["ok"], true);
    assert_eq!(r["hochster"]["hochster"]["3"]["betti"], 3);
    assert_eq!(r["hochster"]["hochster"]["4"]["betti"], 2);

    let full = r#"{"m":5,"facets":[[1,2,3,4,5]]}"#;
    let o = polyprod(&["verify", "--inline", full, "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["summands"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_corrupted_nonfaces_fails_with_diff() {
    let o = polyprod(&["verify", "--inline", DISCRETE3, "--corrupt-nonfaces", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    assert_valid("verify.schema.json", &r);
    let bad: Vec<&Value> = r["per_I"].as_array().unwrap().iter().filter(|c| c["ok"] == false).collect();
    assert_eq!(bad.len(), 4);
    assert_ne!(bad[0]["lhs"], bad[0]["rhs"]);
    assert!(stdout(&polyprod(&["verify", "--inline", DISCRETE3, "--corrupt-nonfaces"])).contains("result: FAIL"));
}

#[test]
fn verify_generated_corpus() {
    let o = polyprod(&["verify", "--seed", "42", "--size", "40", "--m", "6", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_valid("verify.schema.json", &r);
    assert_eq!(r["count"], 40);
    assert_eq!(r["passed"], 40);
}

#[test]
fn jacobi_command() {
    let o = polyprod(&["jacobi", "--m", "6", "--max-degree", "5", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let r = json(&o);
    assert_valid("jacobi.schema.json", &r);
    let signs: Vec<i64> = r["terms"].as_array().unwrap().iter().map(|t| t["coefficient"].as_i64().unwrap()).collect();
    assert_eq!(signs, vec![1, -1, 1, -1, 1, -1]);
    assert_eq!(r["sweep"].as_array().unwrap().len(), 64);

    let o = polyprod(&["jacobi", "--m", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("343/343 zero"));

    let o = polyprod(&["jacobi", "--m", "3", "--max-degree", "3", "--flip-antisymmetry", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["proof_replay"]["ok"], false);

    assert_eq!(polyprod(&["jacobi", "--m", "2"]).status.code(), Some(2));
}

#[test]
fn generate_is_deterministic_and_round_trips() {
    let dir = std::env::temp_dir().join(format!("polyprod-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for path in [&a, &b] {
        let o = polyprod(&["generate", "--seed", "1", "--size", "10", "--m", "5", "--output", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let corpus: Value = serde_json::from_str(&text).unwrap();
    assert_valid("corpus.schema.json", &corpus);
    assert_eq!(corpus.as_array().unwrap().len(), 10);

    let input = a.to_str().unwrap();
    assert_eq!(polyprod(&["verify", "--input", input]).status.code(), Some(0));
    let analyzed = json(&polyprod(&["analyze", "--input", input, "--format", "structured"]));
    assert_eq!(analyzed.as_array().unwrap().len(), 10);
    assert!(analyzed.as_array().unwrap().iter().all(|r| r["shifted"] == true));

    let empty = stdout(&polyprod(&["generate", "--size", "0", "--m", "5"]));
    assert_eq!(empty, "[]\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn structured_reports_are_byte_identical() {
    let args = ["verify", "--seed", "7", "--size", "20", "--m", "5", "--format", "structured"];
    assert_eq!(polyprod(&args).stdout, polyprod(&args).stdout);
    let args = ["analyze", "--inline", DISCRETE3, "--format", "structured", "--spheres", "1,2,3"];
    let o = polyprod(&args);
    assert_eq!(o.stdout, polyprod(&args).stdout);
    assert_eq!(json(&o)["spheres"], serde_json::json!([1, 2, 3]));
}

#[test]
#[should_panic(expected = "analyze.schema.json")]
fn schema_rejects_a_malformed_report() {
    let mut r = json(&polyprod(&["analyze", "--inline", DISCRETE3, "--format", "structured"]));
    r["summands"][0]["dim"] = Value::from("five");
    assert_valid("analyze.schema.json", &r);
}
