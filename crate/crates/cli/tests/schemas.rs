use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn schema_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/schemas")
}

fn load(path: PathBuf) -> Value {
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path:?}: {e}"));
    serde_json::from_str(&text).unwrap()
}

fn check(schema: &str, value: &Value) {
    let schema_json = load(schema_dir().join(format!("{schema}.schema.json")));
    let validator = jsonschema::validator_for(&schema_json).unwrap();
    let errors: Vec<String> = validator.iter_errors(value).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{schema}: {errors:?}\n{value}");
}

fn output(args: &[&str]) -> (Option<i32>, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_nullcover"))
        .env_remove("NULLCOVER_CAP_VERIFY")
        .args(args)
        .output()
        .unwrap();
    let v = serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("{args:?}: {e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code(), v)
}

fn conforms(schema: &str, args: &[&str]) -> Value {
    let (code, v) = output(args);
    assert_eq!(code, Some(0), "{args:?}: {v}");
    check(schema, &v);
    v
}

#[test]
fn cover_artifacts() {
    conforms("block-plan", &["plan", "--p", "3", "--depth", "4"]);
    conforms("block-plan", &["plan", "--orders", "2,3", "--depth", "4"]);
    let nullset = conforms("nullset", &["build-nullset", "--p", "2", "--depth", "3"]);
    conforms("measure-report", &["measure", "--in", &nullset.to_string()]);
    conforms("measure-threshold", &["measure", "--threshold", "1/10"]);
    conforms("measure-threshold", &["measure", "--threshold", "1/10", "--limit", "5"]);
    let slalom = conforms("slalom", &["slalom-gen", "--p", "3", "--depth", "3", "--width", "(n+2)/2"]);

    for args in [
        vec!["cover", "product", "--orders", "2,3", "--depth", "3"],
        vec!["cover", "padic", "--p", "3", "--depth", "3", "--in", &slalom.to_string()],
    ] {
        let bundle = conforms("cover-bundle", &args);
        conforms("verify-report", &["verify", "--in", &bundle.to_string()]);
    }

    let input = r#"{"plan":{"mode":"product","orders":[7],"boundaries":[0,1]},
        "family":[{"width":{"table":[7]},"sets":[[0,1,2,3,4,5,6]]},
                  {"width":"n+2","sets":[[0,1]]}]}"#;
    check("cube-check-input", &serde_json::from_str(input).unwrap());
    let report = conforms("cube-report", &["cube-check", "--in", input]);
    assert_eq!(report["covered"], true);

    conforms(
        "find-translator",
        &["find-translator", "--orders", "8", "--a", "0,1,2,3,4,5", "--s", "3,4", "--n", "0"],
    );
}

#[test]
fn failed_verification_conforms() {
    let (_, mut bundle) = output(&["cover", "product", "--orders", "2", "--depth", "3"]);
    let residues = bundle["certificate"]["translate"]["residues"].as_array_mut().unwrap();
    for r in residues.iter_mut() {
        *r = Value::from(1 - r.as_u64().unwrap());
    }
    let report = conforms("verify-report", &["verify", "--in", &bundle.to_string()]);
    if report["covered"] == false {
        assert!(report["counterexample"].is_array());
    }
}

#[test]
fn ek_outputs() {
    conforms("ek-member", &["ek", "member", "--num", "1", "--den", "3", "--depth", "10"]);
    conforms("ek-expand", &["ek", "expand", "--num", "1", "--den", "2", "--depth", "6"]);
    conforms("ek-expand", &["ek", "expand", "--num", "0", "--den", "1", "--depth", "6"]);
    conforms("ek-measure", &["ek", "measure", "--depth", "8"]);
    conforms("ek-sup", &["ek", "sup", "--depth", "12"]);
}

#[test]
fn structure_outputs() {
    let descriptors = [
        r#"{"type":"Int"}"#,
        r#"{"type":"Reals"}"#,
        r#"{"type":"RPower","n":3}"#,
        r#"{"type":"Padic","p":5}"#,
        r#"{"type":"SumOmega","parts":[{"type":"Cyclic","m":4}]}"#,
        r#"{"type":"FiniteSum","parts":[{"type":"Torus"},{"type":"Int"},{"type":"Quasicyclic","p":3}]}"#,
        r#"{"type":"FiniteSum","parts":[{"type":"Cyclic","m":12},{"type":"Cyclic","m":10}]}"#,
    ];
    for d in descriptors {
        check("group-descriptor", &serde_json::from_str(d).unwrap());
        conforms("group-descriptor", &["dual", "--in", d]);
        conforms("pipeline-outcome", &["pipeline", "--in", d]);
    }
    for d in [descriptors[0], descriptors[4], r#"{"type":"Quasicyclic","p":7}"#] {
        conforms("trichotomy-verdict", &["classify", "--in", d]);
    }
    conforms("decompose", &["decompose", "--in", descriptors[6]]);
    conforms("rule-registry", &["pipeline", "--rules"]);
    check("rule-registry", &load(schema_dir().join("rule-registry.json")));
    conforms("chain", &["chain", "--orders", "2,8", "--p", "2", "--depth", "3"]);
    let chain = conforms("chain", &["chain", "--orders", "2,8", "--p", "2", "--depth", "2"]);
    assert_eq!(chain["chain"].as_array().map(Vec::len), Some(3));
    conforms("chain", &["chain", "--orders", "3", "--p", "2", "--depth", "1"]);
    conforms("chain-depth", &["chain", "--orders", "2,8", "--p", "2", "--max"]);
    conforms("chain-depth", &["chain", "--orders", "3", "--p", "2", "--max"]);
}

#[test]
fn errors_conform() {
    for (args, code) in [
        (vec!["dual", "--in", r#"{"type":"Cyclic","m":1}"#], 2),
        (vec!["plan", "--p", "4", "--depth", "2"], 2),
        (vec!["classify", "--in", r#"{"type":"Torus"}"#], 3),
        (vec!["cover", "product", "--orders", "2", "--depth", "6", "--cap-verify", "3"], 4),
        (vec!["dual", "--in", "@/nonexistent/descriptor.json"], 1),
    ] {
        let (status, v) = output(&args);
        assert_eq!(status, Some(code), "{args:?}: {v}");
        check("error", &v);
    }
}

#[test]
fn schemas_reject_malformed_values() {
    let bad = [
        ("group-descriptor", r#"{"type":"Cyclic"}"#),
        ("group-descriptor", r#"{"type":"Int","m":3}"#),
        ("block-plan", r#"{"mode":"padic","boundaries":[0,3]}"#),
        ("slalom", r#"{"width":"n+2","sets":[[]]}"#),
        ("nullset", r#"{"plan":{"mode":"padic","p":2,"boundaries":[0,3]},"A":[[-1]]}"#),
        ("trichotomy-verdict", r#"{"case":4,"witness":{"type":"Int"}}"#),
        ("chain-depth", r#"{"kind":"finite"}"#),
    ];
    for (schema, text) in bad {
        let schema_json = load(schema_dir().join(format!("{schema}.schema.json")));
        let validator = jsonschema::validator_for(&schema_json).unwrap();
        assert!(!validator.is_valid(&serde_json::from_str(text).unwrap()), "{schema}: {text}");
    }
}
