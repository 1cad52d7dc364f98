//! Validation against the shipped JSON schemas.

use std::path::Path;

use jsonschema::Registry;
use serde_json::Value;

fn load(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Panics with every violation if `instance` does not match `schemas/<name>`.
pub fn check(name: &str, instance: &Value) {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas");
    let mut builder = Registry::new();
    for entry in std::fs::read_dir(&dir).unwrap() {
        let doc = load(&entry.unwrap().path());
        let id = doc["$id"].as_str().unwrap().to_string();
        builder = builder.add(id, doc).unwrap();
    }
    let registry = builder.prepare().unwrap();
    let schema = load(&dir.join(name));
    let validator = jsonschema::options()
        .with_registry(&registry)
        .build(&schema)
        .unwrap_or_else(|e| panic!("{name}: {e}"));
    let errors: Vec<String> = validator.iter_errors(instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{name}: {errors:#?}\n{instance:#}");
}
