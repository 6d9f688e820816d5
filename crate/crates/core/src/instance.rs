//! Instance files: `{"d": 2, "A": [[0,0],[4,0],…]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::lattice::GeneratorSet;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    d: usize,
    #[serde(rename = "A")]
    a: Vec<Vec<i64>>,
}

pub fn parse_instance(text: &str) -> Result<GeneratorSet> {
    let f: InstanceFile = serde_json::from_str(text)?;
    GeneratorSet::new(f.d, f.a)
}

pub fn read_instance(path: &Path) -> Result<GeneratorSet> {
    parse_instance(&std::fs::read_to_string(path)?)
}

/// One point per line, sorted; ends with a newline.
pub fn instance_json(a: &GeneratorSet) -> String {
    let rows: Vec<String> = a
        .points()
        .iter()
        .map(|p| serde_json::to_string(p.coords()).expect("integers serialize"))
        .collect();
    format!("{{\n  \"d\": {},\n  \"A\": [\n    {}\n  ]\n}}\n", a.dim(), rows.join(",\n    "))
}

pub fn write_instance(path: &Path, a: &GeneratorSet) -> Result<()> {
    std::fs::write(path, instance_json(a)).map_err(Error::from)
}

/// SHA-256 of the canonical compact form `d;p1;p2;…` with points sorted
/// and coordinates comma-separated.
pub fn instance_hash(a: &GeneratorSet) -> String {
    let mut h = Sha256::new();
    h.update(a.dim().to_string());
    for p in a.points() {
        h.update(";");
        let c: Vec<String> = p.coords().iter().map(i64::to_string).collect();
        h.update(c.join(","));
    }
    hex::encode(h.finalize())
}

/// `{"d": …, "A": […]}` as a JSON value.
pub fn instance_value(a: &GeneratorSet) -> serde_json::Value {
    serde_json::json!({
        "d": a.dim(),
        "A": a.points().iter().map(|p| p.coords().to_vec()).collect::<Vec<_>>(),
    })
}
