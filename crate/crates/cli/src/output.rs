//! The JSON output document and set rendering.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Version of the JSON layout; bumped on any incompatible change.
pub const SCHEMA_VERSION: &str = "1";

/// The document printed by `--json`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub command: String,
    pub results: Value,
    pub diagnostics: Vec<String>,
}

impl OutputDocument {
    pub fn new(command: &str, results: Value, diagnostics: Vec<String>) -> Self {
        OutputDocument {
            schema_version: SCHEMA_VERSION.to_owned(),
            command: command.to_owned(),
            results,
            diagnostics,
        }
    }
}

/// `{a, b}` from a list of member names.
pub fn braces<S: AsRef<str>>(names: &[S]) -> String {
    let inner: Vec<&str> = names.iter().map(AsRef::as_ref).collect();
    format!("{{{}}}", inner.join(", "))
}

/// `1 stable set` / `2 stable sets`.
pub fn count(n: usize, singular: &str, plural: &str) -> String {
    format!("{n} {}", if n == 1 { singular } else { plural })
}
