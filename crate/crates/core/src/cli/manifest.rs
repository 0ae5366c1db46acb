use std::collections::BTreeMap;

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::{Command, Outcome};

/// Parameters and content digests of one run. Identical invocations produce
/// identical manifests.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: serde_json::Value,
    /// `stdout` and each written file, keyed by path.
    pub digests: BTreeMap<String, String>,
    pub version: String,
}

impl RunManifest {
    pub fn new(command: &Command, outcome: &Outcome) -> Self {
        let mut digests = BTreeMap::new();
        digests.insert("stdout".to_string(), sha256_hex(outcome.stdout.as_bytes()));
        for (path, bytes) in &outcome.files {
            digests.insert(path.clone(), sha256_hex(bytes));
        }
        RunManifest {
            command: command.name().to_string(),
            parameters: serde_json::to_value(command).expect("arguments serialize"),
            digests,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}
