use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Serialize)]
struct Input {
    source: String,
    digest: String,
}

/// Provenance record embedded in every emitted artifact.
pub struct Manifest {
    command: String,
    inputs: Vec<Input>,
    verdicts: Vec<(String, String)>,
    started: Instant,
}

impl Manifest {
    pub fn start(command: &str) -> Self {
        Manifest {
            command: command.to_string(),
            inputs: vec![],
            verdicts: vec![],
            started: Instant::now(),
        }
    }

    pub fn input(&mut self, source: impl Into<String>, bytes: &[u8]) {
        let hex: String = Sha256::digest(bytes)
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect();
        self.inputs.push(Input {
            source: source.into(),
            digest: format!("sha256:{hex}"),
        });
    }

    pub fn verdict(&mut self, what: impl Into<String>, verdict: impl Into<String>) {
        self.verdicts.push((what.into(), verdict.into()));
    }

    pub fn finish(self) -> serde_json::Value {
        let verdicts: serde_json::Map<String, serde_json::Value> = self
            .verdicts
            .into_iter()
            .map(|(k, v)| (k, serde_json::Value::String(v)))
            .collect();
        serde_json::json!({
            "command": self.command,
            "inputs": self.inputs,
            "engine_version": env!("CARGO_PKG_VERSION"),
            "verdicts": verdicts,
            "elapsed_ms": self.started.elapsed().as_millis() as u64,
        })
    }
}
