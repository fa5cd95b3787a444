//! Replayable result records, appended one JSON object per line.

use std::io::Write;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub id: String,
    pub operation: String,
    /// Command-line arguments after the program name, without `--record`.
    pub parameters: Vec<String>,
    pub output: Value,
    pub version: String,
    /// Seconds since the Unix epoch.
    pub timestamp: u64,
}

impl ResultRecord {
    pub fn new(id: String, operation: String, parameters: Vec<String>, output: Value) -> Self {
        let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        Self { id, operation, parameters, output, version: env!("CARGO_PKG_VERSION").to_string(), timestamp }
    }

    pub fn append_to(&self, path: &Path) -> CliResult<()> {
        let io = |source| CliError::Io { path: path.display().to_string(), source };
        let mut f = std::fs::OpenOptions::new().create(true).append(true).open(path).map_err(io)?;
        let line = serde_json::to_string(self).expect("record serializes");
        writeln!(f, "{line}").map_err(io)
    }

    /// Re-runs the operation and compares the serialized output byte for byte.
    pub fn replays(&self) -> bool {
        let mut args = vec!["braidkit".to_string()];
        args.extend(self.parameters.iter().cloned());
        let out = crate::run(args);
        serde_json::to_string(&out.json).ok() == serde_json::to_string(&self.output).ok()
    }
}

pub fn read_records(path: &Path) -> CliResult<Vec<ResultRecord>> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(k, l)| serde_json::from_str(l).map_err(|e| CliError::Corpus { line: k + 1, msg: e.to_string() }))
        .collect()
}
