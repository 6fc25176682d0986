use std::fmt;
use std::path::Path;

use sha2::{Digest, Sha256};

/// What a run read, wrote and how it ended. Written next to result files.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunManifest {
    pub command: String,
    pub args: Vec<String>,
    /// Input path and sha256 of its contents.
    pub inputs: Vec<(String, String)>,
    pub outputs: Vec<String>,
    pub exhaustive: Option<bool>,
    pub nodes: Option<u64>,
    pub reason: Option<String>,
    pub wall_ms: u128,
    pub threads: usize,
    pub extra: Vec<(String, String)>,
}

impl RunManifest {
    pub fn new(command: String, args: Vec<String>, threads: usize) -> Self {
        RunManifest { command, args, threads, ..Default::default() }
    }

    pub fn add_input(&mut self, path: &Path, contents: &[u8]) {
        self.inputs.push((path.display().to_string(), hex::encode(Sha256::digest(contents))));
    }
}

impl fmt::Display for RunManifest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command={}", self.command)?;
        writeln!(f, "args={}", self.args.join(" "))?;
        for (p, d) in &self.inputs {
            writeln!(f, "input={p} sha256={d}")?;
        }
        for p in &self.outputs {
            writeln!(f, "output={p}")?;
        }
        if let Some(e) = self.exhaustive {
            writeln!(f, "exhaustive={e}")?;
        }
        if let Some(n) = self.nodes {
            writeln!(f, "nodes={n}")?;
        }
        if let Some(r) = &self.reason {
            writeln!(f, "reason={r}")?;
        }
        for (k, v) in &self.extra {
            writeln!(f, "{k}={v}")?;
        }
        writeln!(f, "threads={}", self.threads)?;
        writeln!(f, "wall_ms={}", self.wall_ms)
    }
}
