//! Run manifests: enough to replay a run and check its files.

use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::formats::MANIFEST_SCHEMA;
use crate::{Cli, CliError, Outcome};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunManifest {
    pub schema: String,
    pub command: Vec<String>,
    pub seed: u64,
    pub jobs: usize,
    pub tool_version: String,
    pub started_unix: u64,
    pub finished_unix: u64,
    pub exit_code: i32,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
}

pub fn unix_now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn digest_file(path: &Path) -> Result<FileDigest, CliError> {
    let bytes = std::fs::read(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    Ok(FileDigest { path: path.display().to_string(), sha256: sha256_hex(&bytes) })
}

impl RunManifest {
    pub fn new(argv: &[String], cli: &Cli, started: u64, out: &Outcome) -> Result<Self, CliError> {
        Ok(RunManifest {
            schema: MANIFEST_SCHEMA.into(),
            command: argv.to_vec(),
            seed: cli.seed,
            jobs: cli.jobs,
            tool_version: env!("CARGO_PKG_VERSION").into(),
            started_unix: started,
            finished_unix: unix_now(),
            exit_code: out.exit,
            inputs: out.inputs.iter().map(|p| digest_file(p)).collect::<Result<_, _>>()?,
            outputs: out.outputs.iter().map(|p| digest_file(p)).collect::<Result<_, _>>()?,
        })
    }
}
