//! Append-only JSONL cache of triangle cells.
//!
//! Each line is `{"spec_hash": .., "n": .., "k": .., "value": ..}`; the hash is
//! the SHA-256 of the triangle kind joined to the canonical spec JSON.

use std::collections::BTreeMap;
use std::fs::{self, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use horadam_core::horadam::HoradamSpec;
use horadam_core::RingScalar;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::CliError;

pub const CACHE_DIR_ENV: &str = "HORADAM_CACHE_DIR";
pub const CACHE_FILE: &str = "triangles.jsonl";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub spec_hash: String,
    pub n: usize,
    pub k: usize,
    pub value: RingScalar,
}

pub fn spec_hash(kind: &str, spec: &HoradamSpec) -> String {
    let mut hasher = Sha256::new();
    hasher.update(kind.as_bytes());
    hasher.update(b"\n");
    hasher.update(spec.canonical_json().as_bytes());
    hex::encode(hasher.finalize())
}

/// `--cache` if given, else `$HORADAM_CACHE_DIR/triangles.jsonl` if set.
pub fn resolve_path(explicit: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = explicit {
        return Some(p.to_path_buf());
    }
    std::env::var_os(CACHE_DIR_ENV).map(|dir| PathBuf::from(dir).join(CACHE_FILE))
}

pub struct TriangleCache {
    path: PathBuf,
    hash: String,
    cells: BTreeMap<(usize, usize), RingScalar>,
}

impl TriangleCache {
    /// Loads the cells stored under `hash`. A missing file is an empty cache.
    pub fn open(path: &Path, hash: String) -> Result<Self, CliError> {
        let mut cells = BTreeMap::new();
        if path.exists() {
            let file = fs::File::open(path).map_err(CliError::io(format!("reading cache {}", path.display())))?;
            for (i, line) in BufReader::new(file).lines().enumerate() {
                let line = line.map_err(CliError::io(format!("reading cache {}", path.display())))?;
                if line.trim().is_empty() {
                    continue;
                }
                let rec: CacheRecord = serde_json::from_str(&line).map_err(|e| {
                    CliError::Usage(format!("corrupt cache line {} in {}: {e}", i + 1, path.display()))
                })?;
                if rec.spec_hash == hash {
                    cells.insert((rec.n, rec.k), rec.value);
                }
            }
        }
        Ok(Self { path: path.to_path_buf(), hash, cells })
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&RingScalar> {
        self.cells.get(&(n, k))
    }

    /// Appends the given cells and remembers them.
    pub fn append(&mut self, new_cells: Vec<(usize, usize, RingScalar)>) -> Result<(), CliError> {
        if new_cells.is_empty() {
            return Ok(());
        }
        if let Some(dir) = self.path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(CliError::io(format!("creating {}", dir.display())))?;
        }
        let context = format!("writing cache {}", self.path.display());
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)
            .map_err(CliError::io(context.clone()))?;
        let mut buf = String::new();
        for (n, k, value) in new_cells {
            let rec = CacheRecord { spec_hash: self.hash.clone(), n, k, value };
            buf.push_str(&serde_json::to_string(&rec).expect("records serialize"));
            buf.push('\n');
            self.cells.insert((n, k), rec.value);
        }
        file.write_all(buf.as_bytes()).map_err(CliError::io(context))
    }
}
