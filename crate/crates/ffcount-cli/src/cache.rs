//! Optional table cache: one JSON file per (structure, table kind), named
//! `{kind}_{slug}.json`. Cached values are validated by recomputing a few
//! entries unless `--trust-cache` is given; a stale or corrupt file is
//! recomputed and overwritten.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CachedTable {
    pub kind: String,
    pub structure: String,
    pub values: BTreeMap<u64, u64>,
}

impl CachedTable {
    pub fn from_values(kind: &str, structure: &str, values: &[u64]) -> Self {
        CachedTable {
            kind: kind.to_string(),
            structure: structure.to_string(),
            values: values
                .iter()
                .enumerate()
                .map(|(i, &v)| (i as u64, v))
                .collect(),
        }
    }

    /// Dense values, provided the keys are exactly 0..len.
    pub fn dense_values(&self) -> Option<Vec<u64>> {
        let len = self.values.len() as u64;
        if self.values.keys().copied().eq(0..len) {
            Some(self.values.values().copied().collect())
        } else {
            None
        }
    }
}

pub fn cache_path(dir: &Path, kind: &str, slug: &str) -> PathBuf {
    dir.join(format!("{kind}_{slug}.json"))
}

pub fn load(path: &Path) -> Option<CachedTable> {
    let text = fs::read_to_string(path).ok()?;
    serde_json::from_str(&text).ok()
}

pub fn store(path: &Path, table: &CachedTable) -> std::io::Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, serde_json::to_string(table).expect("plain map serializes"))
}

/// Indices probed by the recomputation spot check: first, middle, last.
pub fn spot_indices(len: usize) -> Vec<usize> {
    let mut idx = vec![0, len / 2, len.saturating_sub(1)];
    idx.dedup();
    idx
}
