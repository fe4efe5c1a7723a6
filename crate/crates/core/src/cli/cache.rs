//! On-disk cache of expensive intermediate results (character tables,
//! labeled-partition enumerations, stable cohomology results).
//!
//! Entries are JSON files named after `(operation, parameters, version)`.
//! Writes go to a temporary file in the same directory and are renamed into
//! place, so readers never observe a partial entry.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::Result;

pub const CACHE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn disabled() -> Self {
        Cache { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: Some(dir.into()) }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn entry_path(&self, op: &str, params: &str) -> Option<PathBuf> {
        let clean: String = params
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
            .collect();
        self.dir
            .as_ref()
            .map(|d| d.join(format!("{op}-{clean}-v{CACHE_VERSION}.json")))
    }

    /// Returns the cached value if present and readable; otherwise computes,
    /// stores (best effort) and returns it.
    pub fn get_or_compute<T, F>(&self, op: &str, params: &str, compute: F) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        let Some(path) = self.entry_path(op, params) else {
            return compute();
        };
        if let Some(v) = fs::read(&path).ok().and_then(|b| serde_json::from_slice(&b).ok()) {
            return Ok(v);
        }
        let value = compute()?;
        // A failed write only costs a recomputation next time.
        let _ = write_atomic(&path, &value);
        Ok(value)
    }
}

fn write_atomic<T: Serialize>(path: &Path, value: &T) -> std::io::Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(
        ".{}.{}.tmp",
        path.file_name().and_then(|s| s.to_str()).unwrap_or("entry"),
        std::process::id()
    ));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(&serde_json::to_vec(value)?)?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)
}
