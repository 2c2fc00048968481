//! Census cache: one JSON-lines file per search spec, a metadata line
//! followed by the records in lexicographic order. Searches are
//! deterministic, so matching metadata means the records can be reused
//! verbatim.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use brieskorn::SearchSpec;
use serde::{Deserialize, Serialize};

use crate::record::RecordDto;

pub const SCHEMA_VERSION: u32 = 1;
pub const CACHE_DIR_ENV: &str = "BRIESKORN_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheMeta {
    pub schema_version: u32,
    pub tool_version: String,
    pub dim: u32,
    pub max_last_entry: Option<u64>,
    pub max_product: u64,
}

impl CacheMeta {
    pub fn for_spec(spec: &SearchSpec) -> Self {
        CacheMeta {
            schema_version: SCHEMA_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            dim: spec.link_dimension,
            max_last_entry: spec.max_last_entry,
            max_product: spec.max_product,
        }
    }
}

pub fn cache_dir() -> PathBuf {
    std::env::var_os(CACHE_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("cache"))
}

pub fn cache_path(spec: &SearchSpec) -> PathBuf {
    let cap = spec
        .max_last_entry
        .map_or_else(|| "none".to_string(), |c| c.to_string());
    cache_dir().join(format!(
        "census-dim{}-cap{}-prod{}.jsonl",
        spec.link_dimension, cap, spec.max_product
    ))
}

/// Records for this spec, if a cache file with matching metadata
/// exists and parses cleanly.
pub fn load(spec: &SearchSpec) -> Option<Vec<RecordDto>> {
    let text = fs::read_to_string(cache_path(spec)).ok()?;
    let mut lines = text.lines();
    let meta: CacheMeta = serde_json::from_str(lines.next()?).ok()?;
    if meta != CacheMeta::for_spec(spec) {
        return None;
    }
    lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).ok())
        .collect()
}

/// Write the cache file atomically (temp file + rename).
pub fn store(spec: &SearchSpec, records: &[RecordDto]) -> std::io::Result<()> {
    let dir = cache_dir();
    fs::create_dir_all(&dir)?;
    let mut file = tempfile::NamedTempFile::new_in(&dir)?;
    serde_json::to_writer(&mut file, &CacheMeta::for_spec(spec))?;
    writeln!(file)?;
    for record in records {
        serde_json::to_writer(&mut file, record)?;
        writeln!(file)?;
    }
    file.persist(cache_path(spec))?;
    Ok(())
}
