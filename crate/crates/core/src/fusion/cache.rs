//! On-disk fusion tables: one self-describing JSON file per (algebra, level).
//!
//! The header carries a SHA-256 of `(algebra, level, code version)`; a file
//! whose key does not match is treated as stale and recomputed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::FusionTable;
use crate::alcove::Alcove;
use crate::cartan::{AlgebraType, RootSystem, Weight};
use crate::error::{Error, Result};
use crate::repring::RepRing;

/// Bumped whenever the table layout or the fusion computation changes.
pub const CODE_VERSION: &str = concat!("rank2-fusion/", env!("CARGO_PKG_VERSION"), "/table-v1");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableFile {
    pub algebra: AlgebraType,
    pub level: i64,
    pub h_dual: i64,
    pub code_version: String,
    pub key_hash: String,
    pub alcove: Vec<[i64; 2]>,
    /// Sparse `[λ-index, μ-index, ν-index, value]` entries, nonzero only.
    #[serde(rename = "N")]
    pub entries: Vec<[i64; 4]>,
}

pub fn key_hash(algebra: AlgebraType, level: i64) -> String {
    let mut h = Sha256::new();
    h.update(format!("{}|{}|{}", algebra.name(), level, CODE_VERSION).as_bytes());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

impl TableFile {
    pub fn from_table(t: &FusionTable) -> TableFile {
        let n = t.len();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let v = t.get(i, j, l);
                    if v != 0 {
                        entries.push([i as i64, j as i64, l as i64, v]);
                    }
                }
            }
        }
        TableFile {
            algebra: t.algebra(),
            level: t.level(),
            h_dual: t.alcove().root_system().dual_coxeter,
            code_version: CODE_VERSION.to_string(),
            key_hash: key_hash(t.algebra(), t.level()),
            alcove: t.alcove().weights().iter().map(|w| [w.a, w.b]).collect(),
            entries,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<TableFile> {
        serde_json::from_str(s).map_err(|e| Error::Cache(e.to_string()))
    }

    /// Rebuilds the table, checking the header and the alcove against a
    /// fresh enumeration. Entry values are taken as stored.
    pub fn into_table(self, rep: &RepRing) -> Result<FusionTable> {
        let rs = rep.root_system();
        if rs.algebra != self.algebra {
            return Err(Error::Cache(format!("file is for {}, expected {}", self.algebra, rs.algebra)));
        }
        if self.key_hash != key_hash(self.algebra, self.level) {
            return Err(Error::Cache("stale key hash".into()));
        }
        let alc = Alcove::new(rs, self.level)?;
        let listed: Vec<Weight> = self.alcove.iter().map(|&[a, b]| Weight::new(a, b)).collect();
        if listed != alc.weights() {
            return Err(Error::Cache("alcove does not match canonical order".into()));
        }
        let n = alc.len();
        let mut coeffs = vec![0i64; n * n * n];
        for [i, j, l, v] in self.entries {
            let idx = [i, j, l];
            if idx.iter().any(|&x| x < 0 || x as usize >= n) {
                return Err(Error::Cache(format!("index out of range in entry {idx:?}")));
            }
            coeffs[((i as usize) * n + j as usize) * n + l as usize] = v;
        }
        Ok(FusionTable::from_coefficients(&alc, rep, coeffs))
    }
}

pub fn cache_path(dir: &Path, algebra: AlgebraType, level: i64) -> PathBuf {
    dir.join(format!("fusion-{}-k{}.json", algebra.name().to_lowercase(), level))
}

/// Writes via a temporary file in the same directory and renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
    let dir = path.parent().unwrap_or(Path::new("."));
    fs::create_dir_all(dir).map_err(io)?;
    let tmp = dir.join(format!(
        ".{}.tmp{}",
        path.file_name().and_then(|n| n.to_str()).unwrap_or("cache"),
        std::process::id()
    ));
    let mut f = fs::File::create(&tmp).map_err(io)?;
    f.write_all(contents.as_bytes()).map_err(io)?;
    f.sync_all().map_err(io)?;
    fs::rename(&tmp, path).map_err(io)
}

/// Loads the table for `(algebra, level)` from `dir`, computing and storing
/// it when the file is missing, unreadable or stale.
pub fn load_or_compute(dir: &Path, algebra: AlgebraType, level: i64) -> Result<FusionTable> {
    let rep = RepRing::new(&RootSystem::new(algebra));
    let path = cache_path(dir, algebra, level);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(t) = TableFile::from_json(&text).and_then(|f| f.into_table(&rep)) {
            if t.level() == level {
                return Ok(t);
            }
        }
    }
    let alc = Alcove::new(rep.root_system(), level)?;
    let t = FusionTable::with_rep_ring(&alc, &rep);
    write_atomic(&path, &TableFile::from_table(&t).to_json())?;
    Ok(t)
}
