//! Append-only coefficient cache, one JSON object per line:
//! `{"kind":"g","key":"9,6,4,2;5^3,3,1^3","value":"6","version":"qschur-0.1.0"}`.
//!
//! Lines written by another engine version are ignored. Every hit is
//! recomputed with probability [`Cache::audit_rate`] and must agree.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const ENGINE_VERSION: &str = concat!("qschur-", env!("CARGO_PKG_VERSION"));
pub const CACHE_FILE: &str = "coefficients.jsonl";
pub const DEFAULT_AUDIT_RATE: f64 = 0.01;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CacheKind {
    G,
    F,
    E,
    Restrict,
    Pushforward,
    My,
    Hook,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CacheEntry {
    pub kind: CacheKind,
    pub key: String,
    pub value: String,
    pub version: String,
}

pub struct Cache {
    path: Option<PathBuf>,
    writer: Option<Mutex<File>>,
    entries: Mutex<HashMap<(CacheKind, String), String>>,
    audit_rate: f64,
    rng: Mutex<StdRng>,
    audits: Mutex<usize>,
}

impl Cache {
    /// A cache that stores nothing.
    pub fn disabled() -> Cache {
        Cache {
            path: None,
            writer: None,
            entries: Mutex::new(HashMap::new()),
            audit_rate: 0.0,
            rng: Mutex::new(StdRng::seed_from_u64(0)),
            audits: Mutex::new(0),
        }
    }

    pub fn open(dir: &Path) -> Result<Cache, CliError> {
        fs::create_dir_all(dir)?;
        let path = dir.join(CACHE_FILE);
        let mut entries = HashMap::new();
        if path.exists() {
            for line in BufReader::new(File::open(&path)?).lines() {
                let line = line?;
                let Ok(entry) = serde_json::from_str::<CacheEntry>(&line) else {
                    continue;
                };
                if entry.version == ENGINE_VERSION {
                    entries.insert((entry.kind, entry.key), entry.value);
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(Cache {
            path: Some(path),
            writer: Some(Mutex::new(file)),
            entries: Mutex::new(entries),
            audit_rate: DEFAULT_AUDIT_RATE,
            rng: Mutex::new(StdRng::from_os_rng()),
            audits: Mutex::new(0),
        })
    }

    pub fn with_audit_rate(mut self, rate: f64) -> Cache {
        self.audit_rate = rate.clamp(0.0, 1.0);
        self
    }

    pub fn audit_rate(&self) -> f64 {
        self.audit_rate
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    /// Number of hits recomputed so far.
    pub fn audits(&self) -> usize {
        *self.audits.lock().unwrap()
    }

    pub fn lookup(&self, kind: CacheKind, key: &str) -> Option<String> {
        self.entries.lock().unwrap().get(&(kind, key.to_string())).cloned()
    }

    /// Returns the cached value, or computes, records and returns it.
    pub fn get_or_compute(
        &self,
        kind: CacheKind,
        key: &str,
        compute: impl FnOnce() -> Result<String, CliError>,
    ) -> Result<String, CliError> {
        if let Some(hit) = self.lookup(kind, key) {
            let audit = self.audit_rate > 0.0 && self.rng.lock().unwrap().random_bool(self.audit_rate);
            if audit {
                *self.audits.lock().unwrap() += 1;
                let fresh = compute()?;
                if fresh != hit {
                    return Err(CliError::Consistency(format!(
                        "cached {kind:?} value for {key} is {hit}, recomputed {fresh}"
                    )));
                }
            }
            return Ok(hit);
        }
        let value = compute()?;
        self.record(kind, key, &value)?;
        Ok(value)
    }

    fn record(&self, kind: CacheKind, key: &str, value: &str) -> Result<(), CliError> {
        self.entries
            .lock()
            .unwrap()
            .insert((kind, key.to_string()), value.to_string());
        if let Some(writer) = &self.writer {
            let entry = CacheEntry {
                kind,
                key: key.to_string(),
                value: value.to_string(),
                version: ENGINE_VERSION.to_string(),
            };
            let mut line = serde_json::to_string(&entry).expect("cache entries serialize");
            line.push('\n');
            writer.lock().unwrap().write_all(line.as_bytes())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_audit() {
        let dir = tempfile::tempdir().unwrap();
        {
            let cache = Cache::open(dir.path()).unwrap();
            let v = cache.get_or_compute(CacheKind::G, "1;1", || Ok("1".into())).unwrap();
            assert_eq!(v, "1");
        }
        let cache = Cache::open(dir.path()).unwrap().with_audit_rate(1.0);
        assert_eq!(cache.lookup(CacheKind::G, "1;1").as_deref(), Some("1"));
        let v = cache.get_or_compute(CacheKind::G, "1;1", || Ok("1".into())).unwrap();
        assert_eq!(v, "1");
        assert_eq!(cache.audits(), 1);
        let bad = cache.get_or_compute(CacheKind::G, "1;1", || Ok("2".into()));
        assert!(matches!(bad, Err(CliError::Consistency(_))));
    }

    #[test]
    fn stale_versions_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let stale = CacheEntry {
            kind: CacheKind::F,
            key: "k".into(),
            value: "7".into(),
            version: "qschur-0.0.0".into(),
        };
        let text = format!("{}\nnot json\n", serde_json::to_string(&stale).unwrap());
        fs::write(dir.path().join(CACHE_FILE), text).unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        assert_eq!(cache.lookup(CacheKind::F, "k"), None);
    }

    #[test]
    fn disabled_cache_computes() {
        let cache = Cache::disabled();
        let v = cache.get_or_compute(CacheKind::E, "x", || Ok("3".into())).unwrap();
        assert_eq!(v, "3");
        assert!(cache.path().is_none());
    }
}
