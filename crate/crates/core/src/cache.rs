//! Append-only JSON-lines result cache: one search record per line,
//! witnesses re-verified on load, malformed lines reported and skipped.

use crate::error::{Error, Result};
use crate::search::SearchRecord;
use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

type Key = (usize, usize, usize, usize);

/// The persistent cache for one path. A single writer appends; readers load
/// the whole file.
#[derive(Debug)]
pub struct ResultCache {
    path: PathBuf,
    entries: HashMap<Key, SearchRecord>,
    /// Human-readable reports for lines that could not be parsed.
    pub warnings: Vec<String>,
}

impl ResultCache {
    /// Loads the cache; a missing file is an empty cache. Unparseable lines
    /// are reported in `warnings` and skipped. A line that parses but whose
    /// witness fails re-validation is an integrity error.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut cache = ResultCache {
            path,
            entries: HashMap::new(),
            warnings: Vec::new(),
        };
        if !cache.path.exists() {
            return Ok(cache);
        }
        let file = std::fs::File::open(&cache.path)?;
        for (lineno, line) in std::io::BufReader::new(file).lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            match serde_json::from_str::<SearchRecord>(&line) {
                Ok(rec) => {
                    rec.verify().map_err(|e| {
                        Error::Integrity(format!("{}:{}: {e}", cache.path.display(), lineno + 1))
                    })?;
                    cache.entries.insert(rec.key(), rec);
                }
                Err(e) => cache.warnings.push(format!(
                    "{}:{}: skipped corrupt line ({e})",
                    cache.path.display(),
                    lineno + 1
                )),
            }
        }
        Ok(cache)
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &Key) -> Option<&SearchRecord> {
        self.entries.get(key)
    }

    /// Appends a record under the file lock and adds it to the map.
    pub fn insert(&mut self, record: SearchRecord) -> Result<()> {
        let _lock = CacheLock::acquire(&self.path)?;
        if let Some(dir) = self.path.parent() {
            if !dir.as_os_str().is_empty() {
                std::fs::create_dir_all(dir)?;
            }
        }
        let mut file = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(&self.path)?;
        let line = serde_json::to_string(&record)
            .map_err(|e| Error::Integrity(format!("serialize record: {e}")))?;
        writeln!(file, "{line}")?;
        self.entries.insert(record.key(), record);
        Ok(())
    }
}

/// Advisory lock: a sibling `.lock` file created exclusively, removed on
/// drop. Waits briefly for a competing writer, then gives up loudly.
struct CacheLock {
    path: PathBuf,
}

impl CacheLock {
    fn acquire(cache_path: &Path) -> Result<CacheLock> {
        let mut lock_path = cache_path.as_os_str().to_owned();
        lock_path.push(".lock");
        let path = PathBuf::from(lock_path);
        if let Some(dir) = path.parent() {
            if !dir.as_os_str().is_empty() {
                std::fs::create_dir_all(dir)?;
            }
        }
        for _ in 0..100 {
            match std::fs::OpenOptions::new()
                .write(true)
                .create_new(true)
                .open(&path)
            {
                Ok(mut f) => {
                    let _ = writeln!(f, "{}", std::process::id());
                    return Ok(CacheLock { path });
                }
                Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => {
                    std::thread::sleep(std::time::Duration::from_millis(25));
                }
                Err(e) => return Err(e.into()),
            }
        }
        Err(Error::Io(std::io::Error::new(
            std::io::ErrorKind::WouldBlock,
            format!("cache lock {} held too long", path.display()),
        )))
    }
}

impl Drop for CacheLock {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.path);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::FamilyParams;
    use crate::search::{extremal_search, SearchOptions};

    fn record() -> SearchRecord {
        let params = FamilyParams::for_search(5, 6, 2, 2);
        extremal_search(&params, &SearchOptions::default()).unwrap()
    }

    #[test]
    fn roundtrip_through_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let rec = record();
        {
            let mut cache = ResultCache::open(&path).unwrap();
            cache.insert(rec.clone()).unwrap();
        }
        let cache = ResultCache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        let got = cache.get(&(5, 6, 2, 2)).unwrap();
        assert_eq!(got.value, rec.value);
        assert_eq!(got.witness, rec.witness);
        assert!(cache.warnings.is_empty());
    }

    #[test]
    fn corrupt_lines_are_reported_and_skipped() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let rec = record();
        let mut line = serde_json::to_string(&rec).unwrap();
        line.push('\n');
        std::fs::write(&path, format!("this is not json\n{line}")).unwrap();
        let cache = ResultCache::open(&path).unwrap();
        assert_eq!(cache.len(), 1);
        assert_eq!(cache.warnings.len(), 1);
        assert!(cache.warnings[0].contains("skipped corrupt line"));
    }

    #[test]
    fn tampered_witness_is_an_integrity_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let mut rec = record();
        rec.value += 1; // witness no longer attains the recorded value
        std::fs::write(&path, format!("{}\n", serde_json::to_string(&rec).unwrap())).unwrap();
        assert!(matches!(ResultCache::open(&path), Err(Error::Integrity(_))));
    }

    #[test]
    fn lock_file_comes_and_goes() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cache.jsonl");
        let lock_path = dir.path().join("cache.jsonl.lock");
        {
            let _lock = CacheLock::acquire(&path).unwrap();
            assert!(lock_path.exists());
            // a second writer cannot enter while the lock is held
            assert!(CacheLock::acquire(&path).is_err() || !lock_path.exists());
        }
        assert!(!lock_path.exists());
    }
}
