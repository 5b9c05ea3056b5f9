use std::fs;
use std::io::Write;
use std::path::PathBuf;

use serde::de::DeserializeOwned;
use serde::Serialize;

/// A directory of JSON artifacts named by content hash. Unreadable or stale entries
/// count as misses; writes go through a temporary file and a rename.
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Cache {
        Cache { dir }
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    pub fn load<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let text = fs::read_to_string(self.path(key)?).ok()?;
        serde_json::from_str(&text).ok()
    }

    pub fn store<T: Serialize>(&self, key: &str, value: &T) -> anyhow::Result<()> {
        let (Some(dir), Some(path)) = (self.dir.as_ref(), self.path(key)) else {
            return Ok(());
        };
        fs::create_dir_all(dir)?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        serde_json::to_writer(&mut tmp, value)?;
        tmp.flush()?;
        tmp.persist(path)?;
        Ok(())
    }

    /// Loads `key` or computes and stores it. A failed store only warns.
    pub fn get_or_compute<T, F>(&self, key: &str, compute: F) -> anyhow::Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> anyhow::Result<T>,
    {
        if let Some(v) = self.load(key) {
            return Ok(v);
        }
        let v = compute()?;
        if let Err(e) = self.store(key, &v) {
            eprintln!("warning: could not write cache entry: {e}");
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path().join("nested")));
        let mut calls = 0;
        let v: Vec<u32> = cache
            .get_or_compute("k", || {
                calls += 1;
                Ok(vec![1, 2])
            })
            .unwrap();
        assert_eq!(v, vec![1, 2]);
        let again: Vec<u32> = cache.get_or_compute("k", || unreachable!()).unwrap();
        assert_eq!(again, v);
        assert_eq!(calls, 1);
        fs::write(dir.path().join("nested/k.json"), "{not json").unwrap();
        assert_eq!(cache.load::<Vec<u32>>("k"), None);
        let fresh: Vec<u32> = cache.get_or_compute("k", || Ok(vec![3])).unwrap();
        assert_eq!(fresh, vec![3]);
        assert_eq!(cache.load::<Vec<u32>>("k"), Some(vec![3]));
    }

    #[test]
    fn disabled_cache_never_hits() {
        let cache = Cache::new(None);
        cache.store("k", &1u32).unwrap();
        assert_eq!(cache.load::<u32>("k"), None);
    }
}
