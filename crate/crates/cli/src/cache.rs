//! On-disk memo for dimension series.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use splitcheck::GradedDims;

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct CacheKey {
    pub module: String,
    pub n: usize,
    pub twist: i32,
    pub range: [i32; 2],
    pub version: String,
}

impl CacheKey {
    pub fn new(module: &str, n: usize, twist: i32, lo: i32, hi: i32) -> Self {
        CacheKey {
            module: module.into(),
            n,
            twist,
            range: [lo, hi],
            version: splitcheck::VERSION.into(),
        }
    }

    fn file_name(&self) -> String {
        format!(
            "{}-n{}-k{}-{}_{}-v{}.json",
            self.module, self.n, self.twist, self.range[0], self.range[1], self.version
        )
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    key: CacheKey,
    dims: GradedDims,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> Self {
        Cache { dir: dir.to_path_buf() }
    }

    /// The stored series, if present, readable and for exactly this key.
    pub fn get(&self, key: &CacheKey) -> Option<GradedDims> {
        let text = fs::read_to_string(self.dir.join(key.file_name())).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        (entry.key == *key && entry.dims.is_well_formed()).then_some(entry.dims)
    }

    /// Best effort; a cache that cannot be written is not an error.
    pub fn put(&self, key: &CacheKey, dims: &GradedDims) {
        if fs::create_dir_all(&self.dir).is_err() {
            return;
        }
        let entry = Entry { key: key.clone(), dims: dims.clone() };
        if let Ok(text) = serde_json::to_string(&entry) {
            let _ = fs::write(self.dir.join(key.file_name()), text);
        }
    }

    pub fn get_or_compute<E>(
        cache: Option<&Cache>,
        key: CacheKey,
        compute: impl FnOnce() -> Result<GradedDims, E>,
    ) -> Result<GradedDims, E> {
        if let Some(hit) = cache.and_then(|c| c.get(&key)) {
            return Ok(hit);
        }
        let dims = compute()?;
        if let Some(c) = cache {
            c.put(&key, &dims);
        }
        Ok(dims)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let key = CacheKey::new("summand", 2, -1, -2, 3);
        let dims = GradedDims::from_values(-2, vec![1, 1, 1, 2, 2, 2]);
        assert!(cache.get(&key).is_none());
        cache.put(&key, &dims);
        assert_eq!(cache.get(&key), Some(dims.clone()));

        fs::write(dir.path().join(key.file_name()), "{not json").unwrap();
        assert!(cache.get(&key).is_none());
        let again = Cache::get_or_compute::<()>(Some(&cache), key.clone(), || Ok(dims.clone())).unwrap();
        assert_eq!(again, dims);
        assert_eq!(cache.get(&key), Some(dims));
    }

    #[test]
    fn version_mismatch_is_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let key = CacheKey::new("summand", 2, 0, 0, 2);
        let mut stale = key.clone();
        stale.version = "0.0.0-old".into();
        let entry = Entry { key: stale, dims: GradedDims::from_values(0, vec![9, 9, 9]) };
        fs::write(dir.path().join(key.file_name()), serde_json::to_string(&entry).unwrap()).unwrap();
        assert!(cache.get(&key).is_none());
    }
}
