//! Content-addressed JSON cache for expensive runs. Keys combine the
//! command, its parameters and the crate version; writes go through a
//! temporary file and an atomic rename.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

pub const ENV_VAR: &str = "QTPATHS_CACHE";

/// Resolve the cache directory: explicit flag, then the environment
/// variable, then none.
pub fn resolve_dir(flag: Option<&Path>) -> Option<PathBuf> {
    if let Some(p) = flag {
        return Some(p.to_path_buf());
    }
    std::env::var_os(ENV_VAR).map(PathBuf::from)
}

fn sanitize(key: &str) -> String {
    key.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect()
}

fn file_for(dir: &Path, key: &str) -> PathBuf {
    dir.join(format!(
        "{}-v{}.json",
        sanitize(key),
        env!("CARGO_PKG_VERSION")
    ))
}

pub fn load(dir: &Path, key: &str) -> Option<serde_json::Value> {
    let path = file_for(dir, key);
    let text = fs::read_to_string(path).ok()?;
    serde_json::from_str(&text).ok()
}

pub fn store(dir: &Path, key: &str, value: &serde_json::Value) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let path = file_for(dir, key);
    let tmp = dir.join(format!(".{}.tmp", sanitize(key)));
    fs::write(&tmp, serde_json::to_string(value)?)?;
    fs::rename(&tmp, &path)?;
    Ok(())
}

/// Fetch from the cache or compute and store.
pub fn get_or_compute<F>(
    dir: Option<&Path>,
    key: &str,
    compute: F,
) -> crate::Result<serde_json::Value>
where
    F: FnOnce() -> crate::Result<serde_json::Value>,
{
    if let Some(d) = dir {
        if let Some(v) = load(d, key) {
            return Ok(v);
        }
    }
    let v = compute()?;
    if let Some(d) = dir {
        // cache failures are not fatal
        let _ = store(d, key, &v);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_hit_consistency() {
        let dir = tempfile::tempdir().unwrap();
        let key = "unit test: weird/key";
        let v = serde_json::json!({"a": [1, 2, 3]});
        store(dir.path(), key, &v).unwrap();
        assert_eq!(load(dir.path(), key).unwrap(), v);
        let mut calls = 0;
        let fresh = get_or_compute(Some(dir.path()), "k2", || {
            calls += 1;
            Ok(serde_json::json!(41))
        })
        .unwrap();
        let cached = get_or_compute(Some(dir.path()), "k2", || {
            calls += 1;
            Ok(serde_json::json!(999))
        })
        .unwrap();
        assert_eq!(fresh, cached);
        assert_eq!(calls, 1);
    }

    #[test]
    fn missing_is_none() {
        let dir = tempfile::tempdir().unwrap();
        assert!(load(dir.path(), "nope").is_none());
    }
}
