//! On-disk JSON cache for expensive quotient computations.
//!
//! Every entry is an envelope `{schema, key, value}`; entries with another
//! schema stamp or a different key are treated as misses.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::Result;

pub const CACHE_SCHEMA: u32 = 1;

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

#[derive(Serialize, Deserialize)]
struct Envelope<T> {
    schema: u32,
    key: String,
    value: T,
}

impl Cache {
    pub fn open(dir: impl AsRef<Path>) -> Result<Self> {
        fs::create_dir_all(dir.as_ref())?;
        Ok(Cache {
            dir: dir.as_ref().to_path_buf(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        let file: String = key
            .chars()
            .map(|c| {
                if c.is_ascii_alphanumeric() || c == '-' || c == '_' {
                    c
                } else {
                    '_'
                }
            })
            .collect();
        self.dir.join(format!("v{CACHE_SCHEMA}-{file}.json"))
    }

    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let env: Envelope<T> = serde_json::from_str(&text).ok()?;
        (env.schema == CACHE_SCHEMA && env.key == key).then_some(env.value)
    }

    pub fn put<T: Serialize>(&self, key: &str, value: &T) -> Result<()> {
        let env = Envelope {
            schema: CACHE_SCHEMA,
            key: key.to_string(),
            value,
        };
        let text = serde_json::to_string(&env)?;
        let path = self.path(key);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, text)?;
        fs::rename(tmp, path)?;
        Ok(())
    }

    pub fn get_or_compute<T, F>(&self, key: &str, compute: F) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        if let Some(v) = self.get(key) {
            return Ok(v);
        }
        let v = compute()?;
        self.put(key, &v)?;
        Ok(v)
    }
}

/// Runs `compute`, going through the cache when one is given.
pub fn cached<T, F>(cache: Option<&Cache>, key: &str, compute: F) -> Result<T>
where
    T: Serialize + DeserializeOwned,
    F: FnOnce() -> Result<T>,
{
    match cache {
        Some(c) => c.get_or_compute(key, compute),
        None => compute(),
    }
}
