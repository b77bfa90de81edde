//! Persistent cache for first-level homological data, keyed by the hash of
//! (canonical ideal, characteristic, engine version).
//!
//! Entries are checksummed; a corrupted entry is detected and recomputed,
//! never trusted. Writes go through a temporary file and an atomic rename,
//! so concurrent runs never observe partial entries. Any I/O trouble
//! degrades to cache-off operation with a warning on stderr.

use lyutab_core::field::Field;
use lyutab_core::lyub::FirstLevel;
use lyutab_core::serialize::{
    module_from_value, module_to_value, resolution_from_value, resolution_to_value,
};
use lyutab_core::{SquarefreeIdeal, ENGINE_VERSION};
use sha2::{Digest, Sha256};
use std::path::PathBuf;

pub const CACHE_ENV_VAR: &str = "LYUTAB_CACHE";

pub struct Cache {
    dir: PathBuf,
}

fn sha256_hex(data: &str) -> String {
    let mut h = Sha256::new();
    h.update(data.as_bytes());
    let digest = h.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn cache_key(ideal: &SquarefreeIdeal, characteristic: u64) -> String {
    let canonical = lyutab_core::input::canonical_json(ideal);
    sha256_hex(&format!("{canonical}|char={characteristic}|engine={ENGINE_VERSION}"))
}

impl Cache {
    pub fn new(dir: PathBuf) -> Option<Cache> {
        if let Err(e) = std::fs::create_dir_all(&dir) {
            eprintln!("warning: cache directory {} unusable ({e}); caching disabled", dir.display());
            return None;
        }
        Some(Cache { dir })
    }

    fn entry_path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn load<F: Field>(&self, f: &F, key: &str) -> Option<FirstLevel<F>> {
        let path = self.entry_path(key);
        let text = std::fs::read_to_string(&path).ok()?;
        let doc: serde_json::Value = match serde_json::from_str(&text) {
            Ok(v) => v,
            Err(_) => {
                eprintln!("warning: unreadable cache entry {}; recomputing", path.display());
                return None;
            }
        };
        let (checksum, payload_text) = match (doc.get("checksum"), doc.get("payload")) {
            (Some(serde_json::Value::String(c)), Some(serde_json::Value::String(p))) => (c, p),
            _ => {
                eprintln!("warning: malformed cache entry {}; recomputing", path.display());
                return None;
            }
        };
        if sha256_hex(payload_text) != *checksum {
            eprintln!("warning: checksum mismatch in {}; recomputing", path.display());
            return None;
        }
        let payload: serde_json::Value = serde_json::from_str(payload_text).ok()?;
        let resolution = resolution_from_value(f, payload.get("resolution")?).ok()?;
        let ext_values = payload.get("ext")?.as_array()?;
        let mut ext = Vec::with_capacity(ext_values.len());
        for v in ext_values {
            ext.push(module_from_value(f, v).ok()?);
        }
        Some(FirstLevel { resolution, ext })
    }

    pub fn store<F: Field>(
        &self,
        key: &str,
        resolution: &lyutab_core::resolution::FreeResolution<F>,
        ext: &[lyutab_core::sqmod::SqfModule<F>],
    ) {
        let payload = serde_json::json!({
            "resolution": resolution_to_value(resolution),
            "ext": ext.iter().map(module_to_value).collect::<Vec<_>>(),
        });
        let payload_text = payload.to_string();
        let doc = serde_json::json!({
            "engine": ENGINE_VERSION,
            "checksum": sha256_hex(&payload_text),
            "payload": payload_text,
        });
        let path = self.entry_path(key);
        let tmp = self.dir.join(format!(
            ".{key}.{}.{:x}.tmp",
            std::process::id(),
            std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_nanos())
                .unwrap_or(0)
        ));
        let result = std::fs::write(&tmp, doc.to_string())
            .and_then(|()| std::fs::rename(&tmp, &path));
        if let Err(e) = result {
            eprintln!("warning: could not write cache entry {} ({e})", path.display());
            let _ = std::fs::remove_file(&tmp);
        }
    }
}
