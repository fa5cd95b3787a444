//! On-disk HOMFLY cache: one `key<TAB>json<TAB>sha256` line per entry.
//!
//! Keys combine the convention tag with the canonical cyclic form of the
//! word, so conjugate rotations share an entry. Lines whose checksum does
//! not match are dropped on load and recomputed on demand.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use braidkit::invariants::{HomflyEngine, HomflyPolynomial, CONVENTION};
use braidkit::BraidWord;
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

#[derive(Debug)]
pub struct HomflyCache {
    path: PathBuf,
    entries: BTreeMap<String, String>,
    corrupt: usize,
    dirty: bool,
}

pub fn cache_key(b: &BraidWord) -> String {
    let letters: Vec<String> = b.canonical_cyclic().letters().iter().map(i32::to_string).collect();
    format!("{CONVENTION}|B{}:{}", b.strands(), letters.join(" "))
}

fn checksum(key: &str, value: &str) -> String {
    let mut h = Sha256::new();
    h.update(key.as_bytes());
    h.update(b"\t");
    h.update(value.as_bytes());
    hex::encode(h.finalize())
}

impl HomflyCache {
    /// Opens `path`, treating a missing file as an empty cache.
    pub fn open(path: impl Into<PathBuf>) -> CliResult<Self> {
        let path = path.into();
        let mut cache = Self { path, entries: BTreeMap::new(), corrupt: 0, dirty: false };
        let text = match std::fs::read_to_string(&cache.path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cache),
            Err(source) => return Err(CliError::Io { path: cache.path.display().to_string(), source }),
        };
        for line in text.lines().filter(|l| !l.is_empty()) {
            let mut parts = line.split('\t');
            match (parts.next(), parts.next(), parts.next(), parts.next()) {
                (Some(k), Some(v), Some(sum), None) if checksum(k, v) == sum => {
                    cache.entries.insert(k.to_string(), v.to_string());
                }
                _ => {
                    cache.corrupt += 1;
                    cache.dirty = true;
                }
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

    /// Lines rejected by the checksum when the file was opened.
    pub fn corrupt_entries(&self) -> usize {
        self.corrupt
    }

    pub fn lookup(&self, b: &BraidWord) -> Option<HomflyPolynomial> {
        let v = self.entries.get(&cache_key(b))?;
        let json = serde_json::from_str(v).ok()?;
        HomflyPolynomial::from_json(&json).ok()
    }

    pub fn store(&mut self, b: &BraidWord, p: &HomflyPolynomial) {
        let v = p.to_json().to_string();
        if self.entries.insert(cache_key(b), v.clone()).as_ref() != Some(&v) {
            self.dirty = true;
        }
    }

    /// Cached value, or a fresh computation that is then stored.
    pub fn get_or_compute(&mut self, engine: &mut HomflyEngine, b: &BraidWord) -> CliResult<HomflyPolynomial> {
        if let Some(p) = self.lookup(b) {
            return Ok(p);
        }
        let p = engine.compute(b)?;
        self.store(b, &p);
        Ok(p)
    }

    /// Writes the cache atomically if anything changed.
    pub fn save(&mut self) -> CliResult<()> {
        if !self.dirty {
            return Ok(());
        }
        let mut out = String::new();
        for (k, v) in &self.entries {
            out += &format!("{k}\t{v}\t{}\n", checksum(k, v));
        }
        let io = |source| CliError::Io { path: self.path.display().to_string(), source };
        let tmp = self.path.with_extension("tmp");
        std::fs::write(&tmp, out).map_err(io)?;
        std::fs::rename(&tmp, &self.path).map_err(io)?;
        self.dirty = false;
        Ok(())
    }
}
