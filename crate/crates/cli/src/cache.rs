//! Advisory on-disk cache: one JSON file per (set, mode) holding computed
//! terms, rook polynomials, and the recurrences verified for them.
//!
//! The cache only ever saves recomputation time.  Reads that fail for any
//! reason (missing file, stale schema, corrupted numbers) fall back to
//! recomputation, and every stored object is the canonical serialization of
//! an exact value, so cached and fresh runs print identical bytes.

use rookery_core::{BigInt, CFiniteRec, HolonomicRec, IntPoly, Mode, RationalGF, Var};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use crate::sets;

#[derive(Default, Clone, Serialize, Deserialize)]
pub struct CacheEntry {
    #[serde(default)]
    pub s: Vec<i64>,
    #[serde(default)]
    pub mode: String,
    /// Counting sequence `a(1)..`, decimal strings.
    #[serde(default)]
    pub terms: Vec<String>,
    /// Rook polynomials `R_1..`, each a coefficient list in ascending
    /// powers of `t`, decimal strings.
    #[serde(default)]
    pub rook_polys: Vec<Vec<String>>,
    #[serde(default)]
    pub cfinite: Option<CFiniteRec>,
    #[serde(default)]
    pub holonomic: Option<HolonomicRec>,
    #[serde(default)]
    pub gf: Option<RationalGF>,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> anyhow::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache {
            dir: dir.to_path_buf(),
        })
    }

    fn path(&self, s: &BTreeSet<i64>, mode: Mode) -> PathBuf {
        self.dir.join(format!("{mode}_{}.json", sets::file_key(s)))
    }

    fn load(&self, s: &BTreeSet<i64>, mode: Mode) -> Option<CacheEntry> {
        let text = fs::read_to_string(self.path(s, mode)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// The first `len` cached terms, if that many are stored and parse.
    pub fn terms(&self, s: &BTreeSet<i64>, mode: Mode, len: usize) -> Option<Vec<BigInt>> {
        let entry = self.load(s, mode)?;
        if entry.terms.len() < len {
            return None;
        }
        entry.terms[..len].iter().map(|t| t.parse().ok()).collect()
    }

    /// The first `len` cached rook polynomials, if stored.
    pub fn rook_polys(&self, s: &BTreeSet<i64>, mode: Mode, len: usize) -> Option<Vec<IntPoly>> {
        let entry = self.load(s, mode)?;
        if entry.rook_polys.len() < len {
            return None;
        }
        entry.rook_polys[..len]
            .iter()
            .map(|coeffs| {
                let parsed: Option<Vec<BigInt>> = coeffs.iter().map(|c| c.parse().ok()).collect();
                parsed.map(|c| IntPoly::new(Var::T, c))
            })
            .collect()
    }

    /// Load-modify-store.  Failures are swallowed: the cache is advisory.
    pub fn update<F: FnOnce(&mut CacheEntry)>(&self, s: &BTreeSet<i64>, mode: Mode, f: F) {
        let mut entry = self.load(s, mode).unwrap_or_default();
        entry.s = s.iter().copied().collect();
        entry.mode = mode.to_string();
        f(&mut entry);
        if let Ok(text) = serde_json::to_string_pretty(&entry) {
            let _ = fs::write(self.path(s, mode), text + "\n");
        }
    }

    /// Store `terms` if they extend what is already there.
    pub fn store_terms(&self, s: &BTreeSet<i64>, mode: Mode, terms: &[BigInt]) {
        self.update(s, mode, |entry| {
            if entry.terms.len() < terms.len() {
                entry.terms = terms.iter().map(BigInt::to_string).collect();
            }
        });
    }

    /// Store rook polynomials if they extend what is already there.
    pub fn store_rook_polys(&self, s: &BTreeSet<i64>, mode: Mode, polys: &[IntPoly]) {
        self.update(s, mode, |entry| {
            if entry.rook_polys.len() < polys.len() {
                entry.rook_polys = polys
                    .iter()
                    .map(|p| p.coeffs().iter().map(BigInt::to_string).collect())
                    .collect();
            }
        });
    }
}
