//! Local store of best-known code parameters.
//!
//! Maps `(q, n, k)` to the best minimum distance on record so computed
//! codes can be classified against a reference table. The bundled table
//! ships inside the library; users can point at their own CSV via the
//! `--bkp` flag or the `GMPKIT_BKP` environment variable.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// CSV bundled into the library as the default reference table.
const BUNDLED_CSV: &str = include_str!("../data/bkp.csv");

/// Environment variable naming an alternative store file.
pub const BKP_ENV_VAR: &str = "GMPKIT_BKP";

/// One reference record: the best minimum distance on record for an
/// `[n, k]` code over `F_q`, with a free-text provenance tag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BkpEntry {
    pub q: u64,
    pub n: usize,
    pub k: usize,
    pub d_best: u32,
    pub source: String,
}

impl BkpEntry {
    fn validate(&self) -> Result<()> {
        if self.k < 1 || self.k > self.n {
            return Err(Error::Store(format!(
                "entry [{},{}]_{} needs 1 <= k <= n",
                self.n, self.k, self.q
            )));
        }
        if self.d_best < 1 {
            return Err(Error::Store(format!(
                "entry [{},{}]_{} needs d_best >= 1",
                self.n, self.k, self.q
            )));
        }
        Ok(())
    }
}

/// How a computed distance compares to the store.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum Verdict {
    /// Distance equals the best on record.
    BestKnown,
    /// Distance falls short of the record by `gap`.
    Suboptimal { gap: u32 },
    /// Distance beats the record — worth a second look, the local
    /// table may be stale.
    ExceedsReference { excess: u32 },
    /// No record for these parameters.
    Unknown,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::BestKnown => write!(f, "best-known"),
            Verdict::Suboptimal { gap } => write!(f, "suboptimal({gap})"),
            Verdict::ExceedsReference { .. } => write!(f, "exceeds-reference"),
            Verdict::Unknown => write!(f, "unknown"),
        }
    }
}

/// Immutable lookup table keyed by `(q, n, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Registry {
    entries: BTreeMap<(u64, usize, usize), BkpEntry>,
}

impl Registry {
    /// Parses a store from CSV text with header `q,n,k,d_best,source`.
    pub fn from_csv_str(text: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut entries = BTreeMap::new();
        for record in reader.deserialize() {
            let entry: BkpEntry = record.map_err(|e| Error::Store(e.to_string()))?;
            entry.validate()?;
            let key = (entry.q, entry.n, entry.k);
            if entries.insert(key, entry).is_some() {
                return Err(Error::Store(format!(
                    "duplicate entry for q={} n={} k={}",
                    key.0, key.1, key.2
                )));
            }
        }
        Ok(Registry { entries })
    }

    /// Loads a store from a CSV file on disk.
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Store(format!("{}: {e}", path.display())))?;
        Self::from_csv_str(&text)
    }

    /// The table compiled into the library.
    pub fn bundled() -> Self {
        Self::from_csv_str(BUNDLED_CSV).expect("bundled store is valid")
    }

    /// Resolves the store to use: an explicit path wins, then the
    /// `GMPKIT_BKP` environment variable, then the bundled table.
    pub fn resolve(explicit: Option<&Path>) -> Result<Self> {
        if let Some(path) = explicit {
            return Self::from_path(path);
        }
        if let Some(path) = std::env::var_os(BKP_ENV_VAR) {
            return Self::from_path(Path::new(&path));
        }
        Ok(Self::bundled())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &BkpEntry> {
        self.entries.values()
    }

    /// The record for `[n, k]` codes over `F_q`, if any.
    pub fn lookup(&self, q: u64, n: usize, k: usize) -> Option<&BkpEntry> {
        self.entries.get(&(q, n, k))
    }

    /// Compares a computed distance against the record.
    pub fn classify(&self, q: u64, n: usize, k: usize, d: u32) -> Verdict {
        match self.lookup(q, n, k) {
            None => Verdict::Unknown,
            Some(entry) if d == entry.d_best => Verdict::BestKnown,
            Some(entry) if d < entry.d_best => Verdict::Suboptimal {
                gap: entry.d_best - d,
            },
            Some(entry) => Verdict::ExceedsReference {
                excess: d - entry.d_best,
            },
        }
    }

    /// Serializes the store back to CSV, entries in key order.
    pub fn to_csv_string(&self) -> Result<String> {
        let mut writer = csv::Writer::from_writer(Vec::new());
        for entry in self.entries.values() {
            writer
                .serialize(entry)
                .map_err(|e| Error::Store(e.to_string()))?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|e| Error::Store(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Store(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_lookups() {
        let store = Registry::bundled();
        assert_eq!(store.len(), 8);
        assert_eq!(store.lookup(2, 20, 6).unwrap().d_best, 8);
        assert_eq!(store.lookup(9, 18, 4).unwrap().d_best, 13);
        assert_eq!(store.lookup(2, 49, 6).unwrap().d_best, 24);
        assert_eq!(store.lookup(5, 12, 5).unwrap().d_best, 6);
        assert!(store.lookup(2, 21, 6).is_none());
    }

    #[test]
    fn classify_all_cases() {
        let store = Registry::bundled();
        assert_eq!(store.classify(5, 12, 5, 6), Verdict::BestKnown);
        assert_eq!(store.classify(2, 20, 6, 7), Verdict::Suboptimal { gap: 1 });
        assert_eq!(
            store.classify(3, 12, 9, 4),
            Verdict::ExceedsReference { excess: 1 }
        );
        assert_eq!(store.classify(7, 32, 8, 6), Verdict::Unknown);
    }

    #[test]
    fn every_bundled_entry_is_best_known_against_itself() {
        let store = Registry::bundled();
        for entry in store.entries() {
            assert_eq!(
                store.classify(entry.q, entry.n, entry.k, entry.d_best),
                Verdict::BestKnown
            );
        }
    }

    #[test]
    fn verdict_display() {
        assert_eq!(Verdict::BestKnown.to_string(), "best-known");
        assert_eq!(Verdict::Suboptimal { gap: 2 }.to_string(), "suboptimal(2)");
        assert_eq!(
            Verdict::ExceedsReference { excess: 1 }.to_string(),
            "exceeds-reference"
        );
        assert_eq!(Verdict::Unknown.to_string(), "unknown");
    }

    #[test]
    fn csv_round_trip() {
        let store = Registry::bundled();
        let text = store.to_csv_string().unwrap();
        assert!(text.starts_with("q,n,k,d_best,source"));
        let reloaded = Registry::from_csv_str(&text).unwrap();
        assert_eq!(store, reloaded);
    }

    #[test]
    fn invalid_entries_rejected() {
        let bad_k = "q,n,k,d_best,source\n2,5,6,3,x\n";
        assert!(matches!(
            Registry::from_csv_str(bad_k),
            Err(Error::Store(_))
        ));
        let zero_k = "q,n,k,d_best,source\n2,5,0,3,x\n";
        assert!(matches!(
            Registry::from_csv_str(zero_k),
            Err(Error::Store(_))
        ));
        let zero_d = "q,n,k,d_best,source\n2,5,2,0,x\n";
        assert!(matches!(
            Registry::from_csv_str(zero_d),
            Err(Error::Store(_))
        ));
        let dup = "q,n,k,d_best,source\n2,5,2,3,x\n2,5,2,4,y\n";
        let err = Registry::from_csv_str(dup).unwrap_err();
        assert!(err.to_string().contains("duplicate"));
        let garbage = "q,n,k,d_best,source\n2,five,2,3,x\n";
        assert!(matches!(
            Registry::from_csv_str(garbage),
            Err(Error::Store(_))
        ));
    }

    #[test]
    fn resolve_prefers_explicit_path() {
        let dir = std::env::temp_dir().join("gmpkit-registry-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("custom.csv");
        std::fs::write(&path, "q,n,k,d_best,source\n2,3,1,3,custom\n").unwrap();
        let store = Registry::resolve(Some(&path)).unwrap();
        assert_eq!(store.len(), 1);
        assert_eq!(store.lookup(2, 3, 1).unwrap().source, "custom");
        assert!(Registry::resolve(Some(Path::new("/no/such/file.csv"))).is_err());
        let fallback = Registry::resolve(None).unwrap();
        assert_eq!(fallback, Registry::bundled());
    }
}
