use std::path::Path;

use fiblie_core::{AlgebraId, BasisMonomial};
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub algebra: String,
    pub degree: usize,
    pub monomials: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub format_version: u32,
    pub entries: Vec<CacheEntry>,
}

/// A parsed cache: `(algebra, degree, basis)` triples.
pub type Bases = Vec<(AlgebraId, usize, Vec<BasisMonomial>)>;

impl CacheFile {
    pub fn build(algebra: AlgebraId, max_degree: usize) -> Self {
        let entries = (1..=max_degree)
            .map(|d| CacheEntry {
                algebra: algebra.to_string(),
                degree: d,
                monomials: algebra.member_basis(d).iter().map(ToString::to_string).collect(),
            })
            .collect();
        Self {
            format_version: FORMAT_VERSION,
            entries,
        }
    }

    pub fn decode(&self) -> Result<Bases, CliError> {
        if self.format_version != FORMAT_VERSION {
            return Err(CliError::CorruptCache(format!(
                "format_version {} is not supported (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        self.entries
            .iter()
            .map(|e| {
                let algebra: AlgebraId = e
                    .algebra
                    .parse()
                    .map_err(|err| CliError::CorruptCache(format!("{err}")))?;
                let basis = e
                    .monomials
                    .iter()
                    .map(|s| {
                        s.parse::<BasisMonomial>()
                            .map_err(|err| CliError::CorruptCache(format!("{s:?}: {err}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok((algebra, e.degree, basis))
            })
            .collect()
    }

    /// Entries that differ from a fresh enumeration.
    pub fn mismatches(bases: &Bases) -> Vec<(AlgebraId, usize)> {
        bases
            .iter()
            .filter(|(a, d, basis)| *d == 0 || a.member_basis(*d) != *basis)
            .map(|(a, d, _)| (*a, *d))
            .collect()
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?;
        serde_json::from_str(&text).map_err(|e| CliError::CorruptCache(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_in_memory() {
        let cache = CacheFile::build(AlgebraId::L, 10);
        let bases = cache.decode().unwrap();
        assert_eq!(bases.len(), 10);
        assert!(CacheFile::mismatches(&bases).is_empty());
        assert_eq!(cache.entries[3].monomials, ["t1.v5", "t0.t1.v5"]);
    }

    #[test]
    fn rejects_bad_version_and_monomials() {
        let mut cache = CacheFile::build(AlgebraId::L, 3);
        cache.format_version = 7;
        assert!(matches!(cache.decode(), Err(CliError::CorruptCache(_))));
        let mut cache = CacheFile::build(AlgebraId::L, 6);
        cache.entries[5].monomials.push("t2.v5".into());
        assert!(matches!(cache.decode(), Err(CliError::CorruptCache(_))));
    }

    #[test]
    fn detects_tampered_basis() {
        let mut cache = CacheFile::build(AlgebraId::L, 4);
        cache.entries[2].monomials.pop();
        let bases = cache.decode().unwrap();
        assert_eq!(CacheFile::mismatches(&bases), vec![(AlgebraId::L, 3)]);
    }
}
