use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::SearchError;
use crate::occurrence::OccCount;
use crate::word::Word;

pub const CHECKPOINT_VERSION: u32 = 1;

/// Resumable search state. Ranges are half-open `[lo, hi)` intervals of
/// word codes that have been fully processed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub version: u32,
    pub n: usize,
    pub bound: Option<OccCount>,
    pub ranges: Vec<[u64; 2]>,
    pub achievers: Vec<Word>,
}

impl Checkpoint {
    pub fn load(path: &Path) -> Result<Self, SearchError> {
        let text = fs::read_to_string(path)?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| SearchError::CheckpointFormat(e.to_string()))?;
        let version = value.get("version").and_then(|v| v.as_u64()).unwrap_or(0) as u32;
        if version != CHECKPOINT_VERSION {
            return Err(SearchError::CheckpointVersion { found: version, expected: CHECKPOINT_VERSION });
        }
        let cp: Checkpoint =
            serde_json::from_value(value).map_err(|e| SearchError::CheckpointFormat(e.to_string()))?;
        for r in &cp.ranges {
            if r[0] > r[1] {
                return Err(SearchError::CheckpointFormat(format!("bad range [{}, {}]", r[0], r[1])));
            }
        }
        if cp.achievers.iter().any(|a| a.len() != cp.n) {
            return Err(SearchError::CheckpointFormat("achiever length differs from n".into()));
        }
        Ok(cp)
    }

    /// Writes to a sibling temporary file and renames it into place.
    pub fn save(&self, path: &Path) -> Result<(), SearchError> {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = Path::new(&tmp);
        {
            let mut f = fs::File::create(tmp)?;
            serde_json::to_writer_pretty(&mut f, self)
                .map_err(|e| SearchError::CheckpointFormat(e.to_string()))?;
            f.write_all(b"\n")?;
            f.sync_all()?;
        }
        fs::rename(tmp, path)?;
        Ok(())
    }
}

/// Disjoint half-open intervals, merged on insert.
#[derive(Clone, Debug, Default)]
pub(crate) struct RangeSet {
    spans: BTreeMap<u64, u64>,
}

impl RangeSet {
    pub fn from_ranges(ranges: &[[u64; 2]]) -> Self {
        let mut set = RangeSet::default();
        for r in ranges {
            set.insert(r[0], r[1]);
        }
        set
    }

    pub fn insert(&mut self, mut lo: u64, mut hi: u64) {
        if lo >= hi {
            return;
        }
        let overlapping: Vec<(u64, u64)> = self
            .spans
            .range(..=hi)
            .rev()
            .take_while(|&(_, &e)| e >= lo)
            .map(|(&s, &e)| (s, e))
            .collect();
        for (s, e) in overlapping {
            self.spans.remove(&s);
            lo = lo.min(s);
            hi = hi.max(e);
        }
        self.spans.insert(lo, hi);
    }

    pub fn to_vec(&self) -> Vec<[u64; 2]> {
        self.spans.iter().map(|(&s, &e)| [s, e]).collect()
    }

    pub fn covered_within(&self, limit: u64) -> u64 {
        self.spans.iter().map(|(&s, &e)| e.min(limit).saturating_sub(s.min(limit))).sum()
    }

    /// Sub-intervals of `[0, limit)` not yet covered.
    pub fn gaps(&self, limit: u64) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        let mut at = 0;
        for (&s, &e) in &self.spans {
            if s >= limit {
                break;
            }
            if s > at {
                out.push((at, s));
            }
            at = at.max(e);
        }
        if at < limit {
            out.push((at, limit));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_merge() {
        let mut r = RangeSet::default();
        r.insert(10, 20);
        r.insert(0, 5);
        r.insert(5, 10);
        r.insert(30, 40);
        assert_eq!(r.to_vec(), vec![[0, 20], [30, 40]]);
        assert_eq!(r.gaps(50), vec![(20, 30), (40, 50)]);
        r.insert(15, 35);
        assert_eq!(r.to_vec(), vec![[0, 40]]);
        assert_eq!(r.covered_within(30), 30);
    }

    #[test]
    fn round_trip_and_version_check() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cp.json");
        let cp = Checkpoint {
            version: CHECKPOINT_VERSION,
            n: 6,
            bound: Some(OccCount::from(5)),
            ranges: vec![[0, 16]],
            achievers: vec!["011001".parse().unwrap()],
        };
        cp.save(&path).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert!(text.contains("\"bound\": \"5\""));
        assert_eq!(Checkpoint::load(&path).unwrap(), cp);

        fs::write(&path, text.replace("\"version\": 1", "\"version\": 7")).unwrap();
        assert!(matches!(
            Checkpoint::load(&path),
            Err(SearchError::CheckpointVersion { found: 7, .. })
        ));
    }
}
