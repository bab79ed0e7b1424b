//! Exact subword occurrence counting and subword entropy of binary words.

pub mod entropy;
pub mod error;
pub mod genfunc;
pub mod occurrence;
pub mod search;
pub mod table1;
pub mod word;

pub use entropy::{maxocc, maxocc_exceeds, subword_entropy, CountEngine, MaxoccOptions, MaxoccResult};
pub use search::{insertion_extend, local_search_adaptive, min_entropy_exhaustive, SearchResult};
pub use error::{EntropyError, GfError, SearchError, WordError};
pub use occurrence::{binomial, occ_dp, occ_runs, LocalOccCache, OccCache, OccCount};
pub use word::{parse_word, RunTuple, Word};
