use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid letter {found:?} at index {index}: words use only '0' and '1'")]
    InvalidLetter { index: usize, found: char },
    #[error("run {index} has non-positive length")]
    EmptyRun { index: usize },
    #[error("malformed run tuple {0:?}, expected \"s:l1,l2,...\"")]
    MalformedRuns(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EntropyError {
    #[error("the empty word has no non-trivial subwords")]
    EmptyWord,
    #[error("alphabet size must be at least 2, got {0}")]
    AlphabetTooSmall(u32),
    #[error("length must be at least 1")]
    ZeroLength,
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("length {n} outside the supported range 1..={max}")]
    LengthOutOfRange { n: usize, max: usize },
    #[error("no words supplied")]
    EmptyInput,
    #[error("words must all have the same length")]
    MixedLengths,
    #[error("checkpoint version {found} is not supported (expected {expected})")]
    CheckpointVersion { found: u32, expected: u32 },
    #[error("checkpoint is for n = {found}, but the search is for n = {expected}")]
    CheckpointLength { found: usize, expected: usize },
    #[error("malformed checkpoint: {0}")]
    CheckpointFormat(String),
    #[error("checkpoint i/o: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("words must be non-empty")]
    EmptyWord,
    #[error("|v| = {len} exceeds the composition cap of {cap}")]
    CompositionCap { len: usize, cap: usize },
    #[error("table {rows}x{cols} for |w| = {w_len}, |v| = {v_len} exceeds the budget of {budget} operations")]
    BudgetExceeded { rows: usize, cols: usize, w_len: usize, v_len: usize, budget: u64 },
    #[error("denominator has zero constant term")]
    SingularAtOrigin,
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("series coefficient at x^{m} y^{r} is not a non-negative integer")]
    NotACountingSeries { m: usize, r: usize },
    #[error("singular elimination step; the occurrence system is never singular, so this is a bug")]
    SingularSystem,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
