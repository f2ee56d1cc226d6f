use thiserror::Error;

/// Largest rank supported; label sets are stored as 64-bit masks.
pub const MAX_RANK: usize = 64;

/// Enumeration guard on Coxeter length.
pub const MAX_ENUMERATION_LENGTH: usize = 20;

/// Rank guard for zonotopal enumeration.
pub const MAX_ZONOTOPAL_RANK: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("rank {0} exceeds the supported maximum of {MAX_RANK}")]
    RankTooLarge(usize),
    #[error("letter {letter} out of range for rank {n} (expected 1..={})", n.saturating_sub(1))]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("word is not reduced: letter at position {position} swaps a descent")]
    NotReduced { position: usize },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("pattern of length {pattern} is longer than permutation of length {text}")]
    PatternTooLong { pattern: usize, text: usize },
    #[error("enumeration guard exceeded: {what} is {value}, limit {limit}")]
    GuardExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
    #[error("flip site not present in tiling")]
    SiteNotPresent,
    #[error("coloring has {found} entries but the tiling has {expected} tiles")]
    ColoringMismatch { expected: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn length_guard(length: usize) -> Result<()> {
    if length > MAX_ENUMERATION_LENGTH {
        return Err(Error::GuardExceeded {
            what: "length",
            value: length,
            limit: MAX_ENUMERATION_LENGTH,
        });
    }
    Ok(())
}
