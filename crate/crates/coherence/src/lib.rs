//! Corpus statistics for word-set coherence.
//!
//! The crate turns a preprocessed corpus (one document per line, tokens
//! separated by spaces) into immutable occurrence indexes and scores word
//! sets against them with five coherence measures:
//!
//! * `one-all`, `one-any`, `any-any` — subset-pair confirmation measures
//!   that average the difference measure `p(W'|W*) - p(W')` over families
//!   of disjoint subset pairs of the word set,
//! * `umass` — the smoothed log conditional-probability sum over ordered
//!   word pairs under the boolean document model,
//! * `uci` — mean (or median) pairwise pointwise mutual information under
//!   a boolean sliding-window model.
//!
//! On top of scoring, [`search`] generates word sets by directly optimizing
//! a measure with a recursive top-k beam expansion, and [`rater`] aggregates
//! human ratings (majority labels, Fleiss' kappa, Kendall's tau-b) so that
//! coherence rankings can be compared against human judgements.

pub mod corpus;
pub mod measures;
pub mod prob;
pub mod rater;
pub mod search;

pub use corpus::{CorpusConfig, DocumentIndex, DocumentIndexBuilder, WindowIndex};
pub use measures::{
    Aggregation, CoherenceKind, CoherenceResult, Scorer, SubsetPair, SubsetScheme, WordSet,
    WordSetScore,
};
pub use rater::{Label, Rating, RatingTable};
pub use search::{BeamConfig, GeneratedSet};

/// Errors shared by all modules of the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty corpus")]
    EmptyCorpus,
    #[error("out-of-vocabulary term: {0}")]
    OutOfVocabulary(String),
    #[error("empty word set")]
    EmptyWordSet,
    #[error("duplicate term in word set: {0}")]
    DuplicateTerm(String),
    #[error("word set too small: need at least {min} terms, got {len}")]
    WordSetTooSmall { len: usize, min: usize },
    #[error("word set too large for subset enumeration: {len} terms (limit {max})")]
    WordSetTooLarge { len: usize, max: usize },
    #[error("invalid subset pair: {0}")]
    InvalidSubsetPair(&'static str),
    #[error("insufficient support: all {pairs_total} subset pairs pruned")]
    InsufficientSupport { pairs_total: u64 },
    #[error("uci coherence requires a window index")]
    MissingWindowIndex,
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("degenerate ranking: {0}")]
    DegenerateRanking(&'static str),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("need at least two paired observations, got {0}")]
    TooFewObservations(usize),
    #[error("kappa requires at least two raters per item, got {0}")]
    TooFewRaters(usize),
    #[error("unequal rater counts: set {set_id} has {got} ratings, expected {expected}")]
    UnequalRaterCounts {
        set_id: String,
        expected: usize,
        got: usize,
    },
    #[error("ratings line {line}: {reason}")]
    InvalidRating { line: u64, reason: String },
    #[error("empty ratings table")]
    EmptyRatings,
    #[error("unknown coherence measure: {0}")]
    UnknownKind(String),
    #[error("unknown aggregation: {0}")]
    UnknownAggregation(String),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
