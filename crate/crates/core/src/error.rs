//! Crate-wide error type.

use std::path::PathBuf;

/// Errors surfaced by corpus handling, retrieval, generation, training,
/// and pipeline orchestration.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed record at {path}:{line}: {reason}")]
    MalformedRecord {
        path: PathBuf,
        line: usize,
        reason: String,
    },

    #[error("duplicate passage id {id:?} at {path}:{line}")]
    DuplicateId {
        path: PathBuf,
        line: usize,
        id: String,
    },

    #[error("corpus file {path} contains no records")]
    EmptyCorpus { path: PathBuf },

    #[error("sample size {requested} exceeds store size {available}")]
    SampleTooLarge { requested: usize, available: usize },

    #[error("unknown passage id {0:?}")]
    UnknownPassage(String),

    #[error("embedding dimension mismatch: query {query} vs document {doc}")]
    DimensionMismatch { query: usize, doc: usize },

    #[error("empty token sequence where at least one token is required")]
    EmptyTokens,

    #[error("query {0:?} is empty after tokenization")]
    EmptyQuery(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("prompt template {id:?} invalid: {reason}")]
    BadTemplate { id: String, reason: String },

    #[error("prompt is missing the target-passage delimiter {delimiter:?}")]
    MissingPassageDelimiter { delimiter: String },

    #[error("generation failed for prompt {prompt_id:?}: {source}")]
    Generation {
        prompt_id: String,
        #[source]
        source: Box<Error>,
    },

    #[error("endpoint {endpoint} returned status {status} after {attempts} attempt(s): {body}")]
    HttpStatus {
        endpoint: String,
        status: u16,
        attempts: u32,
        body: String,
    },

    #[error("request to {endpoint} failed after {attempts} attempt(s): {reason}")]
    Transport {
        endpoint: String,
        attempts: u32,
        reason: String,
    },

    #[error("completion was empty")]
    EmptyCompletion,

    #[error("not enough queries: need {needed}, have {available} ({context})")]
    InsufficientQueries {
        needed: usize,
        available: usize,
        context: String,
    },

    #[error("query set overlap: {count} distillation query id(s) were already used for reranker training (e.g. {example:?})")]
    QueryReuse { count: usize, example: String },

    #[error("ragged input: expected vectors of length {expected}, found {found}")]
    RaggedInput { expected: usize, found: usize },

    #[error("qrels are missing query id {0:?}")]
    MissingQrels(String),

    #[error("no evaluable queries (all ideal gains are zero or run set is empty)")]
    NoEvaluableQueries,

    #[error("checkpoint {path} is invalid: {reason}")]
    BadCheckpoint { path: PathBuf, reason: String },

    #[error("stage {stage} prerequisite missing: {what}")]
    MissingPrerequisite { stage: u8, what: String },

    #[error("config hash mismatch: manifest was created with {manifest_hash}, current config hashes to {config_hash}")]
    ConfigHashMismatch {
        manifest_hash: String,
        config_hash: String,
    },

    #[error("artifact {path} failed checksum verification")]
    ChecksumMismatch { path: PathBuf },

    #[error("config error: {0}")]
    Config(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
