//! Target-domain passage store: loading, tokenization, sampling.
//!
//! The corpus is the only in-domain input the pipeline needs — no queries
//! and no labels. Stores are immutable after load and safe to share across
//! worker threads.

use std::collections::HashMap;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A single in-domain passage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Passage {
    pub id: String,
    pub text: String,
    /// Name of the target domain this passage belongs to (may be empty).
    #[serde(default, rename = "domain")]
    pub domain_tag: String,
}

/// Normalized token sequence: lowercased, Unicode word/number tokens,
/// punctuation dropped, truncated to a caller-supplied cap.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TokenSequence(Vec<String>);

impl TokenSequence {
    pub fn tokens(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, String> {
        self.0.iter()
    }

    pub fn joined(&self) -> String {
        self.0.join(" ")
    }
}

impl fmt::Display for TokenSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.joined())
    }
}

/// Lowercase, split into Unicode alphanumeric runs, truncate to `max_tokens`.
///
/// Lowercasing happens before segmentation so that multi-char lowercase
/// expansions cannot smuggle non-alphanumeric marks into a token; this keeps
/// the operation idempotent on its own space-joined output.
pub fn tokenize(text: &str, max_tokens: usize) -> TokenSequence {
    assert!(max_tokens >= 1, "max_tokens must be >= 1");
    let lowered = text.to_lowercase();
    let mut tokens = Vec::new();
    let mut current = String::new();
    for ch in lowered.chars() {
        if ch.is_alphanumeric() {
            current.push(ch);
        } else if !current.is_empty() {
            tokens.push(std::mem::take(&mut current));
            if tokens.len() == max_tokens {
                return TokenSequence(tokens);
            }
        }
    }
    if !current.is_empty() && tokens.len() < max_tokens {
        tokens.push(current);
    }
    TokenSequence(tokens)
}

/// Corpus summary computed at load time.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CorpusStats {
    pub passage_count: usize,
    pub mean_token_length: f64,
}

/// Input corpus file formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorpusFormat {
    /// One JSON object per line: `{"id": ..., "text": ..., "domain": ...?}`.
    Jsonl,
    /// `id<TAB>text`, no header (LoTTE collection style).
    Tsv,
}

impl std::str::FromStr for CorpusFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jsonl" => Ok(CorpusFormat::Jsonl),
            "tsv" => Ok(CorpusFormat::Tsv),
            other => Err(Error::Config(format!("unknown corpus format {other:?}"))),
        }
    }
}

/// Immutable, insertion-ordered collection of passages with exact id lookup.
#[derive(Debug, Clone, Default)]
pub struct PassageStore {
    passages: Vec<Passage>,
    by_id: HashMap<String, usize>,
}

impl PassageStore {
    /// Build a store from passages, rejecting duplicate or empty ids.
    pub fn from_passages(passages: Vec<Passage>) -> Result<Self> {
        let mut store = PassageStore::default();
        for (i, p) in passages.into_iter().enumerate() {
            store.push(p).map_err(|e| match e {
                Error::DuplicateId { id, .. } => Error::DuplicateId {
                    path: "<memory>".into(),
                    line: i + 1,
                    id,
                },
                other => other,
            })?;
        }
        Ok(store)
    }

    fn push(&mut self, passage: Passage) -> Result<()> {
        if passage.id.is_empty() {
            return Err(Error::MalformedRecord {
                path: "<memory>".into(),
                line: self.passages.len() + 1,
                reason: "empty passage id".into(),
            });
        }
        if passage.text.is_empty() {
            return Err(Error::MalformedRecord {
                path: "<memory>".into(),
                line: self.passages.len() + 1,
                reason: format!("passage {:?} has empty text", passage.id),
            });
        }
        if self.by_id.contains_key(&passage.id) {
            return Err(Error::DuplicateId {
                path: "<memory>".into(),
                line: self.passages.len() + 1,
                id: passage.id,
            });
        }
        self.by_id.insert(passage.id.clone(), self.passages.len());
        self.passages.push(passage);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.passages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.passages.is_empty()
    }

    /// Passages in insertion order.
    pub fn iter(&self) -> std::slice::Iter<'_, Passage> {
        self.passages.iter()
    }

    pub fn get(&self, id: &str) -> Option<&Passage> {
        self.by_id.get(id).map(|&i| &self.passages[i])
    }

    pub fn get_by_index(&self, index: usize) -> Option<&Passage> {
        self.passages.get(index)
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.by_id.get(id).copied()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.by_id.contains_key(id)
    }

    pub fn stats(&self) -> CorpusStats {
        let total: usize = self
            .passages
            .iter()
            .map(|p| tokenize(&p.text, usize::MAX).len())
            .sum();
        CorpusStats {
            passage_count: self.passages.len(),
            mean_token_length: if self.passages.is_empty() {
                0.0
            } else {
                total as f64 / self.passages.len() as f64
            },
        }
    }

    /// Re-serialize as jsonl; `load_corpus` of the output is record-equivalent.
    pub fn save_jsonl(&self, path: &Path) -> Result<()> {
        let mut out = Vec::new();
        for p in &self.passages {
            serde_json::to_writer(&mut out, p).expect("passage serialization cannot fail");
            out.push(b'\n');
        }
        let mut f = File::create(path).map_err(|e| Error::io(path, e))?;
        f.write_all(&out).map_err(|e| Error::io(path, e))?;
        Ok(())
    }
}

#[derive(Deserialize)]
struct JsonlRecord {
    id: String,
    text: String,
    #[serde(default)]
    domain: String,
}

/// Load a corpus file in the declared format.
///
/// One `Passage` per record, in file order; duplicate ids are rejected and
/// malformed records are reported with their line number.
pub fn load_corpus(path: &Path, format: CorpusFormat) -> Result<PassageStore> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let reader = BufReader::new(file);
    let mut store = PassageStore::default();
    let mut line_no = 0usize;
    for line in reader.lines() {
        let line = line.map_err(|e| Error::io(path, e))?;
        line_no += 1;
        if line.trim().is_empty() {
            continue;
        }
        let passage = match format {
            CorpusFormat::Jsonl => {
                let rec: JsonlRecord =
                    serde_json::from_str(&line).map_err(|e| Error::MalformedRecord {
                        path: path.into(),
                        line: line_no,
                        reason: e.to_string(),
                    })?;
                Passage {
                    id: rec.id,
                    text: rec.text,
                    domain_tag: rec.domain,
                }
            }
            CorpusFormat::Tsv => {
                let (id, text) = line.split_once('\t').ok_or(Error::MalformedRecord {
                    path: path.into(),
                    line: line_no,
                    reason: "expected id<TAB>text".into(),
                })?;
                Passage {
                    id: id.to_string(),
                    text: text.to_string(),
                    domain_tag: String::new(),
                }
            }
        };
        store.push(passage).map_err(|e| match e {
            Error::DuplicateId { id, .. } => Error::DuplicateId {
                path: path.into(),
                line: line_no,
                id,
            },
            Error::MalformedRecord { reason, .. } => Error::MalformedRecord {
                path: path.into(),
                line: line_no,
                reason,
            },
            other => other,
        })?;
    }
    if store.is_empty() {
        return Err(Error::EmptyCorpus { path: path.into() });
    }
    Ok(store)
}

/// Passage selection strategies. Uniform-without-replacement is the only
/// built-in; the enum is the extension point for corpus-aware strategies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SampleStrategy {
    Uniform,
}

/// Draw `x` distinct passages uniformly without replacement.
///
/// Deterministic for a given `(seed, store order)`.
pub fn sample_passages(
    store: &PassageStore,
    x: usize,
    seed: u64,
    strategy: SampleStrategy,
) -> Result<Vec<Passage>> {
    if x == 0 || x > store.len() {
        return Err(Error::SampleTooLarge {
            requested: x,
            available: store.len(),
        });
    }
    match strategy {
        SampleStrategy::Uniform => {
            use rand::Rng;
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            // partial Fisher-Yates over index space
            let mut indices: Vec<usize> = (0..store.len()).collect();
            for i in 0..x {
                let j = rng.random_range(i..indices.len());
                indices.swap(i, j);
            }
            Ok(indices[..x]
                .iter()
                .map(|&i| store.get_by_index(i).expect("index in range").clone())
                .collect())
        }
    }
}
