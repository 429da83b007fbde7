//! Occurrence indexes over a preprocessed corpus.
//!
//! Input is already tokenized: one document per line, tokens separated by
//! whitespace, blank lines skipped. [`DocumentIndex`] records, per term, the
//! set of documents containing it (boolean document model) plus raw token
//! counts for TF-IDF ranking. [`WindowIndex`] applies the same boolean model
//! to fixed-size sliding windows treated as virtual documents.
//!
//! Indexes are immutable once built and can be shared freely across threads.

use std::collections::BTreeMap;

use crate::{Error, Result};

/// Corpus-level knobs with their conventional defaults: terms in at most
/// 1% or at least 60% of documents are dropped, windows span ten tokens.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorpusConfig {
    /// Keep a term only if its document frequency exceeds `min_df * D`.
    pub min_df: f64,
    /// Keep a term only if its document frequency is below `max_df * D`.
    pub max_df: f64,
    /// Tokens per sliding window.
    pub window_size: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        Self {
            min_df: 0.01,
            max_df: 0.60,
            window_size: 10,
        }
    }
}

impl CorpusConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.min_df) || !(0.0..=1.0).contains(&self.max_df) {
            return Err(Error::InvalidConfig(
                "document-frequency bounds must lie in [0, 1]".into(),
            ));
        }
        if self.min_df > self.max_df {
            return Err(Error::InvalidConfig(format!(
                "min_df {} exceeds max_df {}",
                self.min_df, self.max_df
            )));
        }
        if self.window_size == 0 {
            return Err(Error::InvalidConfig("window size must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
struct TermEntry {
    /// Sorted, deduplicated ids of the documents containing the term.
    postings: Vec<u32>,
    /// Total token count of the term over the corpus.
    freq: u64,
}

/// Immutable per-term document-occurrence index over a corpus of `D`
/// documents.
///
/// Document ids are dense and 0-based in input order. The vocabulary is
/// kept sorted, so all iteration over terms is deterministic.
#[derive(Debug, Clone)]
pub struct DocumentIndex {
    doc_count: u32,
    terms: BTreeMap<String, TermEntry>,
}

/// Incremental constructor for [`DocumentIndex`].
#[derive(Debug, Default)]
pub struct DocumentIndexBuilder {
    doc_count: u32,
    terms: BTreeMap<String, TermEntry>,
}

impl DocumentIndexBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds one document. Documents with no tokens are skipped and do not
    /// consume a document id. Repeated tokens raise the term frequency but
    /// contribute a single posting.
    pub fn push_document<I, S>(&mut self, tokens: I)
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let id = self.doc_count;
        let mut any = false;
        for token in tokens {
            let token = token.as_ref();
            if token.is_empty() {
                continue;
            }
            any = true;
            match self.terms.get_mut(token) {
                Some(entry) => {
                    entry.freq += 1;
                    if entry.postings.last() != Some(&id) {
                        entry.postings.push(id);
                    }
                }
                None => {
                    self.terms.insert(
                        token.to_owned(),
                        TermEntry {
                            postings: vec![id],
                            freq: 1,
                        },
                    );
                }
            }
        }
        if any {
            self.doc_count += 1;
        }
    }

    pub fn build(self) -> Result<DocumentIndex> {
        if self.doc_count == 0 {
            return Err(Error::EmptyCorpus);
        }
        Ok(DocumentIndex {
            doc_count: self.doc_count,
            terms: self.terms,
        })
    }
}

impl DocumentIndex {
    /// Builds an index from lines of whitespace-separated tokens, one
    /// document per line. Blank lines are skipped; an input with no
    /// non-empty line is an error.
    pub fn from_lines<I, S>(lines: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut builder = DocumentIndexBuilder::new();
        for line in lines {
            builder.push_document(line.as_ref().split_whitespace());
        }
        builder.build()
    }

    /// Total number of documents `D`.
    pub fn doc_count(&self) -> u32 {
        self.doc_count
    }

    pub fn vocab_size(&self) -> usize {
        self.terms.len()
    }

    /// Terms in lexicographic order.
    pub fn vocabulary(&self) -> impl Iterator<Item = &str> {
        self.terms.keys().map(String::as_str)
    }

    pub fn contains_term(&self, term: &str) -> bool {
        self.terms.contains_key(term)
    }

    /// Sorted document ids containing `term`, or `None` if out of vocabulary.
    pub fn postings(&self, term: &str) -> Option<&[u32]> {
        self.terms.get(term).map(|e| e.postings.as_slice())
    }

    /// Number of documents containing `term` (0 if out of vocabulary).
    pub fn document_frequency(&self, term: &str) -> u32 {
        self.terms
            .get(term)
            .map_or(0, |e| e.postings.len() as u32)
    }

    /// Total token count of `term` over the corpus (0 if out of vocabulary).
    pub fn term_frequency(&self, term: &str) -> u64 {
        self.terms.get(term).map_or(0, |e| e.freq)
    }

    /// Total token count over all indexed terms.
    pub fn total_tokens(&self) -> u64 {
        self.terms.values().map(|e| e.freq).sum()
    }

    /// Returns a copy retaining exactly the terms whose document frequency
    /// satisfies `min_df * D < df < max_df * D` (both bounds strict, so a
    /// term at either boundary is removed). The document count is unchanged.
    pub fn filter_vocabulary(&self, min_df: f64, max_df: f64) -> Result<Self> {
        CorpusConfig {
            min_df,
            max_df,
            ..CorpusConfig::default()
        }
        .validate()?;
        let d = f64::from(self.doc_count);
        let terms = self
            .terms
            .iter()
            .filter(|(_, e)| {
                let df = e.postings.len() as f64;
                df > min_df * d && df < max_df * d
            })
            .map(|(t, e)| (t.clone(), e.clone()))
            .collect();
        Ok(Self {
            doc_count: self.doc_count,
            terms,
        })
    }

    /// Top `n` terms by `term_frequency * ln(D / df)`, descending; ties are
    /// broken lexicographically. Returns fewer terms when the vocabulary is
    /// smaller than `n`.
    pub fn top_tfidf_terms(&self, n: usize) -> Vec<String> {
        let d = f64::from(self.doc_count);
        let mut scored: Vec<(&String, f64)> = self
            .terms
            .iter()
            .map(|(t, e)| {
                let idf = (d / e.postings.len() as f64).ln();
                (t, e.freq as f64 * idf)
            })
            .collect();
        scored.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        scored.into_iter().take(n).map(|(t, _)| t.clone()).collect()
    }
}

/// Immutable per-term occurrence index over sliding windows treated as
/// virtual documents.
///
/// Every document of `t` tokens contributes `max(1, t - window_size + 1)`
/// stride-1 windows; windows never span document boundaries.
#[derive(Debug, Clone)]
pub struct WindowIndex {
    window_size: usize,
    window_count: u32,
    terms: BTreeMap<String, Vec<u32>>,
}

impl WindowIndex {
    /// Builds a window index from lines of whitespace-separated tokens.
    pub fn from_lines<I, S>(lines: I, window_size: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        if window_size == 0 {
            return Err(Error::InvalidConfig("window size must be positive".into()));
        }
        let mut terms: BTreeMap<String, Vec<u32>> = BTreeMap::new();
        let mut window_count: u32 = 0;
        for line in lines {
            let tokens: Vec<&str> = line.as_ref().split_whitespace().collect();
            if tokens.is_empty() {
                continue;
            }
            let n_windows = tokens.len().saturating_sub(window_size).max(0) + 1;
            for start in 0..n_windows {
                let id = window_count;
                let end = (start + window_size).min(tokens.len());
                for &token in &tokens[start..end] {
                    match terms.get_mut(token) {
                        Some(postings) => {
                            if postings.last() != Some(&id) {
                                postings.push(id);
                            }
                        }
                        None => {
                            terms.insert(token.to_owned(), vec![id]);
                        }
                    }
                }
                window_count += 1;
            }
        }
        if window_count == 0 {
            return Err(Error::EmptyCorpus);
        }
        Ok(Self {
            window_size,
            window_count,
            terms,
        })
    }

    pub fn window_size(&self) -> usize {
        self.window_size
    }

    /// Total number of windows `N`.
    pub fn window_count(&self) -> u32 {
        self.window_count
    }

    pub fn vocab_size(&self) -> usize {
        self.terms.len()
    }

    pub fn contains_term(&self, term: &str) -> bool {
        self.terms.contains_key(term)
    }

    /// Sorted window ids containing `term`, or `None` if the term occurs in
    /// no window.
    pub fn postings(&self, term: &str) -> Option<&[u32]> {
        self.terms.get(term).map(Vec::as_slice)
    }

    /// Number of windows containing `term`.
    pub fn window_frequency(&self, term: &str) -> u32 {
        self.terms.get(term).map_or(0, |p| p.len() as u32)
    }
}
