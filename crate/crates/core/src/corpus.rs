//! Document ingestion, tokenization and query-term counting.

use std::collections::HashSet;
use std::io::BufRead;

use serde::Deserialize;

use crate::error::{Error, Result};

/// Splits `text` into maximal runs of alphanumeric characters, lowercased.
///
/// Every non-alphanumeric character is a separator. Alphanumeric is the
/// Unicode notion, so Cyrillic and accented Latin words survive intact.
/// Lowercasing happens before splitting because a few case mappings emit
/// combining marks, which are separators.
pub fn tokenize(text: &str) -> Vec<String> {
    text.to_lowercase()
        .split(|c: char| !c.is_alphanumeric())
        .filter(|run| !run.is_empty())
        .map(str::to_owned)
        .collect()
}

/// A tokenized document. `length()` is the token count used for length
/// normalization and is never zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    id: String,
    tokens: Vec<String>,
    meta: Option<serde_json::Value>,
}

impl Document {
    pub fn new(id: impl Into<String>, text: &str) -> Result<Self> {
        Self::from_tokens(id, tokenize(text))
    }

    pub fn from_tokens(id: impl Into<String>, tokens: Vec<String>) -> Result<Self> {
        let id = id.into();
        if tokens.is_empty() {
            return Err(Error::EmptyDocument { id });
        }
        Ok(Self {
            id,
            tokens,
            meta: None,
        })
    }

    pub fn with_meta(mut self, meta: Option<serde_json::Value>) -> Self {
        self.meta = meta;
        self
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn meta(&self) -> Option<&serde_json::Value> {
        self.meta.as_ref()
    }

    pub fn length(&self) -> usize {
        self.tokens.len()
    }

    /// Number of tokens exactly equal to `term`.
    pub fn count_entries(&self, term: &str) -> usize {
        self.tokens.iter().filter(|t| *t == term).count()
    }
}

/// Ordered, id-unique collection of documents.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Corpus {
    documents: Vec<Document>,
}

impl Corpus {
    /// Builds a corpus, rejecting duplicate ids. Order is preserved.
    pub fn from_documents(documents: Vec<Document>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(documents.len());
        for doc in &documents {
            if !seen.insert(doc.id.as_str()) {
                return Err(Error::DuplicateId { id: doc.id.clone() });
            }
        }
        Ok(Self { documents })
    }

    pub fn documents(&self) -> &[Document] {
        &self.documents
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }
}

#[derive(Deserialize)]
struct Record {
    id: String,
    text: String,
    #[serde(default)]
    meta: Option<serde_json::Value>,
}

/// Reads one `{"id": .., "text": .., "meta": ..}` record per line.
///
/// Blank lines are skipped. Line numbers in errors are 1-based.
pub fn ingest_jsonl<R: BufRead>(reader: R) -> Result<Corpus> {
    let mut documents = Vec::new();
    let mut seen = HashSet::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::MalformedRecord {
            line: line_no,
            reason: e.to_string(),
        })?;
        if line.trim().is_empty() {
            continue;
        }
        let record: Record = serde_json::from_str(&line).map_err(|e| Error::MalformedRecord {
            line: line_no,
            reason: e.to_string(),
        })?;
        if !seen.insert(record.id.clone()) {
            return Err(Error::DuplicateId { id: record.id });
        }
        documents.push(Document::new(record.id, &record.text)?.with_meta(record.meta));
    }
    Ok(Corpus { documents })
}

/// Distinct, lowercased retrieval terms in the order given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    terms: Vec<String>,
}

impl Query {
    /// Normalizes each term to lowercase and drops repeats.
    pub fn new<I, S>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out: Vec<String> = Vec::new();
        for term in terms {
            let term = term.as_ref().to_lowercase();
            if !term.is_empty() && !out.contains(&term) {
                out.push(term);
            }
        }
        if out.is_empty() {
            return Err(Error::EmptyQuery);
        }
        Ok(Self { terms: out })
    }

    /// Tokenizes free text into a query, e.g. `"alpha beta"`.
    pub fn parse(text: &str) -> Result<Self> {
        Self::new(tokenize(text))
    }

    pub fn terms(&self) -> &[String] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}
