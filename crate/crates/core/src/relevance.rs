//! Frequency relevance `F`, length-normalized log relevance `Q`, ranking,
//! and mutual-relevance sequences built from the two.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::{Corpus, Query};
use crate::error::{Error, Result};

/// Which relevance measure to rank by or read off.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Measure {
    /// Sum of query-term entry counts, normalized by its maximum.
    F,
    /// Sum of `ln(count + 1)` over terms divided by document length,
    /// normalized by its maximum.
    Q,
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Measure::F => "f",
            Measure::Q => "q",
        })
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "f" => Ok(Measure::F),
            "q" => Ok(Measure::Q),
            other => Err(Error::InvalidParameter {
                name: "measure",
                reason: format!("expected `f` or `q`, got `{other}`"),
            }),
        }
    }
}

/// Scores of one document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RelevanceRow {
    pub id: String,
    pub raw_f: f64,
    pub raw_q: f64,
    pub f: f64,
    pub q: f64,
}

impl RelevanceRow {
    /// False for documents that contain none of the query terms.
    pub fn matched(&self) -> bool {
        self.raw_f > 0.0
    }

    pub fn score(&self, measure: Measure) -> f64 {
        match measure {
            Measure::F => self.f,
            Measure::Q => self.q,
        }
    }
}

/// Per-document relevance scores in ingestion order.
#[derive(Debug, Clone, PartialEq)]
pub struct RelevanceTable {
    rows: Vec<RelevanceRow>,
    f_max_raw: f64,
    q_max_raw: f64,
}

impl RelevanceTable {
    /// Builds a table from raw scores, normalizing each measure by its
    /// maximum so that the top document scores exactly 1.
    pub fn from_raw<I>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (String, f64, f64)>,
    {
        let raw: Vec<_> = raw.into_iter().collect();
        if raw.is_empty() {
            return Err(Error::EmptyCorpus);
        }
        for (id, rf, rq) in &raw {
            for (name, v) in [("raw_f", rf), ("raw_q", rq)] {
                if !(v.is_finite() && *v >= 0.0) {
                    return Err(Error::InvalidParameter {
                        name,
                        reason: format!("document `{id}` has score {v}"),
                    });
                }
            }
        }
        let f_max_raw = raw.iter().map(|r| r.1).fold(0.0, f64::max);
        let q_max_raw = raw.iter().map(|r| r.2).fold(0.0, f64::max);
        if f_max_raw <= 0.0 || q_max_raw <= 0.0 {
            return Err(Error::QueryMatchesNothing);
        }
        let rows = raw
            .into_iter()
            .map(|(id, raw_f, raw_q)| RelevanceRow {
                id,
                raw_f,
                raw_q,
                f: raw_f / f_max_raw,
                q: raw_q / q_max_raw,
            })
            .collect();
        Ok(Self {
            rows,
            f_max_raw,
            q_max_raw,
        })
    }

    pub fn rows(&self) -> &[RelevanceRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn f_max_raw(&self) -> f64 {
        self.f_max_raw
    }

    pub fn q_max_raw(&self) -> f64 {
        self.q_max_raw
    }

    pub fn scores(&self, measure: Measure) -> Vec<f64> {
        self.rows.iter().map(|r| r.score(measure)).collect()
    }

    pub fn unmatched_count(&self) -> usize {
        self.rows.iter().filter(|r| !r.matched()).count()
    }

    /// Drops documents with no query-term entries. Normalization is kept:
    /// the maxima are attained by matched documents.
    pub fn matched_only(&self) -> Self {
        Self {
            rows: self.rows.iter().filter(|r| r.matched()).cloned().collect(),
            f_max_raw: self.f_max_raw,
            q_max_raw: self.q_max_raw,
        }
    }
}

/// Scores every document of `corpus` against `query`.
pub fn score_corpus(corpus: &Corpus, query: &Query) -> Result<RelevanceTable> {
    if corpus.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    if query.is_empty() {
        return Err(Error::EmptyQuery);
    }
    let raw = corpus.documents().iter().map(|doc| {
        let mut raw_f = 0.0;
        let mut log_sum = 0.0;
        for term in query.terms() {
            let m = doc.count_entries(term) as f64;
            raw_f += m;
            log_sum += m.ln_1p();
        }
        (doc.id().to_string(), raw_f, log_sum / doc.length() as f64)
    });
    RelevanceTable::from_raw(raw)
}

/// Document indices ordered by descending score; position 0 is rank 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankPermutation {
    order: Vec<usize>,
}

impl RankPermutation {
    pub fn order(&self) -> &[usize] {
        &self.order
    }
}

/// Stable descending sort by `measure`; ties keep ingestion order.
pub fn rank_by(table: &RelevanceTable, measure: Measure) -> RankPermutation {
    let scores = table.scores(measure);
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].total_cmp(&scores[a]));
    RankPermutation { order }
}

/// Scores of one measure laid out in the rank order of another.
#[derive(Debug, Clone, PartialEq)]
pub struct MutualSequence {
    pub values: Vec<f64>,
    pub ranked_by: Measure,
    pub read_off: Measure,
}

impl MutualSequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

pub fn mutual_sequence(
    table: &RelevanceTable,
    ranked_by: Measure,
    read_off: Measure,
) -> MutualSequence {
    let perm = rank_by(table, ranked_by);
    let values = perm
        .order()
        .iter()
        .map(|&i| table.rows()[i].score(read_off))
        .collect();
    MutualSequence {
        values,
        ranked_by,
        read_off,
    }
}
