//! CSV interchange formats. Every number is written with
//! [`fmt_sig`](crate::format::fmt_sig).

use std::io::{BufRead, Write};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::format::fmt_sig;
use crate::relevance::RelevanceTable;

pub const SCORES_HEADER: [&str; 5] = ["id", "raw_f", "raw_q", "f", "q"];
pub const SERIES_HEADER: &str = "value";

/// Writes `id,raw_f,raw_q,f,q` rows in ingestion order.
pub fn write_scores_csv<W: Write>(table: &RelevanceTable, writer: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(writer);
    out.write_record(SCORES_HEADER)?;
    for row in table.rows() {
        out.write_record([
            row.id.as_str(),
            &fmt_sig(row.raw_f),
            &fmt_sig(row.raw_q),
            &fmt_sig(row.f),
            &fmt_sig(row.q),
        ])?;
    }
    out.flush()?;
    Ok(())
}

#[derive(Deserialize)]
struct ScoreRecord {
    id: String,
    raw_f: f64,
    raw_q: f64,
}

/// Reads a scores file and renormalizes from its raw columns.
pub fn read_scores_csv<R: std::io::Read>(reader: R) -> Result<RelevanceTable> {
    let mut rdr = csv::Reader::from_reader(reader);
    let headers = rdr.headers()?.clone();
    if headers.iter().ne(SCORES_HEADER) {
        return Err(Error::MalformedRecord {
            line: 1,
            reason: format!("expected header `{}`", SCORES_HEADER.join(",")),
        });
    }
    let mut raw = Vec::new();
    for (i, rec) in rdr.deserialize::<ScoreRecord>().enumerate() {
        let rec = rec.map_err(|e| Error::MalformedRecord {
            line: i + 2,
            reason: e.to_string(),
        })?;
        raw.push((rec.id, rec.raw_f, rec.raw_q));
    }
    RelevanceTable::from_raw(raw)
}

/// One value per line under a `value` header.
pub fn write_series_csv<W: Write>(values: &[f64], mut writer: W) -> Result<()> {
    writeln!(writer, "{SERIES_HEADER}")?;
    for &v in values {
        writeln!(writer, "{}", fmt_sig(v))?;
    }
    writer.flush()?;
    Ok(())
}

/// Reads one value per line; a leading `value` header and blank lines are
/// ignored.
pub fn read_series_csv<R: BufRead>(reader: R) -> Result<Vec<f64>> {
    let mut values = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let field = line.trim();
        if field.is_empty() || (i == 0 && field == SERIES_HEADER) {
            continue;
        }
        let v: f64 = field.parse().map_err(|_| Error::MalformedRecord {
            line: i + 1,
            reason: format!("`{field}` is not a number"),
        })?;
        if !v.is_finite() {
            return Err(Error::MalformedRecord {
                line: i + 1,
                reason: format!("non-finite value `{field}`"),
            });
        }
        values.push(v);
    }
    Ok(values)
}

/// Two-column numeric table, e.g. `n,d` or `x,y`.
pub fn write_pairs_csv<W, A, B>(header: (&str, &str), rows: &[(A, B)], mut writer: W) -> Result<()>
where
    W: Write,
    A: Copy + Into<f64>,
    B: Copy + Into<f64>,
{
    writeln!(writer, "{},{}", header.0, header.1)?;
    for &(a, b) in rows {
        writeln!(writer, "{},{}", fmt_sig(a.into()), fmt_sig(b.into()))?;
    }
    writer.flush()?;
    Ok(())
}

/// Window/prefix sizes are integers; widen them for [`write_pairs_csv`].
pub fn widen(rows: &[(usize, f64)]) -> Vec<(f64, f64)> {
    rows.iter().map(|&(n, v)| (n as f64, v)).collect()
}
