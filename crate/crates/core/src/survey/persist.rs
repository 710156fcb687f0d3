//! JSON-lines storage of survey records with resumable sweeps, and CSV
//! export of count tables.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::{survey_degree, SurveyOptions, SurveyRecord};
use crate::error::{Error, Result};
use crate::gf::Field;

pub const SCHEMA: &str = "fqt-survey";
pub const SCHEMA_VERSION: u32 = 1;

/// First line of every survey file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Header {
    pub schema: String,
    pub version: u32,
    pub field: String,
    pub seed: u64,
}

impl Header {
    pub fn new(field: &Field, seed: u64) -> Header {
        Header {
            schema: SCHEMA.into(),
            version: SCHEMA_VERSION,
            field: field.descriptor(),
            seed,
        }
    }
}

fn line_of<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)?;
    s.push('\n');
    Ok(s)
}

/// Writes a fresh file: header, then one record per line.
pub fn write_records(path: &Path, header: &Header, records: &[SurveyRecord]) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    w.write_all(line_of(header)?.as_bytes())?;
    for r in records {
        w.write_all(line_of(r)?.as_bytes())?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a survey file; any malformed line is a `SchemaVersionMismatch`
/// carrying its 1-based line number.
pub fn read_records(path: &Path) -> Result<(Header, Vec<SurveyRecord>)> {
    let reader = BufReader::new(File::open(path)?);
    let mut lines = reader.lines();
    let first = lines
        .next()
        .transpose()?
        .ok_or(Error::SchemaVersionMismatch {
            line: 1,
            detail: "empty file".into(),
        })?;
    let header: Header =
        serde_json::from_str(&first).map_err(|e| Error::SchemaVersionMismatch {
            line: 1,
            detail: e.to_string(),
        })?;
    if header.schema != SCHEMA || header.version != SCHEMA_VERSION {
        return Err(Error::SchemaVersionMismatch {
            line: 1,
            detail: format!(
                "found {} v{}, expected {SCHEMA} v{SCHEMA_VERSION}",
                header.schema, header.version
            ),
        });
    }
    let mut records = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: SurveyRecord =
            serde_json::from_str(&line).map_err(|e| Error::SchemaVersionMismatch {
                line: i + 2,
                detail: e.to_string(),
            })?;
        records.push(rec);
    }
    Ok((header, records))
}

/// Result of [`resume`]: records for the requested degrees, and which of
/// them had to be computed.
#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub records: Vec<SurveyRecord>,
    pub computed: Vec<usize>,
    pub reused: Vec<usize>,
    pub elapsed: Vec<(usize, Duration)>,
}

/// Surveys `degrees`, reusing any record already stored at `path` and
/// appending the new ones.
pub fn resume(
    path: &Path,
    field: &Field,
    degrees: &[usize],
    opts: &SurveyOptions,
    seed: u64,
) -> Result<SweepOutcome> {
    let header = Header::new(field, seed);
    let existing = if path.exists() {
        let (found, records) = read_records(path)?;
        if found.field != header.field || found.seed != header.seed {
            return Err(Error::InvalidArgument(format!(
                "{} holds a survey of {} with seed {}, not {} with seed {}",
                path.display(),
                found.field,
                found.seed,
                header.field,
                header.seed
            )));
        }
        records
    } else {
        write_records(path, &header, &[])?;
        Vec::new()
    };
    let mut file = OpenOptions::new().append(true).open(path)?;
    let mut out = SweepOutcome {
        records: Vec::new(),
        computed: Vec::new(),
        reused: Vec::new(),
        elapsed: Vec::new(),
    };
    for &d in degrees {
        if let Some(r) = existing.iter().find(|r| r.d == d) {
            out.records.push(r.clone());
            out.reused.push(d);
            continue;
        }
        let start = Instant::now();
        let rec = survey_degree(field, d, opts)?;
        file.write_all(line_of(&rec)?.as_bytes())?;
        file.flush()?;
        out.elapsed.push((d, start.elapsed()));
        out.computed.push(d);
        out.records.push(rec);
    }
    Ok(out)
}

/// Count table with columns `q, d, primes, wilson, special_c<code>...`.
pub fn write_csv<W: Write>(records: &[SurveyRecord], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    let q = records.iter().map(|r| r.q).max().unwrap_or(2);
    let mut head: Vec<String> = ["q", "d", "primes", "wilson"].map(String::from).to_vec();
    head.extend((1..q).map(|c| format!("special_c{c}")));
    out.write_record(&head)?;
    for r in records {
        let mut row = vec![
            r.q.to_string(),
            r.d.to_string(),
            r.prime_count.to_string(),
            r.wilson_primes.len().to_string(),
        ];
        row.extend((1..q).map(|c| r.special_primes.get(&c).map_or(0, Vec::len).to_string()));
        out.write_record(&row)?;
    }
    out.flush()?;
    Ok(())
}
