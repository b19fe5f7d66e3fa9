//! Batch evaluation of a CSV table of parameter tuples.

use std::io::Read;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use srg_core::{decide, Certificate, DecideOptions, MRange, SrgParams, Verdict};

pub const HEADER: [&str; 4] = ["v", "k", "lambda", "mu"];

#[derive(Debug, thiserror::Error)]
pub enum ScanError {
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error("expected header `v,k,lambda,mu`, found `{0}`")]
    Header(String),
}

/// Row outcome: a pipeline verdict, or `Invalid` when the row could not be
/// turned into a parameter tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RowVerdict {
    Nonexistent,
    Inconclusive,
    InfeasibleClassical,
    NotApplicable,
    Invalid,
}

impl From<Verdict> for RowVerdict {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Nonexistent => RowVerdict::Nonexistent,
            Verdict::Inconclusive => RowVerdict::Inconclusive,
            Verdict::InfeasibleClassical => RowVerdict::InfeasibleClassical,
            Verdict::NotApplicable => RowVerdict::NotApplicable,
        }
    }
}

impl RowVerdict {
    pub const ALL: [RowVerdict; 5] = [
        RowVerdict::Nonexistent,
        RowVerdict::Inconclusive,
        RowVerdict::InfeasibleClassical,
        RowVerdict::NotApplicable,
        RowVerdict::Invalid,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RowVerdict::Nonexistent => "Nonexistent",
            RowVerdict::Inconclusive => "Inconclusive",
            RowVerdict::InfeasibleClassical => "InfeasibleClassical",
            RowVerdict::NotApplicable => "NotApplicable",
            RowVerdict::Invalid => "Invalid",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    /// 1-based line number in the input file.
    pub line: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<SrgParams>,
    pub verdict: RowVerdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k4_lower: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m_range: Option<MRange>,
    /// Split size of the first witness found.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness_w: Option<u64>,
    pub krein_q22_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl ScanRow {
    fn invalid(line: u64, params: Option<SrgParams>, error: String) -> Self {
        ScanRow {
            line,
            params,
            verdict: RowVerdict::Invalid,
            error: Some(error),
            k4_lower: None,
            m_range: None,
            witness_w: None,
            krein_q22_zero: false,
            elapsed_ms: None,
        }
    }

    fn from_certificate(line: u64, cert: &Certificate) -> Self {
        ScanRow {
            line,
            params: Some(cert.params),
            verdict: cert.verdict.into(),
            error: None,
            k4_lower: cert.k4_bound.as_ref().map(|b| b.lower),
            m_range: cert.m_range,
            witness_w: cert.witnesses.iter().find_map(|x| x.witness.as_ref().map(|w| w.w)),
            krein_q22_zero: cert.feasibility.krein_q22_zero,
            elapsed_ms: None,
        }
    }

    /// One tab-separated line for the plain-text table.
    pub fn to_table_line(&self) -> String {
        fn opt<T: ToString>(x: Option<T>) -> String {
            x.map_or_else(|| "-".to_string(), |v| v.to_string())
        }
        let params = self.params.map_or_else(|| "-".to_string(), |p| p.to_string());
        let range = match self.m_range {
            Some(MRange { lower, upper: Some(u) }) => format!("[{lower},{u}]"),
            Some(MRange { lower, upper: None }) => format!("[{lower},-]"),
            None => "-".to_string(),
        };
        let mut s = format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.line,
            params,
            self.verdict.as_str(),
            opt(self.k4_lower),
            range,
            opt(self.witness_w),
            self.krein_q22_zero
        );
        if let Some(e) = &self.error {
            s.push('\t');
            s.push_str(e);
        }
        if let Some(t) = self.elapsed_ms {
            s.push_str(&format!("\t{t}ms"));
        }
        s
    }
}

pub const TABLE_HEADER: &str = "line\tparams\tverdict\tk4_lower\tm_range\twitness_w\tkrein_q22_zero";

/// A parsed input record before evaluation.
#[derive(Debug, Clone)]
pub struct InputRow {
    pub line: u64,
    pub fields: Result<[u64; 4], String>,
}

fn parse_line(line: &str) -> Result<csv::StringRecord, csv::Error> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(line.as_bytes());
    Ok(reader.records().next().transpose()?.unwrap_or_default())
}

fn parse_fields(record: &csv::StringRecord) -> Result<[u64; 4], String> {
    if record.len() != 4 {
        return Err(format!("expected 4 fields, found {}", record.len()));
    }
    let mut out = [0u64; 4];
    for (slot, (name, raw)) in out.iter_mut().zip(HEADER.iter().zip(record.iter())) {
        *slot = raw
            .parse::<u64>()
            .map_err(|_| format!("{name}: `{raw}` is not a non-negative integer"))?;
    }
    Ok(out)
}

/// Reads a table with header `v,k,lambda,mu`. Blank lines and lines starting
/// with `#` are skipped; line numbers refer to the original file.
pub fn parse_csv<R: Read>(mut input: R) -> Result<Vec<InputRow>, ScanError> {
    let mut text = String::new();
    input.read_to_string(&mut text)?;
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i as u64 + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let header = match lines.next() {
        Some((_, l)) => parse_line(l)?,
        None => return Err(ScanError::Header(String::new())),
    };
    if header.len() != 4 || header.iter().zip(HEADER).any(|(a, b)| !a.eq_ignore_ascii_case(b)) {
        return Err(ScanError::Header(header.iter().collect::<Vec<_>>().join(",")));
    }
    let mut rows = Vec::new();
    for (line, raw) in lines {
        let fields = match parse_line(raw) {
            Ok(record) => parse_fields(&record),
            Err(e) => Err(e.to_string()),
        };
        rows.push(InputRow { line, fields });
    }
    Ok(rows)
}

pub fn evaluate_row(row: &InputRow, opts: &DecideOptions, timings: bool) -> ScanRow {
    let start = Instant::now();
    let mut out = match &row.fields {
        Err(e) => ScanRow::invalid(row.line, None, e.clone()),
        Ok([v, k, l, m]) => match SrgParams::new(*v, *k, *l, *m) {
            Err(e) => ScanRow::invalid(row.line, None, e.to_string()),
            Ok(params) => match decide(&params, opts) {
                Ok(cert) => ScanRow::from_certificate(row.line, &cert),
                Err(e) => ScanRow::invalid(row.line, Some(params), e.to_string()),
            },
        },
    };
    if timings {
        out.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    out
}

/// Evaluates all rows on `jobs` worker threads; output order follows input
/// order regardless of scheduling.
pub fn run_scan(rows: &[InputRow], opts: &DecideOptions, jobs: usize, timings: bool) -> Vec<ScanRow> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| rows.par_iter().map(|r| evaluate_row(r, opts, timings)).collect())
}

/// Counts per verdict, in the fixed order of [`RowVerdict::ALL`].
pub fn summary(rows: &[ScanRow]) -> String {
    let parts: Vec<String> = RowVerdict::ALL
        .iter()
        .map(|v| format!("{}: {}", v.as_str(), rows.iter().filter(|r| r.verdict == *v).count()))
        .collect();
    format!("rows: {}; {}", rows.len(), parts.join("; "))
}
