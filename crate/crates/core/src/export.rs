//! CSV and JSON exports.
//!
//! Exact values are written as `p/q` strings, never as floats. Floats use
//! Rust's shortest round-trip formatting, which is locale independent. CSV
//! output has a header row, comma separators and `\n` line endings; JSON
//! keys come out in declaration order. Output is a pure function of the
//! inputs, so re-running a command reproduces its file byte for byte.

use std::io::{Read, Write};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::leading_term;
use crate::exactdp::{Distributions, ScoreDistribution};
use crate::rational::parse;
use crate::recurrence::{self, delta_from_e};
use crate::{Error, Rational, Result};

/// Default upper limit on `n` for anything that runs the full DP.
pub const DP_CAP: u32 = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format `{other}` (expected csv or json)"))),
        }
    }
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

/// One line of the summary table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub delta_exact: String,
    pub delta_float: f64,
    pub p_bob: Option<String>,
    pub p_alice: Option<String>,
    pub p_tie: Option<String>,
    pub leading_asymptotic: f64,
    pub e_n: String,
}

/// Rows for `n = 1..=max_n`. Win/tie probabilities are filled in only up to
/// `dp_cap`, since they need the full DP.
pub fn build_table(max_n: usize, dp_cap: u32) -> Result<Vec<TableRow>> {
    if max_n == 0 {
        return Err(Error::OutOfRange { n: 0, min: 1, max: u64::MAX });
    }
    let e = recurrence::e_sequence(max_n)?;
    let floats = recurrence::delta_float_sequence(max_n);
    let dp_rows = max_n.min(dp_cap as usize);
    let mut outcomes = Distributions::new().take(dp_rows).map(|d| d.outcome());
    Ok((1..=max_n)
        .map(|n| {
            let outcome = outcomes.next();
            TableRow {
                n,
                delta_exact: delta_from_e(n, &e.values()[n]).to_string(),
                delta_float: floats[n],
                p_bob: outcome.as_ref().map(|o| o.p_bob.to_string()),
                p_alice: outcome.as_ref().map(|o| o.p_alice.to_string()),
                p_tie: outcome.as_ref().map(|o| o.p_tie.to_string()),
                leading_asymptotic: leading_term(n),
                e_n: e.values()[n].to_string(),
            }
        })
        .collect())
}

pub fn write_table<W: Write>(rows: &[TableRow], format: Format, mut out: W) -> Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["n", "delta_exact", "delta_float", "p_bob", "p_alice", "p_tie", "leading_asymptotic", "e_n"])?;
            for r in rows {
                let opt = |s: &Option<String>| s.clone().unwrap_or_default();
                w.write_record([
                    r.n.to_string(),
                    r.delta_exact.clone(),
                    r.delta_float.to_string(),
                    opt(&r.p_bob),
                    opt(&r.p_alice),
                    opt(&r.p_tie),
                    r.leading_asymptotic.to_string(),
                    r.e_n.clone(),
                ])?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, rows)?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

/// One `k -> P(Y = k)` row of a marginal distribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistRow {
    pub k: i64,
    pub p: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistDocument {
    pub n: u32,
    pub rows: Vec<DistRow>,
}

/// Marginal rows sorted by `k` ascending.
pub fn dist_rows(d: &ScoreDistribution) -> Vec<DistRow> {
    d.marginal().into_iter().map(|(k, p)| DistRow { k, p: p.to_string() }).collect()
}

pub fn write_dist<W: Write>(d: &ScoreDistribution, format: Format, mut out: W) -> Result<()> {
    let rows = dist_rows(d);
    match format {
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["k", "p"])?;
            for r in &rows {
                w.write_record([r.k.to_string(), r.p.clone()])?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &DistDocument { n: d.n(), rows })?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

/// Parses an exported distribution back and sums its `p` column exactly.
pub fn dist_total<R: Read>(format: Format, input: R) -> Result<Rational> {
    let mut total = Rational::default();
    match format {
        Format::Csv => {
            let mut r = csv::Reader::from_reader(input);
            for row in r.deserialize::<DistRow>() {
                total += parse(&row?.p)?;
            }
        }
        Format::Json => {
            let doc: DistDocument = serde_json::from_reader(input)?;
            for row in doc.rows {
                total += parse(&row.p)?;
            }
        }
    }
    Ok(total)
}
