//! Report serialization for `classify`.

use std::io::{self, Write};

use serde::Serialize;

use super::config::OutputFormat;
use crate::classify::ClassificationRecord;
use crate::error::{Error, Result};
use crate::splitting::SplittingType;

pub const CSV_HEADER: &str =
    "d,squarefree,phi,phiK,splitting,irreducible,divides,realizable,normal,lehmer,strongly_lehmer";

fn bit(b: bool) -> u8 {
    b as u8
}

pub fn csv_row(r: &ClassificationRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}",
        r.d,
        bit(r.squarefree),
        r.phi,
        r.phi_k,
        r.splitting.map_or("", |s| s.as_str()),
        bit(r.irreducible),
        bit(r.divides),
        bit(r.realizable),
        bit(r.normal),
        bit(r.lehmer),
        bit(r.strongly_lehmer),
    )
}

/// Inverse of [`csv_row`].
pub fn parse_csv_row(line: &str) -> Result<ClassificationRecord> {
    let bad = || Error::InvalidArgument(format!("malformed row `{line}`"));
    let cols: Vec<&str> = line.trim_end_matches('\n').split(',').collect();
    if cols.len() != 11 {
        return Err(bad());
    }
    let num = |s: &str| s.parse::<u64>().map_err(|_| bad());
    let flag = |s: &str| match s {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(bad()),
    };
    Ok(ClassificationRecord {
        d: num(cols[0])?,
        squarefree: flag(cols[1])?,
        phi: num(cols[2])?,
        phi_k: num(cols[3])?,
        splitting: match cols[4] {
            "" => None,
            s => Some(s.parse::<SplittingType>()?),
        },
        irreducible: flag(cols[5])?,
        divides: flag(cols[6])?,
        realizable: flag(cols[7])?,
        normal: flag(cols[8])?,
        lehmer: flag(cols[9])?,
        strongly_lehmer: flag(cols[10])?,
    })
}

#[derive(Serialize)]
struct JsonRow<'a> {
    d: u64,
    squarefree: u8,
    phi: u64,
    #[serde(rename = "phiK")]
    phi_k: u64,
    splitting: Option<&'a str>,
    irreducible: u8,
    divides: u8,
    realizable: u8,
    normal: u8,
    lehmer: u8,
    strongly_lehmer: u8,
}

pub fn json_row(r: &ClassificationRecord) -> String {
    let row = JsonRow {
        d: r.d,
        squarefree: bit(r.squarefree),
        phi: r.phi,
        phi_k: r.phi_k,
        splitting: r.splitting.map(|s| s.as_str()),
        irreducible: bit(r.irreducible),
        divides: bit(r.divides),
        realizable: bit(r.realizable),
        normal: bit(r.normal),
        lehmer: bit(r.lehmer),
        strongly_lehmer: bit(r.strongly_lehmer),
    };
    serde_json::to_string(&row).expect("plain struct serializes")
}

pub fn write_records<W: Write + ?Sized>(
    out: &mut W,
    format: OutputFormat,
    records: &[ClassificationRecord],
) -> io::Result<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in records {
                writeln!(out, "{}", csv_row(r))?;
            }
        }
        OutputFormat::Jsonl => {
            for r in records {
                writeln!(out, "{}", json_row(r))?;
            }
        }
        OutputFormat::Table => {
            let header: Vec<&str> = CSV_HEADER.split(',').collect();
            let rows: Vec<Vec<String>> = records
                .iter()
                .map(|r| csv_row(r).split(',').map(str::to_string).collect())
                .collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|i| {
                    rows.iter()
                        .map(|r| r[i].len())
                        .chain([header[i].len()])
                        .max()
                        .unwrap()
                })
                .collect();
            let line = |cells: &[&str]| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(out, "{}", line(&header))?;
            for r in &rows {
                let cells: Vec<&str> = r.iter().map(String::as_str).collect();
                writeln!(out, "{}", line(&cells))?;
            }
        }
    }
    Ok(())
}
