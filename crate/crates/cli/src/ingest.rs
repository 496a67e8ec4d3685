//! Knot-table intake from CSV with the header `name,size,entries`, where
//! `entries` is a semicolon-separated row-major integer list.

use num_bigint::BigInt;
use serde::Serialize;
use seifert_core::serde_int::Int;

use crate::document::{seifert_from_rows, CliError, MatrixDocument};

pub const HEADER: [&str; 3] = ["name", "size", "entries"];

/// One CSV row before validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IngestRecord {
    pub name: String,
    pub size: usize,
    pub entries: Vec<BigInt>,
}

impl IngestRecord {
    fn parse(fields: &csv::StringRecord) -> Result<Self, String> {
        if fields.len() != 3 {
            return Err(format!("expected 3 fields, found {}", fields.len()));
        }
        let name = fields[0].trim().to_owned();
        let size: usize = fields[1].trim().parse().map_err(|_| format!("bad size {:?}", &fields[1]))?;
        let text = fields[2].trim();
        let entries = if text.is_empty() {
            Vec::new()
        } else {
            text.split(';')
                .map(|e| e.trim().parse::<BigInt>().map_err(|_| format!("bad entry {:?}", e.trim())))
                .collect::<Result<_, _>>()?
        };
        Ok(Self { name, size, entries })
    }

    pub fn to_document(&self) -> Result<MatrixDocument, String> {
        if self.entries.len() != self.size * self.size {
            return Err(format!(
                "expected {} entries for size {}, found {}",
                self.size * self.size,
                self.size,
                self.entries.len()
            ));
        }
        let rows: Vec<Vec<Int>> = if self.size == 0 {
            Vec::new()
        } else {
            self.entries.chunks(self.size).map(|r| r.iter().cloned().map(Int).collect()).collect()
        };
        let a = seifert_from_rows(&rows).map_err(|e| e.to_string())?;
        Ok(MatrixDocument::new(self.name.clone(), &a))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rejected {
    pub line: u64,
    pub name: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IngestReport {
    pub accepted: Vec<MatrixDocument>,
    pub rejected: Vec<Rejected>,
}

/// Parses the whole table. Only a missing or wrong header fails the file;
/// bad rows are collected with their reasons.
pub fn ingest(text: &str, source_name: &str) -> Result<IngestReport, CliError> {
    let mut reader = csv::ReaderBuilder::new().has_headers(true).flexible(true).from_reader(text.as_bytes());
    let header_error = |message: String| CliError::Parse { source_name: source_name.to_owned(), line: 1, column: 1, message };
    let headers = reader.headers().map_err(|e| header_error(e.to_string()))?.clone();
    let found: Vec<&str> = headers.iter().map(str::trim).collect();
    if found != HEADER {
        return Err(header_error(format!("expected header \"{}\"", HEADER.join(","))));
    }
    let mut report = IngestReport { accepted: Vec::new(), rejected: Vec::new() };
    for record in reader.records() {
        let (line, result) = match record {
            Ok(fields) => {
                let line = fields.position().map_or(0, |p| p.line());
                (line, IngestRecord::parse(&fields).map_err(|e| (fields.get(0).unwrap_or("").to_owned(), e)))
            }
            Err(e) => {
                let line = e.position().map_or(0, |p| p.line());
                (line, Err((String::new(), e.to_string())))
            }
        };
        match result.and_then(|r| r.to_document().map_err(|e| (r.name.clone(), e))) {
            Ok(doc) => report.accepted.push(doc),
            Err((name, reason)) => report.rejected.push(Rejected { line, name, reason }),
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use seifert_core::SeifertMatrix;

    #[test]
    fn examples() {
        let r = ingest("name,size,entries\ntrefoil,2,-1;1;0;-1\nbad,1,0\n", "t.csv").unwrap();
        assert_eq!(r.accepted.len(), 1);
        assert_eq!(r.accepted[0].seifert().unwrap(), SeifertMatrix::trefoil());
        assert_eq!(r.rejected.len(), 1);
        assert_eq!(r.rejected[0].line, 3);
        assert!(r.rejected[0].reason.contains("= 0"), "{}", r.rejected[0].reason);
    }

    #[test]
    fn empty_table() {
        let r = ingest("name,size,entries\n", "t.csv").unwrap();
        assert!(r.accepted.is_empty() && r.rejected.is_empty());
    }

    #[test]
    fn header_is_required() {
        assert!(matches!(ingest("", "t.csv"), Err(CliError::Parse { .. })));
        assert!(matches!(ingest("trefoil,2,-1;1;0;-1\n", "t.csv"), Err(CliError::Parse { .. })));
    }

    #[test]
    fn bad_rows_do_not_abort() {
        let text = "name,size,entries\nshort,2,1;2;3\nx,two,1\nextra,2,1,2\nunknot,0,\nfig8,2,1;1;0;-1\n";
        let r = ingest(text, "t.csv").unwrap();
        let names: Vec<_> = r.accepted.iter().map(|d| d.name.as_str()).collect();
        assert_eq!(names, ["unknot", "fig8"]);
        assert_eq!(r.rejected.len(), 3);
    }
}
