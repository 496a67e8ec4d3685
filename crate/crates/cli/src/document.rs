//! On-disk formats: matrix documents and chain documents, both JSON.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use seifert_core::serde_int::Int;
use seifert_core::{IntMatrix, Move, MoveChain, SeifertMatrix};
use thiserror::Error;

/// Process exit codes. These are a stable contract.
pub mod exit {
    pub const OK: u8 = 0;
    pub const DISTINCT: u8 = 1;
    pub const DOMAIN: u8 = 2;
    pub const PARSE: u8 = 3;
    pub const UNKNOWN: u8 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{source_name}:{line}:{column}: {message}")]
    Parse { source_name: String, line: usize, column: usize, message: String },
    #[error("{0}")]
    Domain(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } => exit::PARSE,
            CliError::Domain(_) | CliError::Io { .. } => exit::DOMAIN,
        }
    }

    pub(crate) fn json(source_name: &str, err: &serde_json::Error) -> Self {
        CliError::Parse {
            source_name: source_name.to_owned(),
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }

    pub(crate) fn domain(e: impl std::fmt::Display) -> Self {
        CliError::Domain(e.to_string())
    }
}

pub(crate) fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub(crate) fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

/// `{"name": ..., "matrix": [[...], ...], "metadata": {...}}`. Entries beyond
/// the `i64` range are written as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    pub name: String,
    pub matrix: Vec<Vec<Int>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, serde_json::Value>,
}

impl MatrixDocument {
    pub fn new(name: impl Into<String>, a: &SeifertMatrix) -> Self {
        let matrix = a.matrix().to_rows().into_iter().map(|row| row.into_iter().map(Int).collect()).collect();
        Self { name: name.into(), matrix, metadata: BTreeMap::new() }
    }

    pub fn with_metadata(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.metadata.insert(key.to_owned(), value.into());
        self
    }

    pub fn parse(text: &str, source_name: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::json(source_name, &e))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        Self::parse(&read_text(path)?, &path.display().to_string())
    }

    /// The matrix, checked to be square and of Seifert type.
    pub fn seifert(&self) -> Result<SeifertMatrix, CliError> {
        seifert_from_rows(&self.matrix)
    }

    pub fn to_json(&self) -> String {
        pretty(self)
    }
}

pub(crate) fn seifert_from_rows(rows: &[Vec<Int>]) -> Result<SeifertMatrix, CliError> {
    let n = rows.len();
    if let Some((i, row)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(CliError::Domain(format!(
            "rows do not form a square matrix: row {i} has {} entries, expected {n}",
            row.len()
        )));
    }
    let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect();
    let m = IntMatrix::from_rows(rows).map_err(CliError::domain)?;
    SeifertMatrix::validate(m).map_err(CliError::domain)
}

/// `{"start": [[...]], "moves": [{"move": "enlarge", ...}, ...]}`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawChain {
    start: Vec<Vec<Int>>,
    moves: Vec<Move>,
}

pub fn parse_chain(text: &str, source_name: &str) -> Result<MoveChain, CliError> {
    let raw: RawChain = serde_json::from_str(text).map_err(|e| CliError::json(source_name, &e))?;
    Ok(MoveChain { start: seifert_from_rows(&raw.start)?, moves: raw.moves })
}

pub fn load_chain(path: &Path) -> Result<MoveChain, CliError> {
    parse_chain(&read_text(path)?, &path.display().to_string())
}

pub fn chain_to_json(chain: &MoveChain) -> String {
    pretty(chain)
}

/// Indented JSON with a trailing newline. Arrays of scalars (matrix rows,
/// vectors) stay on one line; field order follows the type.
pub(crate) fn pretty<T: Serialize + ?Sized>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("documents serialize");
    let mut s = String::new();
    write_value(&value, 0, &mut s);
    s.push('\n');
    s
}

fn write_value(v: &Value, indent: usize, out: &mut String) {
    let scalar = |v: &Value| !matches!(v, Value::Array(_) | Value::Object(_));
    match v {
        Value::Array(items) if items.iter().all(scalar) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push_str(&format!("[{}]", parts.join(", ")));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&" ".repeat(indent + 2));
                write_value(item, indent + 2, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&" ".repeat(indent));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                out.push_str(&format!("{}{}: ", " ".repeat(indent + 2), Value::String(k.clone())));
                write_value(item, indent + 2, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&" ".repeat(indent));
            out.push('}');
        }
        _ => out.push_str(&v.to_string()),
    }
}

/// A file name derived from a document name.
pub(crate) fn file_stem(name: &str) -> String {
    let stem: String =
        name.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' }).collect();
    if stem.is_empty() {
        "unnamed".to_owned()
    } else {
        stem
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let doc = MatrixDocument::new("trefoil", &SeifertMatrix::trefoil()).with_metadata("genus", 1);
        let back = MatrixDocument::parse(&doc.to_json(), "x").unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.seifert().unwrap(), SeifertMatrix::trefoil());
    }

    #[test]
    fn parse_errors_have_positions() {
        let err = MatrixDocument::parse("{\n  \"name\": \"x\",\n  \"matrix\": [[1,}\n", "doc.json").unwrap_err();
        match err {
            CliError::Parse { line, column, .. } => assert_eq!((line, column), (3, 17)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn domain_errors() {
        let doc = MatrixDocument::parse(r#"{"name": "bad", "matrix": [[0]]}"#, "x").unwrap();
        let err = doc.seifert().unwrap_err();
        assert_eq!(err.exit_code(), exit::DOMAIN);
        assert!(err.to_string().contains("= 0"));
        let ragged = MatrixDocument::parse(r#"{"name": "r", "matrix": [[0, 1], [0]]}"#, "x").unwrap();
        assert!(ragged.seifert().unwrap_err().to_string().contains("square"));
    }

    #[test]
    fn empty_matrix_is_the_unknot() {
        let doc = MatrixDocument::parse(r#"{"name": "unknot", "matrix": []}"#, "x").unwrap();
        assert_eq!(doc.seifert().unwrap().size(), 0);
    }

    #[test]
    fn layout() {
        let doc = MatrixDocument::new("trefoil", &SeifertMatrix::trefoil());
        assert_eq!(doc.to_json(), "{\n  \"name\": \"trefoil\",\n  \"matrix\": [\n    [-1, 1],\n    [0, -1]\n  ]\n}\n");
        let unknot = MatrixDocument::new("unknot", &SeifertMatrix::unknot());
        assert_eq!(unknot.to_json(), "{\n  \"name\": \"unknot\",\n  \"matrix\": []\n}\n");
    }

    #[test]
    fn stems() {
        assert_eq!(file_stem("3_1 knot/a"), "3_1_knot_a");
        assert_eq!(file_stem(""), "unnamed");
    }
}
