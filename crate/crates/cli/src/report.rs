use std::fmt;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

/// One cell of a report row. Floats render with Rust's shortest-roundtrip
/// formatting, so emitted files are deterministic and re-parse exactly.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Bool(bool),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Float(v) => write!(f, "{v}"),
            Cell::Bool(v) => write!(f, "{v}"),
        }
    }
}

/// Run metadata carried as a preamble in every emitted file. Content is a
/// pure function of the configuration (no timestamps), preserving
/// byte-identical reruns.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub experiment: String,
    pub seed: u64,
    pub config_sha256: String,
}

/// A rectangular experiment report: named columns, one row per entry
/// (sorted by `d` where applicable).
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub metadata: Metadata,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Report {
    pub fn new(metadata: Metadata, columns: &[&str]) -> Self {
        Self { metadata, columns: columns.iter().map(|c| c.to_string()).collect(), rows: vec![] }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    /// Indices of rows whose `pass` column (if any) is false.
    pub fn failing_rows(&self) -> Vec<usize> {
        let Some(pi) = self.columns.iter().position(|c| c == "pass") else {
            return vec![];
        };
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r[pi] != Cell::Bool(true))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# tool: {} {}\n", self.metadata.tool, self.metadata.version));
        out.push_str(&format!("# experiment: {}\n", self.metadata.experiment));
        out.push_str(&format!("# seed: {}\n", self.metadata.seed));
        out.push_str(&format!("# config_sha256: {}\n", self.metadata.config_sha256));
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        // Rows as an array of column→cell objects (BTreeMap keys give a
        // deterministic order), preceded by the metadata block.
        let rows: Vec<std::collections::BTreeMap<&str, &Cell>> = self
            .rows
            .iter()
            .map(|r| self.columns.iter().map(String::as_str).zip(r.iter()).collect())
            .collect();
        #[derive(Serialize)]
        struct Doc<'a> {
            metadata: &'a Metadata,
            rows: Vec<std::collections::BTreeMap<&'a str, &'a Cell>>,
        }
        let mut s = serde_json::to_string_pretty(&Doc { metadata: &self.metadata, rows })
            .expect("report serializes");
        s.push('\n');
        s
    }

    /// Write `<experiment>.<ext>` into `dir`; returns the path written.
    pub fn emit(&self, dir: &Path, format: Format) -> std::io::Result<std::path::PathBuf> {
        std::fs::create_dir_all(dir)?;
        let ext = match format {
            Format::Csv => "csv",
            Format::Json => "json",
        };
        let path = dir.join(format!("{}.{ext}", self.metadata.experiment));
        let body = match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        };
        let mut f = std::fs::File::create(&path)?;
        f.write_all(body.as_bytes())?;
        Ok(path)
    }
}
