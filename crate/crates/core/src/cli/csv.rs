//! Minimal CSV emission with a `#` header, and the matching reader.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};

/// Full-precision scientific form; parses back to the same `f64`.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

/// A table of floats: `# comment` lines, then `# col1,col2,...`, then rows.
#[derive(Clone, Debug, PartialEq)]
pub struct CsvTable {
    pub comments: Vec<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl CsvTable {
    pub fn new(columns: &[&str]) -> Self {
        Self { comments: Vec::new(), columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn comment(mut self, line: impl Into<String>) -> Self {
        self.comments.push(line.into());
        self
    }

    pub fn push(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the header");
        self.rows.push(row);
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.comments {
            let _ = writeln!(s, "# {c}");
        }
        let _ = writeln!(s, "# {}", self.columns.join(","));
        for r in &self.rows {
            let _ = writeln!(s, "{}", r.iter().map(|v| fmt_f64(*v)).collect::<Vec<_>>().join(","));
        }
        s
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        fs::write(path, self.render()).map_err(|e| Error::Parse(format!("writing {}: {e}", path.display())))
    }

    /// Inverse of [`CsvTable::render`]: the last `#` line before the data is
    /// the header, earlier ones are comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut hashes: Vec<String> = Vec::new();
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            if let Some(rest) = line.strip_prefix('#') {
                if !rows.is_empty() {
                    return Err(Error::Parse(format!("line {}: header after data", lineno + 1)));
                }
                hashes.push(rest.trim_start().to_string());
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(|f| f.trim().parse::<f64>().map_err(|e| Error::Parse(format!("line {}: {e}", lineno + 1))))
                .collect::<Result<Vec<f64>>>()?;
            rows.push(row);
        }
        let header = hashes.pop().ok_or_else(|| Error::Parse("missing # header".into()))?;
        let columns: Vec<String> = header.split(',').map(|c| c.trim().to_string()).collect();
        if let Some(bad) = rows.iter().position(|r| r.len() != columns.len()) {
            return Err(Error::Parse(format!("data row {} has the wrong width", bad + 1)));
        }
        Ok(Self { comments: hashes, columns, rows })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}
