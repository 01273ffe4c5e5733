use std::fmt::Write as _;

use anyhow::Result;
use barfock::{CanonicalBasisMatrix, LaurentPoly};
use clap::ValueEnum;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

pub const ZERO: &str = "·";

/// The serialized form of a matrix; `provenance` is present only when asked for.
#[derive(Debug, Serialize)]
pub struct MatrixDoc {
    pub h: u32,
    pub core: String,
    pub weight: u32,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
    pub entries: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Vec<Vec<Option<String>>>>,
}

impl MatrixDoc {
    pub fn new(m: &CanonicalBasisMatrix) -> Self {
        let b = m.block();
        MatrixDoc {
            h: b.params.h(),
            core: b.core.to_string(),
            weight: b.weight,
            rows: m.rows().iter().map(|x| x.to_string()).collect(),
            cols: m.cols().iter().map(|x| x.to_string()).collect(),
            entries: m.entries().iter().map(|r| r.iter().map(LaurentPoly::to_string).collect()).collect(),
            provenance: None,
        }
    }

    fn cell(&self, r: usize, c: usize) -> String {
        let v = &self.entries[r][c];
        let v = if v == "0" { ZERO.to_string() } else { v.clone() };
        match self.provenance.as_ref().and_then(|p| p[r][c].as_ref()) {
            Some(tag) => format!("{v} [{tag}]"),
            None => v,
        }
    }

    pub fn render(&self, f: Format) -> Result<String> {
        Ok(match f {
            Format::Json => serde_json::to_string_pretty(self)? + "\n",
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(std::iter::once(String::new()).chain(self.cols.iter().cloned()))?;
                for (r, lam) in self.rows.iter().enumerate() {
                    let cells = (0..self.cols.len()).map(|c| self.cell(r, c));
                    w.write_record(std::iter::once(lam.clone()).chain(cells))?;
                }
                String::from_utf8(w.into_inner()?)?
            }
            Format::Table => {
                let mut grid = vec![std::iter::once(String::new()).chain(self.cols.iter().cloned()).collect::<Vec<_>>()];
                for (r, lam) in self.rows.iter().enumerate() {
                    grid.push(std::iter::once(lam.clone()).chain((0..self.cols.len()).map(|c| self.cell(r, c))).collect());
                }
                table(&grid, true)
            }
        })
    }
}

/// Aligned text; the first column is always left-aligned, the rest follow
/// `right`. Widths count characters, so `·` takes one column.
pub fn table(grid: &[Vec<String>], right: bool) -> String {
    let cols = grid.iter().map(Vec::len).max().unwrap_or(0);
    let width: Vec<usize> =
        (0..cols).map(|c| grid.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in grid {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            let pad = width[c] - cell.chars().count();
            let sep = if c == 0 { "" } else { "  " };
            if c > 0 && right {
                let _ = write!(line, "{sep}{}{cell}", " ".repeat(pad));
            } else {
                let _ = write!(line, "{sep}{cell}{}", " ".repeat(pad));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Renders a list of records: JSON array, CSV with a header, or an aligned table.
pub fn records<T: Serialize>(items: &[T], header: &[&str], fields: impl Fn(&T) -> Vec<String>, f: Format) -> Result<String> {
    Ok(match f {
        Format::Json => serde_json::to_string_pretty(items)? + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(header)?;
            for it in items {
                w.write_record(fields(it))?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Table => {
            let mut grid = vec![header.iter().map(|s| s.to_string()).collect::<Vec<_>>()];
            grid.extend(items.iter().map(&fields));
            table(&grid, false)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use barfock::canonical::canonical_basis;
    use barfock::{BlockId, HParams};

    #[test]
    fn zero_cells_use_a_dot() {
        let b = BlockId::new(HParams::new(7).unwrap(), "(4,2)".parse().unwrap(), 1).unwrap();
        let doc = MatrixDoc::new(&canonical_basis(&b).unwrap());
        let text = doc.render(Format::Table).unwrap();
        let first: Vec<_> = text.lines().nth(1).unwrap().split_whitespace().collect();
        assert_eq!(first, ["(6,4,2,1)", "1", "·", "·"]);
        let csv = doc.render(Format::Csv).unwrap();
        assert!(csv.starts_with(",\"(6,4,2,1)\""));
    }
}
