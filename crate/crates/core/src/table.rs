//! Raw Cayley tables and the shared plain-text table format.
//!
//! A table of order `n` is stored row-major: `entry(x, y)` is the product
//! `x·y`, and every entry is an element index in `0..n`. Element `0` is
//! always the distinguished constant.
//!
//! The text format is line oriented:
//!
//! ```text
//! # optional comment lines
//! 3
//! 0 0 0
//! 1 0 0
//! 2 1 0
//! ```
//!
//! The first data line holds the order, followed by one line per row.
//! [`CayleyTable::to_text`] and [`CayleyTable::from_text`] round-trip exactly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Problems with the shape or contents of a table, independent of any axiom.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table order must be at least 1")]
    Empty,
    #[error("row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry ({x}, {y}) = {value} is out of range for order {order}")]
    OutOfRange {
        x: usize,
        y: usize,
        value: usize,
        order: usize,
    },
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

/// An `n × n` operation table over the elements `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct CayleyTable {
    order: usize,
    entries: Vec<usize>,
}

impl CayleyTable {
    /// Builds a table from its rows, checking squareness and entry ranges.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, TableError> {
        let order = rows.len();
        if order == 0 {
            return Err(TableError::Empty);
        }
        let mut entries = Vec::with_capacity(order * order);
        for (x, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(TableError::NotSquare {
                    row: x,
                    len: row.len(),
                    order,
                });
            }
            entries.extend_from_slice(row);
        }
        Self::from_entries(order, entries)
    }

    /// Builds a table from a row-major entry vector of length `order²`.
    pub fn from_entries(order: usize, entries: Vec<usize>) -> Result<Self, TableError> {
        if order == 0 {
            return Err(TableError::Empty);
        }
        if entries.len() != order * order {
            let row = entries.len() / order;
            return Err(TableError::NotSquare {
                row,
                len: entries.len() % order,
                order,
            });
        }
        if let Some(i) = entries.iter().position(|&v| v >= order) {
            return Err(TableError::OutOfRange {
                x: i / order,
                y: i % order,
                value: entries[i],
                order,
            });
        }
        Ok(CayleyTable { order, entries })
    }

    /// Builds a table by evaluating `op` on every pair.
    pub fn from_fn(order: usize, mut op: impl FnMut(usize, usize) -> usize) -> Result<Self, TableError> {
        let mut entries = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                entries.push(op(x, y));
            }
        }
        Self::from_entries(order, entries)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `x·y`.
    ///
    /// Panics if either index is out of range.
    #[inline]
    pub fn entry(&self, x: usize, y: usize) -> usize {
        assert!(x < self.order && y < self.order, "element out of range");
        self.entries[x * self.order + y]
    }

    /// Row-major view of all entries.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.entries[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.entries.chunks(self.order)
    }

    /// Applies the relabeling `x ↦ perm[x]`, producing the table `T'` with
    /// `T'[perm[x]][perm[y]] = perm[T[x][y]]`.
    ///
    /// Panics if `perm` is not a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> CayleyTable {
        let n = self.order;
        assert_eq!(perm.len(), n, "permutation length mismatch");
        let mut seen = vec![false; n];
        for &p in perm {
            assert!(p < n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let mut entries = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                entries[perm[x] * n + perm[y]] = perm[self.entries[x * n + y]];
            }
        }
        CayleyTable { order: n, entries }
    }

    /// Serializes to the text format: the order, then one line per row.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses exactly one table from text. Comment lines (`#`) and blank
    /// lines are ignored; trailing data after the table is an error.
    pub fn from_text(text: &str) -> Result<Self, TableError> {
        let mut tables = parse_tables(text)?;
        match tables.len() {
            1 => Ok(tables.pop().unwrap()),
            0 => Err(TableError::Parse {
                line: text.lines().count().max(1),
                column: 1,
                message: "expected a table order".into(),
            }),
            _ => Err(TableError::Parse {
                line: 1,
                column: 1,
                message: format!("expected one table, found {}", tables.len()),
            }),
        }
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order)?;
        for row in self.rows() {
            let mut first = true;
            for v in row {
                if !first {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
                first = false;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl FromStr for CayleyTable {
    type Err = TableError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::from_text(s)
    }
}

impl TryFrom<Vec<Vec<usize>>> for CayleyTable {
    type Error = TableError;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self, Self::Error> {
        Self::from_rows(&rows)
    }
}

impl From<CayleyTable> for Vec<Vec<usize>> {
    fn from(t: CayleyTable) -> Self {
        t.rows().map(<[usize]>::to_vec).collect()
    }
}

/// Writes several tables as `#`-separated records.
pub fn tables_to_text<'a>(tables: impl IntoIterator<Item = &'a CayleyTable>) -> String {
    let mut out = String::new();
    for (i, t) in tables.into_iter().enumerate() {
        out.push_str(&format!("# algebra {}\n", i + 1));
        out.push_str(&t.to_text());
    }
    out
}

/// Parses a sequence of concatenated table records.
pub fn parse_tables(text: &str) -> Result<Vec<CayleyTable>, TableError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });
    let mut tables = Vec::new();
    while let Some((line, header)) = lines.next() {
        let fields = tokens(header);
        if fields.len() != 1 {
            let column = fields.get(1).map_or(1, |f| f.0);
            return Err(TableError::Parse {
                line,
                column,
                message: "expected a single integer (the table order)".into(),
            });
        }
        let (column, tok) = fields[0];
        let order = parse_int(tok, line, column)?;
        if order == 0 {
            return Err(TableError::Parse {
                line,
                column,
                message: "table order must be at least 1".into(),
            });
        }
        let mut entries = Vec::with_capacity(order * order);
        for x in 0..order {
            let Some((line, row)) = lines.next() else {
                return Err(TableError::Parse {
                    line: text.lines().count() + 1,
                    column: 1,
                    message: format!("missing row {x} of {order}"),
                });
            };
            let fields = tokens(row);
            if fields.len() != order {
                let column = fields.get(order).map_or(row.len() + 1, |f| f.0);
                return Err(TableError::Parse {
                    line,
                    column,
                    message: format!("row {x} has {} entries, expected {order}", fields.len()),
                });
            }
            for (column, tok) in fields {
                let v = parse_int(tok, line, column)?;
                if v >= order {
                    return Err(TableError::Parse {
                        line,
                        column,
                        message: format!("entry {v} out of range for order {order}"),
                    });
                }
                entries.push(v);
            }
        }
        tables.push(CayleyTable { order, entries });
    }
    Ok(tables)
}

/// Whitespace-separated tokens with their 1-based byte columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        match (c.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_int(tok: &str, line: usize, column: usize) -> Result<usize, TableError> {
    tok.parse().map_err(|_| TableError::Parse {
        line,
        column,
        message: format!("`{tok}` is not a non-negative integer"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let t = CayleyTable::from_rows(&[[0, 0, 0], [1, 0, 0], [2, 1, 0]]).unwrap();
        let text = t.to_text();
        assert_eq!(text, "3\n0 0 0\n1 0 0\n2 1 0\n");
        assert_eq!(CayleyTable::from_text(&text).unwrap(), t);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let t: CayleyTable = "# a comment\n\n2\n# inside\n0 0\n1   0\n".parse().unwrap();
        assert_eq!(t.entry(1, 0), 1);
    }

    #[test]
    fn rejects_malformed_shapes() {
        assert_eq!(
            CayleyTable::from_rows(&[vec![0, 0], vec![1]]),
            Err(TableError::NotSquare { row: 1, len: 1, order: 2 })
        );
        assert!(matches!(
            CayleyTable::from_rows(&[[0, 2], [1, 0]]),
            Err(TableError::OutOfRange { x: 0, y: 1, value: 2, .. })
        ));
        assert_eq!(CayleyTable::from_rows::<Vec<usize>>(&[]), Err(TableError::Empty));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = CayleyTable::from_text("2\n0 0\n1 x\n").unwrap_err();
        assert_eq!(
            err,
            TableError::Parse { line: 3, column: 3, message: "`x` is not a non-negative integer".into() }
        );
        let err = CayleyTable::from_text("2\n0 0\n1 5\n").unwrap_err();
        assert!(matches!(err, TableError::Parse { line: 3, column: 3, .. }));
        let err = CayleyTable::from_text("2\n0 0 0\n").unwrap_err();
        assert!(matches!(err, TableError::Parse { line: 2, column: 5, .. }));
        assert!(CayleyTable::from_text("2\n0 0\n").is_err());
        assert!(CayleyTable::from_text("").is_err());
    }

    #[test]
    fn multi_record_round_trip() {
        let a = CayleyTable::from_rows(&[[0]]).unwrap();
        let b = CayleyTable::from_rows(&[[0, 0], [1, 0]]).unwrap();
        let text = tables_to_text([&a, &b]);
        assert_eq!(parse_tables(&text).unwrap(), vec![a, b]);
    }

    #[test]
    fn relabel_swaps_consistently() {
        let t = CayleyTable::from_rows(&[[0, 0, 0], [1, 0, 1], [2, 2, 0]]).unwrap();
        let s = t.relabel(&[0, 2, 1]);
        assert_eq!(s, CayleyTable::from_rows(&[[0, 0, 0], [1, 0, 1], [2, 2, 0]]).unwrap());
        assert_eq!(s.relabel(&[0, 2, 1]), t);
    }

    #[test]
    fn serde_uses_nested_rows() {
        let t = CayleyTable::from_rows(&[[0, 0], [1, 0]]).unwrap();
        let rows: Vec<Vec<usize>> = t.clone().into();
        assert_eq!(rows, vec![vec![0, 0], vec![1, 0]]);
        assert!(CayleyTable::try_from(vec![vec![0, 3], vec![1, 0]]).is_err());
    }
}
