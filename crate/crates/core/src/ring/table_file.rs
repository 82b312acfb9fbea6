//! Plain-text table format.
//!
//! ```text
//! order 4
//! one 1
//! add
//! 0 1 2 3
//! ...            (n rows)
//! mul
//! ...            (n rows)
//! names          (optional)
//! 0
//! ...            (n lines)
//! ```
//!
//! Index 0 is the zero element; files whose first addition row is not the
//! identity row are rejected.

use std::path::Path;

use super::{Elem, FiniteRing};
use crate::error::{Error, Result};

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::TableFormat {
        line,
        message: message.into(),
    }
}

struct Lines<'a> {
    inner: std::iter::Peekable<std::iter::Enumerate<std::str::Lines<'a>>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate().peekable(),
            last: 0,
        }
    }

    /// Next non-blank line with its 1-based number.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (i, l) in self.inner.by_ref() {
            self.last = i + 1;
            if !l.trim().is_empty() {
                return Some((i + 1, l.trim()));
            }
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        self.next()
            .ok_or_else(|| format_err(self.last + 1, format!("unexpected end of file, expected {what}")))
    }
}

fn keyed_value(lines: &mut Lines<'_>, key: &str) -> Result<usize> {
    let (no, line) = lines.expect(key)?;
    let mut parts = line.split_whitespace();
    if parts.next() != Some(key) {
        return Err(format_err(no, format!("expected `{key} <n>`")));
    }
    let value = parts
        .next()
        .ok_or_else(|| format_err(no, format!("missing value after `{key}`")))?;
    if parts.next().is_some() {
        return Err(format_err(no, "trailing tokens"));
    }
    value
        .parse()
        .map_err(|_| format_err(no, format!("`{value}` is not a non-negative integer")))
}

fn table(lines: &mut Lines<'_>, key: &str, n: usize) -> Result<Vec<Vec<usize>>> {
    let (no, line) = lines.expect(key)?;
    if line != key {
        return Err(format_err(no, format!("expected `{key}`")));
    }
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (no, line) = lines.expect("table row")?;
        let row = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| format_err(no, format!("`{t}` is not an index")))
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(format_err(no, format!("row has {} entries, expected {n}", row.len())));
        }
        rows.push(row);
    }
    Ok(rows)
}

pub fn parse_table(text: &str) -> Result<FiniteRing> {
    let mut lines = Lines::new(text);
    let n = keyed_value(&mut lines, "order")?;
    let one = keyed_value(&mut lines, "one")?;
    let add = table(&mut lines, "add", n)?;
    if let Some(row) = add.first() {
        if row.iter().enumerate().any(|(j, &v)| v != j) {
            return Err(format_err(
                3,
                "row 0 of `add` must be the identity row (index 0 is zero)",
            ));
        }
    }
    let mul = table(&mut lines, "mul", n)?;
    let names = match lines.next() {
        None => (0..n).map(|i| i.to_string()).collect(),
        Some((_, "names")) => {
            let mut names = Vec::with_capacity(n);
            for _ in 0..n {
                names.push(lines.expect("element name")?.1.to_string());
            }
            if let Some((extra, _)) = lines.next() {
                return Err(format_err(extra, "trailing content after names"));
            }
            names
        }
        Some((no, _)) => return Err(format_err(no, "expected `names` or end of file")),
    };
    FiniteRing::validate(&add, &mul, 0, one, names)
}

pub fn load_table(path: &Path) -> Result<FiniteRing> {
    let text = std::fs::read_to_string(path)?;
    parse_table(&text)
}

/// Serializes a ring, relabelling so that zero sits at index 0.
pub fn write_table(ring: &FiniteRing) -> String {
    let n = ring.order();
    let z = ring.zero().index();
    // swap 0 and z
    let relabel = |i: usize| {
        if i == 0 {
            z
        } else if i == z {
            0
        } else {
            i
        }
    };
    let elem = |i: usize| Elem::new(relabel(i));
    let mut out = String::new();
    out.push_str(&format!("order {n}\n"));
    out.push_str(&format!("one {}\n", relabel(ring.one().index())));
    for (key, op) in [("add", 0), ("mul", 1)] {
        out.push_str(key);
        out.push('\n');
        for a in 0..n {
            let row: Vec<String> = (0..n)
                .map(|b| {
                    let v = if op == 0 {
                        ring.add(elem(a), elem(b))
                    } else {
                        ring.mul(elem(a), elem(b))
                    };
                    relabel(v.index()).to_string()
                })
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out.push_str("names\n");
    for i in 0..n {
        out.push_str(ring.name(elem(i)));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z3: &str = "order 3\none 1\nadd\n0 1 2\n1 2 0\n2 0 1\nmul\n0 0 0\n0 1 2\n0 2 1\n";

    #[test]
    fn parses_without_names() {
        let r = parse_table(Z3).unwrap();
        assert_eq!(r.order(), 3);
        assert_eq!(r.name(Elem::new(2)), "2");
    }

    #[test]
    fn round_trips() {
        let r = parse_table(Z3).unwrap();
        let again = parse_table(&write_table(&r)).unwrap();
        assert_eq!(r.tables(), again.tables());
        assert_eq!(r.names(), again.names());
    }

    #[test]
    fn rejects_non_identity_first_row() {
        let bad = Z3.replace("add\n0 1 2\n1 2 0\n2 0 1", "add\n1 2 0\n0 1 2\n2 0 1");
        assert!(matches!(parse_table(&bad), Err(Error::TableFormat { .. })));
    }

    #[test]
    fn rejects_short_rows() {
        let bad = Z3.replace("0 2 1", "0 2");
        assert!(matches!(parse_table(&bad), Err(Error::TableFormat { .. })));
    }
}
