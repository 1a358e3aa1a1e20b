//! Plain-text code and table files.
//!
//! Code file:
//! ```text
//! # n q m
//! 7 4 3
//! 3 2 1 1
//! 4 2 2 1
//! 4 3 2 1
//! ```
//! Table file: a line holding `r`, then `r` rows of `r` element indices,
//! optionally followed by `labels` and one name per element.
//! Everything after `#` on a line is ignored, as are blank lines.

use std::fmt::Write as _;

use bckcode_core::{BlockCode, CayleyTable, CodeError, TableError};
use thiserror::Error;

/// Columns are counted in characters, both 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    fn end_column(&self) -> usize {
        self.tokens
            .last()
            .map(|t| t.column + t.text.chars().count())
            .unwrap_or(1)
    }

    fn numbers(&self) -> Result<Vec<usize>, ParseError> {
        self.tokens
            .iter()
            .map(|t| {
                t.text.parse::<usize>().map_err(|_| {
                    ParseError::at(
                        self.number,
                        t.column,
                        format!("expected a non-negative integer, found `{}`", t.text),
                    )
                })
            })
            .collect()
    }
}

fn lines(src: &str) -> Vec<Line<'_>> {
    src.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (col, (idx, ch)) in body.char_indices().enumerate() {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some((idx, col + 1)),
                    (true, Some((s, c))) => {
                        tokens.push(Token {
                            text: &body[s..idx],
                            column: c,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            if let Some((s, c)) = start {
                tokens.push(Token {
                    text: &body[s..],
                    column: c,
                });
            }
            (!tokens.is_empty()).then_some(Line {
                number: i + 1,
                tokens,
            })
        })
        .collect()
}

fn expect_count(line: &Line<'_>, want: usize, what: &str) -> Result<(), ParseError> {
    let got = line.tokens.len();
    if got == want {
        return Ok(());
    }
    let column = if got > want {
        line.tokens[want].column
    } else {
        line.end_column()
    };
    Err(ParseError::at(
        line.number,
        column,
        format!("expected {want} {what}, found {got}"),
    ))
}

fn end_of_input(src: &str) -> (usize, usize) {
    (src.lines().count().max(1), 1)
}

pub fn parse_code(src: &str) -> Result<BlockCode, ParseError> {
    let ls = lines(src);
    let Some(header) = ls.first() else {
        return Err(ParseError::at(1, 1, "empty file: expected header `n q m`"));
    };
    expect_count(header, 3, "header fields (n q m)")?;
    let h = header.numbers()?;
    let (n, q, m) = (h[0], h[1], h[2]);
    if n < 2 {
        return Err(ParseError::at(
            header.number,
            header.tokens[0].column,
            "alphabet size n must be at least 2",
        ));
    }
    if q == 0 {
        return Err(ParseError::at(
            header.number,
            header.tokens[1].column,
            "word length q must be positive",
        ));
    }
    if m == 0 {
        return Err(ParseError::at(
            header.number,
            header.tokens[2].column,
            "word count m must be positive",
        ));
    }
    let body = &ls[1..];
    if body.len() < m {
        let (line, column) = body
            .last()
            .map(|l| (l.number + 1, 1))
            .unwrap_or(end_of_input(src));
        return Err(ParseError::at(
            line,
            column,
            format!("header declares {m} words, found {}", body.len()),
        ));
    }
    if body.len() > m {
        let extra = &body[m];
        return Err(ParseError::at(
            extra.number,
            1,
            format!("header declares {m} words, found {}", body.len()),
        ));
    }
    let mut words = Vec::with_capacity(m);
    for line in body {
        expect_count(line, q, "symbols")?;
        let symbols = line.numbers()?;
        if let Some(j) = symbols.iter().position(|&s| s >= n) {
            return Err(ParseError::at(
                line.number,
                line.tokens[j].column,
                format!("symbol {} is outside the alphabet 0..{n}", symbols[j]),
            ));
        }
        words.push(symbols);
    }
    BlockCode::from_symbols(n, &words)
        .map_err(|e: CodeError| ParseError::at(header.number, 1, e.to_string()))
}

pub fn serialize_code(c: &BlockCode) -> String {
    let mut out = format!("{} {} {}\n", c.alphabet_size(), c.length(), c.len());
    for w in c.words() {
        let row: Vec<String> = w.symbols().iter().map(|s| s.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// A Cayley table with optional element names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableFile {
    pub table: CayleyTable,
    pub labels: Option<Vec<String>>,
}

impl TableFile {
    pub fn new(table: CayleyTable) -> Self {
        TableFile {
            table,
            labels: None,
        }
    }

    /// The stored name of `x`, or `θ`, `a_1`, `a_2`, ...
    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => default_label(x),
        }
    }
}

pub fn default_label(x: usize) -> String {
    if x == 0 {
        "θ".to_string()
    } else {
        format!("a_{x}")
    }
}

pub fn parse_table(src: &str) -> Result<TableFile, ParseError> {
    let ls = lines(src);
    let Some(header) = ls.first() else {
        return Err(ParseError::at(1, 1, "empty file: expected header `r`"));
    };
    expect_count(header, 1, "header field (r)")?;
    let r = header.numbers()?[0];
    if r == 0 {
        return Err(ParseError::at(
            header.number,
            header.tokens[0].column,
            "table size r must be positive",
        ));
    }
    let mut rest = &ls[1..];
    let mut labels = None;
    if let Some(last) = rest.last() {
        if last.tokens[0].text == "labels" {
            let names: Vec<String> = last.tokens[1..]
                .iter()
                .map(|t| t.text.to_string())
                .collect();
            if names.len() != r {
                return Err(ParseError::at(
                    last.number,
                    last.tokens[0].column,
                    format!("expected {r} labels, found {}", names.len()),
                ));
            }
            labels = Some(names);
            rest = &rest[..rest.len() - 1];
        }
    }
    if rest.len() != r {
        let (line, column) = match rest.get(r) {
            Some(extra) => (extra.number, 1),
            None => rest
                .last()
                .map(|l| (l.number + 1, 1))
                .unwrap_or(end_of_input(src)),
        };
        return Err(ParseError::at(
            line,
            column,
            format!("header declares {r} rows, found {}", rest.len()),
        ));
    }
    let mut entries = Vec::with_capacity(r * r);
    for line in rest {
        expect_count(line, r, "entries")?;
        let row = line.numbers()?;
        if let Some(j) = row.iter().position(|&e| e >= r) {
            return Err(ParseError::at(
                line.number,
                line.tokens[j].column,
                format!("entry {} is not an element index below {r}", row[j]),
            ));
        }
        entries.extend(row);
    }
    let table = CayleyTable::new(r, entries)
        .map_err(|e: TableError| ParseError::at(header.number, 1, e.to_string()))?;
    Ok(TableFile { table, labels })
}

pub fn serialize_table(t: &TableFile) -> String {
    let mut out = format!("{}\n", t.table.size());
    for row in t.table.rows() {
        let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    if let Some(labels) = &t.labels {
        let _ = writeln!(out, "labels {}", labels.join(" "));
    }
    out
}
