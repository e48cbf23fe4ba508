//! The plain-text count matrix format.
//!
//! ```text
//! # comments start with '#'
//! 2
//! 2 4
//! 1 2
//! ```
//!
//! The first non-blank, non-comment line is the dimension `m`; then come `m`
//! rows of `m` whitespace-separated natural numbers.

use thiserror::Error;

use crate::category::CountMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing dimension line")]
    MissingDimension,
    #[error("invalid number {0:?}")]
    InvalidNumber(String),
    #[error("negative entry {0}")]
    NegativeEntry(String),
    #[error("row length mismatch: expected {expected} entries, found {found}")]
    RowLength { expected: usize, found: usize },
    #[error("expected {expected} rows, found {found}")]
    MissingRows { expected: usize, found: usize },
    #[error("unexpected data after the last row")]
    TrailingData,
}

/// Lines with comments stripped, paired with 1-based line numbers; blank
/// lines are dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        (!line.trim().is_empty()).then_some((i + 1, line))
    })
}

/// Splits a line into tokens with their 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn number(line: usize, column: usize, tok: &str) -> Result<u64, ParseError> {
    tok.parse::<u64>().map_err(|_| {
        let kind = if tok.starts_with('-') && tok[1..].parse::<u64>().is_ok() {
            ParseErrorKind::NegativeEntry(tok.to_string())
        } else {
            ParseErrorKind::InvalidNumber(tok.to_string())
        };
        ParseError { line, column, kind }
    })
}

pub fn parse_matrix_text(text: &str) -> Result<CountMatrix, ParseError> {
    let mut lines = content_lines(text);
    let Some((dim_line, first)) = lines.next() else {
        return Err(ParseError { line: 1, column: 1, kind: ParseErrorKind::MissingDimension });
    };
    let toks = tokens(first);
    if toks.len() != 1 {
        let (column, _) = toks.get(1).copied().unwrap_or((1, ""));
        return Err(ParseError { line: dim_line, column, kind: ParseErrorKind::TrailingData });
    }
    let m = number(dim_line, toks[0].0, toks[0].1)? as usize;

    let mut entries = Vec::with_capacity(m * m);
    let mut last_line = dim_line;
    for row in 0..m {
        let Some((ln, line)) = lines.next() else {
            return Err(ParseError {
                line: last_line + 1,
                column: 1,
                kind: ParseErrorKind::MissingRows { expected: m, found: row },
            });
        };
        last_line = ln;
        let toks = tokens(line);
        if toks.len() != m {
            let column = toks.get(m).map_or(line.trim_end().len() + 1, |t| t.0);
            return Err(ParseError {
                line: ln,
                column,
                kind: ParseErrorKind::RowLength { expected: m, found: toks.len() },
            });
        }
        for (col, tok) in toks {
            entries.push(number(ln, col, tok)?);
        }
    }
    if let Some((ln, line)) = lines.next() {
        let column = tokens(line).first().map_or(1, |t| t.0);
        return Err(ParseError { line: ln, column, kind: ParseErrorKind::TrailingData });
    }
    Ok(CountMatrix::new(m, entries).expect("m * m entries"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_examples() {
        assert_eq!(parse_matrix_text("2\n2 4\n1 2\n").unwrap(), CountMatrix::from_rows(&[&[2, 4], &[1, 2]]));
        assert_eq!(parse_matrix_text("1\n7\n").unwrap(), CountMatrix::from_rows(&[&[7]]));
        assert_eq!(
            parse_matrix_text("# union\n\n2   # dim\n 2  4 \n1 2").unwrap(),
            CountMatrix::from_rows(&[&[2, 4], &[1, 2]])
        );
    }

    #[test]
    fn row_length_mismatch() {
        let err = parse_matrix_text("2\n1 2\n1\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::RowLength { expected: 2, found: 1 });
        assert_eq!((err.line, err.column), (3, 2));
        assert_eq!(err.to_string(), "line 3, column 2: row length mismatch: expected 2 entries, found 1");
    }

    #[test]
    fn other_errors() {
        assert_eq!(parse_matrix_text("# nothing\n").unwrap_err().kind, ParseErrorKind::MissingDimension);
        let err = parse_matrix_text("2\n1 -2\n1 1\n").unwrap_err();
        assert_eq!((err.line, err.column, err.kind), (2, 3, ParseErrorKind::NegativeEntry("-2".into())));
        assert_eq!(
            parse_matrix_text("2\n1 x\n1 1\n").unwrap_err().kind,
            ParseErrorKind::InvalidNumber("x".into())
        );
        assert_eq!(
            parse_matrix_text("2\n1 1\n").unwrap_err().kind,
            ParseErrorKind::MissingRows { expected: 2, found: 1 }
        );
        assert_eq!(parse_matrix_text("1\n1\n1\n").unwrap_err().kind, ParseErrorKind::TrailingData);
    }

    #[test]
    fn display_round_trips() {
        let z = CountMatrix::from_rows(&[&[6, 6, 15], &[6, 6, 6], &[0, 1, 9]]);
        assert_eq!(parse_matrix_text(&z.to_string()).unwrap(), z);
    }
}
