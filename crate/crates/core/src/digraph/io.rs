//! Text formats: the `.dmat` adjacency matrix and a minimal Pajek arc-list
//! dialect for cross-checking externally produced files.

use super::{Digraph, DigraphError};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected a vertex count in 1..=16, got {0:?}")]
    BadOrder(String),
    #[error("expected a row of {expected} characters, got {got}")]
    BadRowLength { expected: usize, got: usize },
    #[error("unexpected character {0:?} (rows are '0'/'1')")]
    BadChar(char),
    #[error("diagonal entry must be '0' (no loops)")]
    DiagonalArc,
    #[error("missing row {0} of the matrix")]
    MissingRow(usize),
    #[error("trailing content after the matrix")]
    TrailingContent,
    #[error("expected {0:?} header")]
    MissingHeader(&'static str),
    #[error("bad arc line: {0:?}")]
    BadArc(String),
    #[error("vertex id {0} out of range (ids are 1-based)")]
    BadVertexId(usize),
    #[error("{0}")]
    Digraph(DigraphError),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Renders the `.dmat` form: the order on the first line, then one row of
/// ASCII '0'/'1' per vertex, LF line endings, no trailing whitespace.
pub fn to_dmat(d: &Digraph) -> String {
    let n = d.order();
    let mut s = String::with_capacity((n + 1) * (n + 1) + 2);
    s.push_str(&n.to_string());
    s.push('\n');
    for u in 0..n {
        for v in 0..n {
            s.push(if u != v && d.has_arc(u, v) { '1' } else { '0' });
        }
        s.push('\n');
    }
    s
}

/// Parses the `.dmat` form. Errors carry 1-based line numbers.
pub fn from_dmat(text: &str) -> Result<Digraph, ParseError> {
    let mut lines = text.split('\n');
    let first = lines.next().unwrap_or("");
    let n: usize = first
        .trim_end_matches('\r')
        .parse()
        .map_err(|_| err(1, ParseErrorKind::BadOrder(first.to_string())))?;
    if n == 0 || n > super::MAX_ORDER {
        return Err(err(1, ParseErrorKind::BadOrder(first.to_string())));
    }
    let mut d = Digraph::new(n).expect("order checked");
    for u in 0..n {
        let lineno = u + 2;
        let row = lines
            .next()
            .filter(|r| !r.is_empty())
            .ok_or_else(|| err(lineno, ParseErrorKind::MissingRow(u + 1)))?;
        if row.chars().count() != n {
            return Err(err(
                lineno,
                ParseErrorKind::BadRowLength { expected: n, got: row.chars().count() },
            ));
        }
        for (v, c) in row.chars().enumerate() {
            match c {
                '0' => {}
                '1' if u == v => return Err(err(lineno, ParseErrorKind::DiagonalArc)),
                '1' => d
                    .add_arc(u, v)
                    .map_err(|e| err(lineno, ParseErrorKind::Digraph(e)))?,
                other => return Err(err(lineno, ParseErrorKind::BadChar(other))),
            }
        }
    }
    for (extra, line) in lines.enumerate() {
        if !line.is_empty() {
            return Err(err(n + 2 + extra, ParseErrorKind::TrailingContent));
        }
    }
    Ok(d)
}

/// Parses the minimal Pajek dialect emitted for digraphs:
/// a `*Vertices n` header, optional vertex label lines, an `*Arcs` header,
/// then 1-based `u v` lines.
pub fn from_pajek(text: &str) -> Result<Digraph, ParseError> {
    let mut d: Option<Digraph> = None;
    let mut in_arcs = false;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let lower = line.to_ascii_lowercase();
        if let Some(rest) = lower.strip_prefix("*vertices") {
            let n: usize = rest
                .split_whitespace()
                .next()
                .unwrap_or("")
                .parse()
                .map_err(|_| err(lineno, ParseErrorKind::BadOrder(line.to_string())))?;
            if n == 0 || n > super::MAX_ORDER {
                return Err(err(lineno, ParseErrorKind::BadOrder(line.to_string())));
            }
            d = Some(Digraph::new(n).expect("order checked"));
        } else if lower.starts_with("*arcs") {
            if d.is_none() {
                return Err(err(lineno, ParseErrorKind::MissingHeader("*Vertices")));
            }
            in_arcs = true;
        } else if lower.starts_with('*') {
            // other sections (*Edges, *Network, ...) are outside the dialect
            return Err(err(lineno, ParseErrorKind::MissingHeader("*Arcs")));
        } else if in_arcs {
            let mut parts = line.split_whitespace();
            let (u, v) = match (parts.next(), parts.next()) {
                (Some(a), Some(b)) => {
                    let u: usize = a
                        .parse()
                        .map_err(|_| err(lineno, ParseErrorKind::BadArc(line.to_string())))?;
                    let v: usize = b
                        .parse()
                        .map_err(|_| err(lineno, ParseErrorKind::BadArc(line.to_string())))?;
                    (u, v)
                }
                _ => return Err(err(lineno, ParseErrorKind::BadArc(line.to_string()))),
            };
            let dg = d.as_mut().expect("in_arcs implies header seen");
            if u == 0 || u > dg.order() {
                return Err(err(lineno, ParseErrorKind::BadVertexId(u)));
            }
            if v == 0 || v > dg.order() {
                return Err(err(lineno, ParseErrorKind::BadVertexId(v)));
            }
            dg.add_arc(u - 1, v - 1)
                .map_err(|e| err(lineno, ParseErrorKind::Digraph(e)))?;
        }
        // vertex label lines before *Arcs are skipped
    }
    match d {
        Some(dg) if in_arcs => Ok(dg),
        Some(_) => Err(err(text.lines().count(), ParseErrorKind::MissingHeader("*Arcs"))),
        None => Err(err(1, ParseErrorKind::MissingHeader("*Vertices"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn dmat_round_trip() {
        for d in [catalog::o4(), catalog::o5(), catalog::h5(), catalog::f()] {
            assert_eq!(from_dmat(&to_dmat(&d)).unwrap(), d);
        }
    }

    #[test]
    fn dmat_errors_carry_line_numbers() {
        assert_eq!(from_dmat("x\n").unwrap_err().line, 1);
        assert_eq!(from_dmat("2\n01\n1\n").unwrap_err().line, 3);
        assert_eq!(
            from_dmat("2\n01\n10\nrest\n").unwrap_err().kind,
            ParseErrorKind::TrailingContent
        );
        assert_eq!(from_dmat("2\n11\n00\n").unwrap_err().kind, ParseErrorKind::DiagonalArc);
        assert_eq!(from_dmat("2\n0a\n00\n").unwrap_err().kind, ParseErrorKind::BadChar('a'));
        assert_eq!(from_dmat("2\n01\n").unwrap_err().kind, ParseErrorKind::MissingRow(2));
    }

    #[test]
    fn pajek_matches_dmat() {
        let c3 = catalog::c3();
        let pajek = "*Vertices 3\n1 \"0\"\n2 \"1\"\n3 \"2\"\n*Arcs\n1 2\n2 3\n3 1\n";
        assert_eq!(from_pajek(pajek).unwrap(), c3);
    }

    #[test]
    fn pajek_rejects_missing_sections() {
        assert!(from_pajek("*Arcs\n1 2\n").is_err());
        assert!(from_pajek("*Vertices 3\n1 2\n").is_err());
        assert!(from_pajek("*Vertices 2\n*Arcs\n0 1\n").is_err());
    }
}
