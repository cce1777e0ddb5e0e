//! graph6 and edge-list text formats.
//!
//! Edge lists are `n m` on the first line followed by `m` lines `u v`
//! (0-indexed). Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use gammac_core::{Graph, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    Empty,
    #[error("bad header: {0}")]
    BadHeader(String),
    #[error("malformed edge line")]
    BadEdge,
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("byte {0:#04x} is not valid in graph6")]
    BadByte(u8),
    #[error("graph6 data has {found} bytes, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("non-zero padding bits")]
    Padding,
    #[error("order {0} exceeds the maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
}

/// A parse failure with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

fn at(line: usize, column: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, column, kind }
}

/// Encodes `g` in graph6.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    // orders up to 62 fit in one byte, and graphs here have at most 32 vertices
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            bits += 1;
            if bits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((acc << (6 - bits)) + 63) as char);
    }
    out
}

/// Decodes a single graph6 string; an optional `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let s = text.trim_end_matches(['\n', '\r']);
    let (offset, s) = match s.strip_prefix(">>graph6<<") {
        Some(rest) => (10, rest),
        None => (0, s),
    };
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(at(1, 1, ParseErrorKind::Empty));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(at(1, offset + i + 1, ParseErrorKind::BadByte(b)));
        }
    }
    let (n, header) = if bytes[0] < 126 {
        ((bytes[0] - 63) as usize, 1)
    } else if bytes.len() >= 4 && bytes[1] < 126 {
        let n = bytes[1..4].iter().fold(0usize, |a, &b| a << 6 | (b - 63) as usize);
        (n, 4)
    } else {
        return Err(at(1, offset + 1, ParseErrorKind::OrderTooLarge(MAX_ORDER + 1)));
    };
    if n > MAX_ORDER {
        return Err(at(1, offset + 1, ParseErrorKind::OrderTooLarge(n)));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let data = &bytes[header..];
    if data.len() != expected {
        return Err(at(1, offset + header + 1, ParseErrorKind::Length { expected, found: data.len() }));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    for k in pairs..expected * 6 {
        if bit(k) {
            return Err(at(1, offset + header + k / 6 + 1, ParseErrorKind::Padding));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("validated order"))
}

/// Edge list with edges sorted, ending in a newline.
pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses the edge-list format.
pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let Some((hline, header)) = lines.next() else {
        return Err(at(1, 1, ParseErrorKind::Empty));
    };
    let fields: Vec<&str> = header.split_whitespace().collect();
    let parsed: Option<Vec<usize>> = fields.iter().map(|f| f.parse().ok()).collect();
    let (n, m) = match parsed.as_deref() {
        Some([n, m]) => (*n, *m),
        _ => return Err(at(hline, 1, ParseErrorKind::BadHeader(header.trim().to_string()))),
    };
    if n > MAX_ORDER {
        return Err(at(hline, 1, ParseErrorKind::OrderTooLarge(n)));
    }
    let mut rows = vec![0u32; n];
    let mut found = 0;
    for (line, text) in lines {
        let cols: Vec<(usize, &str)> = text
            .split_whitespace()
            .map(|w| (w.as_ptr() as usize - text.as_ptr() as usize + 1, w))
            .collect();
        let [(cu, u), (cv, v)] = cols.as_slice() else {
            return Err(at(line, 1, ParseErrorKind::BadEdge));
        };
        let u: usize = u.parse().map_err(|_| at(line, *cu, ParseErrorKind::BadEdge))?;
        let v: usize = v.parse().map_err(|_| at(line, *cv, ParseErrorKind::BadEdge))?;
        if u >= n {
            return Err(at(line, *cu, ParseErrorKind::VertexOutOfRange { vertex: u, order: n }));
        }
        if v >= n {
            return Err(at(line, *cv, ParseErrorKind::VertexOutOfRange { vertex: v, order: n }));
        }
        if u == v {
            return Err(at(line, *cu, ParseErrorKind::SelfLoop(u)));
        }
        if rows[u] >> v & 1 == 1 {
            return Err(at(line, *cu, ParseErrorKind::DuplicateEdge(u.min(v), u.max(v))));
        }
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
        found += 1;
    }
    if found != m {
        return Err(at(hline, 1, ParseErrorKind::EdgeCount { expected: m, found }));
    }
    Ok(Graph::from_rows(&rows).expect("rows built symmetrically"))
}

/// Edge list when the first meaningful line holds two integers, graph6 otherwise.
pub fn parse(text: &str) -> Result<Graph, ParseError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        None => Err(at(1, 1, ParseErrorKind::Empty)),
        Some(l) if l.split_whitespace().count() > 1 => parse_edgelist(text),
        Some(l) => parse_graph6(l),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gammac_core::constructions::{complete, paley, petersen};

    #[test]
    fn small_graph6_strings() {
        assert_eq!(emit_graph6(&complete(1)), "@");
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(emit_graph6(&complete(2)), "A_");
        assert_eq!(emit_graph6(&complete(4)), "C~");
        // the Petersen graph's conventional graph6 string with the standard labelling
        assert_eq!(parse_graph6("IheA@GUAo").unwrap().edge_count(), 15);
        assert!(gammac_core::iso::are_isomorphic(&parse_graph6("IheA@GUAo").unwrap(), &petersen()));
    }

    #[test]
    fn round_trips() {
        for g in [complete(7), paley(13).unwrap(), petersen(), Graph::empty(5).unwrap(), complete(32)] {
            assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
            assert_eq!(parse_edgelist(&emit_edgelist(&g)).unwrap(), g);
        }
    }

    #[test]
    fn long_order_header() {
        // the four-byte form for n = 2
        assert_eq!(parse_graph6("~??A_").unwrap(), complete(2));
        assert!(parse_graph6("~?A?").is_err());
    }

    #[test]
    fn edgelist_examples() {
        let g = parse("2 1\n0 1").unwrap();
        assert_eq!(g, complete(2));
        assert_eq!(emit_edgelist(&g), "2 1\n0 1\n");
        let g = parse("# triangle\n3 3\n\n2 1\n0 2\n1 0\n").unwrap();
        assert_eq!(emit_edgelist(&g), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn edgelist_errors_carry_positions() {
        let e = parse_edgelist("3 1\n0 3\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        assert_eq!(e.kind, ParseErrorKind::VertexOutOfRange { vertex: 3, order: 3 });
        let e = parse_edgelist("3 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!((e.line, e.kind), (3, ParseErrorKind::DuplicateEdge(0, 1)));
        let e = parse_edgelist("3 1\n  2 2\n").unwrap_err();
        assert_eq!((e.line, e.column, e.kind), (2, 3, ParseErrorKind::SelfLoop(2)));
        assert_eq!(parse_edgelist("3\n").unwrap_err().kind, ParseErrorKind::BadHeader("3".into()));
        assert_eq!(
            parse_edgelist("3 2\n0 1\n").unwrap_err().kind,
            ParseErrorKind::EdgeCount { expected: 2, found: 1 }
        );
        assert_eq!(parse_edgelist("3 1\n0 x\n").unwrap_err().column, 3);
    }

    #[test]
    fn graph6_errors() {
        let e = parse_graph6("B!").unwrap_err();
        assert_eq!((e.column, e.kind), (2, ParseErrorKind::BadByte(b'!')));
        assert_eq!(parse_graph6("D").unwrap_err().kind, ParseErrorKind::Length { expected: 2, found: 0 });
        // n = 2 has one data bit; the low five bits are padding
        assert_eq!(parse_graph6("A`").unwrap_err().kind, ParseErrorKind::Padding);
        assert_eq!(parse_graph6("").unwrap_err().kind, ParseErrorKind::Empty);
        assert!(matches!(parse_graph6("a").unwrap_err().kind, ParseErrorKind::OrderTooLarge(34)));
    }
}
