//! graph6 and edge-list text formats.

use std::fmt;

use thiserror::Error;

use crate::error::Error as GraphError;
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    EdgeList,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edges" => Ok(Format::EdgeList),
            _ => Err(format!("unknown format {s:?} (expected graph6 or edgelist)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::EdgeList => "edgelist",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] GraphError),
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { offset, message: message.into() }
}

pub fn parse_graph(bytes: &[u8], format: Format) -> Result<Graph, ParseError> {
    match format {
        Format::Graph6 => decode_graph6(bytes),
        Format::EdgeList => parse_edge_list(bytes),
    }
}

const HEADER: &[u8] = b">>graph6<<";

/// Decodes one graph6 record; an optional `>>graph6<<` header and trailing line break are
/// accepted.
pub fn decode_graph6(bytes: &[u8]) -> Result<Graph, ParseError> {
    let mut start = 0;
    if bytes.starts_with(HEADER) {
        start = HEADER.len();
    }
    let mut end = bytes.len();
    while end > start && matches!(bytes[end - 1], b'\n' | b'\r') {
        end -= 1;
    }
    let data = &bytes[start..end];
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(syntax(start + i, format!("byte {b:#04x} is outside the graph6 range 63..=126")));
        }
    }
    let (n, header_len) = match data {
        [] => return Err(syntax(start, "missing vertex count")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(syntax(start + 2, "truncated 6-byte vertex count"));
            }
            (rest[..6].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize), 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(syntax(start + 1, "truncated 3-byte vertex count"));
            }
            (rest[..3].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize), 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    let canonical_len = match n {
        0..=62 => 1,
        63..=258_047 => 4,
        _ => 8,
    };
    if header_len != canonical_len {
        return Err(syntax(start, format!("vertex count {n} is not in its shortest form")));
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &data[header_len..];
    if body.len() != expected {
        return Err(syntax(
            start + header_len + body.len().min(expected),
            format!("expected {expected} data bytes for {n} vertices, found {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(syntax(start + header_len + body.len() - 1, "nonzero padding bits"));
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// Encodes a graph as a graph6 record without header or line break.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// One `u v` pair per line; blank lines and `#` comments are ignored. The vertex count is
/// one more than the largest id mentioned.
pub fn parse_edge_list(bytes: &[u8]) -> Result<Graph, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|e| syntax(e.valid_up_to(), "input is not UTF-8"))?;
    let mut edges = Vec::new();
    let mut n = 0;
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("");
        let fields: Vec<&str> = content.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            [u, v] => {
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| syntax(offset, format!("{s:?} is not a vertex id")))
                };
                let (u, v) = (parse(u)?, parse(v)?);
                n = n.max(u + 1).max(v + 1);
                edges.push((u, v));
            }
            _ => return Err(syntax(offset, "expected exactly two vertex ids")),
        }
        offset += line.len();
    }
    Ok(Graph::new(n, edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    g.edges().iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_strings() {
        let g = decode_graph6(b"D~{").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(encode_graph6(&g), "D~{");
        // C_5 in graph6 is "Dhc"
        let c5 = Graph::cycle(5);
        assert_eq!(encode_graph6(&c5), "Dhc");
        assert_eq!(decode_graph6(b">>graph6<<Dhc\n").unwrap(), c5);
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
        assert_eq!(decode_graph6(b"?").unwrap().n(), 0);
    }

    #[test]
    fn large_vertex_counts() {
        let g = Graph::path(100);
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode_graph6(s.as_bytes()).unwrap(), g);
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        assert!(matches!(decode_graph6(b"Dh"), Err(ParseError::Syntax { .. })));
        assert!(matches!(decode_graph6(b"D h"), Err(ParseError::Syntax { offset: 1, .. })));
        assert!(matches!(decode_graph6(b""), Err(ParseError::Syntax { offset: 0, .. })));
        assert!(matches!(decode_graph6(b"Dhcc"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list(b"0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
        let g = parse_edge_list(b"# comment\n\n0 1 # trailing\n").unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(parse_edge_list(b"0 0\n"), Err(ParseError::Invalid(GraphError::SelfLoop(0)))));
        assert!(matches!(parse_edge_list(b"0 1\n1 0\n"), Err(ParseError::Invalid(GraphError::DuplicateEdge(0, 1)))));
        assert!(matches!(parse_edge_list(b"0 1\n0 x\n"), Err(ParseError::Syntax { offset: 4, .. })));
        assert_eq!(parse_edge_list(write_edge_list(&Graph::cycle(6)).as_bytes()).unwrap(), Graph::cycle(6));
    }
}
