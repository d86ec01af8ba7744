//! Plain-text edge lists.
//!
//! ```text
//! c any comment
//! p <n> <m>
//! e <u> <v> <weight>
//! ```
//!
//! `p` is the first line that is not a comment, and exactly `m` `e` lines
//! follow it. Vertex ids are 0-based. Comment and blank lines may appear
//! anywhere. Edge ids are assigned in file order.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::graph::{GraphError, WeightedGraph};

#[derive(Debug, Error)]
pub enum ParseErrorKind {
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("expected `p <n> <m>` header before edges")]
    MissingHeader,
    #[error("duplicate `p` header")]
    DuplicateHeader,
    #[error("malformed header: {0}")]
    BadHeader(String),
    #[error("malformed edge: {0}")]
    BadEdge(String),
    #[error("unknown line type {0:?}")]
    UnknownLine(String),
    #[error("{n} vertices exceed the limit of {limit}")]
    TooManyVertices { n: usize, limit: usize },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("{0}")]
    Graph(GraphError),
}

/// A parse failure at a 1-based line. Line 0 means end of input.
#[derive(Debug, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

fn fail<T>(line: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
    Err(ParseError { line, kind })
}

/// Largest vertex count [`read_graph`] accepts: every id must fit a `u32`.
pub const MAX_VERTICES: usize = u32::MAX as usize;

pub fn read_graph(reader: impl BufRead) -> Result<WeightedGraph, ParseError> {
    read_graph_with_limit(reader, MAX_VERTICES)
}

pub fn parse_graph(text: &str) -> Result<WeightedGraph, ParseError> {
    read_graph(text.as_bytes())
}

/// [`read_graph`] with a tighter bound on the announced vertex count, for
/// untrusted input.
pub fn read_graph_with_limit(
    reader: impl BufRead,
    max_vertices: usize,
) -> Result<WeightedGraph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<(usize, usize, f64)> = Vec::new();
    let mut edge_lines: Vec<usize> = Vec::new();

    for (i, line) in reader.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|e| ParseError {
            line: lineno,
            kind: e.into(),
        })?;
        let mut fields = line.split_ascii_whitespace();
        let Some(tag) = fields.next() else { continue };
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return fail(lineno, ParseErrorKind::DuplicateHeader);
                }
                let (n, m) = match (parse_fields::<2>(&mut fields), fields.next()) {
                    (Some([n, m]), None) => match (n.parse::<usize>(), m.parse::<usize>()) {
                        (Ok(n), Ok(m)) => (n, m),
                        _ => return fail(lineno, ParseErrorKind::BadHeader(line.clone())),
                    },
                    _ => return fail(lineno, ParseErrorKind::BadHeader(line.clone())),
                };
                if n > max_vertices {
                    return fail(
                        lineno,
                        ParseErrorKind::TooManyVertices {
                            n,
                            limit: max_vertices,
                        },
                    );
                }
                header = Some((n, m, lineno));
            }
            "e" => {
                let Some((_, m, _)) = header else {
                    return fail(lineno, ParseErrorKind::MissingHeader);
                };
                let edge = match (parse_fields::<3>(&mut fields), fields.next()) {
                    (Some([u, v, w]), None) => {
                        match (u.parse::<usize>(), v.parse::<usize>(), w.parse::<f64>()) {
                            (Ok(u), Ok(v), Ok(w)) => (u, v, w),
                            _ => return fail(lineno, ParseErrorKind::BadEdge(line.clone())),
                        }
                    }
                    _ => return fail(lineno, ParseErrorKind::BadEdge(line.clone())),
                };
                if edges.len() == m {
                    return fail(
                        lineno,
                        ParseErrorKind::EdgeCountMismatch {
                            expected: m,
                            found: m + 1,
                        },
                    );
                }
                edges.push(edge);
                edge_lines.push(lineno);
            }
            _ if header.is_none() => return fail(lineno, ParseErrorKind::MissingHeader),
            other => return fail(lineno, ParseErrorKind::UnknownLine(other.to_string())),
        }
    }

    let Some((n, m, header_line)) = header else {
        return fail(0, ParseErrorKind::MissingHeader);
    };
    if edges.len() != m {
        return fail(
            0,
            ParseErrorKind::EdgeCountMismatch {
                expected: m,
                found: edges.len(),
            },
        );
    }
    WeightedGraph::new(n, &edges).map_err(|e| {
        let line = match &e {
            GraphError::SelfLoop { index, .. }
            | GraphError::EndpointOutOfRange { index, .. }
            | GraphError::InvalidWeight { index, .. } => edge_lines[*index],
            _ => header_line,
        };
        ParseError {
            line,
            kind: ParseErrorKind::Graph(e),
        }
    })
}

fn parse_fields<'a, const N: usize>(
    fields: &mut impl Iterator<Item = &'a str>,
) -> Option<[&'a str; N]> {
    let mut out = [""; N];
    for slot in &mut out {
        *slot = fields.next()?;
    }
    Some(out)
}

/// Writes `g` so that [`read_graph`] rebuilds it exactly. Weights use the
/// shortest decimal that parses back to the same `f64`.
pub fn write_graph(g: &WeightedGraph, mut sink: impl Write) -> io::Result<()> {
    writeln!(sink, "p {} {}", g.vertex_count(), g.edge_count())?;
    for e in g.edges() {
        writeln!(sink, "e {} {} {}", e.u, e.v, e.weight)?;
    }
    sink.flush()
}

pub fn graph_to_string(g: &WeightedGraph) -> String {
    let mut buf = Vec::new();
    write_graph(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("edge lists are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_random_graph;
    use proptest::prelude::*;

    fn err(text: &str) -> ParseError {
        parse_graph(text).unwrap_err()
    }

    #[test]
    fn minimal() {
        let g = parse_graph("p 2 1\ne 0 1 5").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.edges()[0].weight, 5.0);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_graph("c hi\n\np 3 2\nc between\ne 0 1 1.5\n  \ne 1 2 2\nc end\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn self_loop_reports_line() {
        let e = err("p 2 2\ne 0 1 1\ne 0 0 1\n");
        assert_eq!(e.line, 3);
        assert!(matches!(
            e.kind,
            ParseErrorKind::Graph(GraphError::SelfLoop { .. })
        ));
        assert_eq!(e.to_string(), "line 3: edge 1 is a self-loop on vertex 0");
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(err("e 0 1 1").kind, ParseErrorKind::MissingHeader));
        assert_eq!(err("c x\ne 0 1 1").line, 2);
        assert!(matches!(err("").kind, ParseErrorKind::MissingHeader));
        assert!(matches!(
            err("p 2 0\np 2 0").kind,
            ParseErrorKind::DuplicateHeader
        ));
        assert!(matches!(err("p 2").kind, ParseErrorKind::BadHeader(_)));
        assert!(matches!(err("p 2 1 7").kind, ParseErrorKind::BadHeader(_)));
        assert!(matches!(err("p -2 1").kind, ParseErrorKind::BadHeader(_)));
        assert!(matches!(
            err("p 2 1\ne 0 1").kind,
            ParseErrorKind::BadEdge(_)
        ));
        assert!(matches!(
            err("p 2 1\ne 0 1 x").kind,
            ParseErrorKind::BadEdge(_)
        ));
        assert!(matches!(
            err("p 2 1\nq").kind,
            ParseErrorKind::UnknownLine(_)
        ));
        let e = err("p 3 2\ne 0 1 1\n");
        assert_eq!(e.line, 0);
        assert!(matches!(
            e.kind,
            ParseErrorKind::EdgeCountMismatch {
                expected: 2,
                found: 1
            }
        ));
        let e = err("p 3 1\ne 0 1 1\ne 1 2 1\n");
        assert_eq!(e.line, 3);
        assert!(matches!(
            e.kind,
            ParseErrorKind::EdgeCountMismatch { expected: 1, .. }
        ));
        assert!(matches!(
            err("p 0 0").kind,
            ParseErrorKind::Graph(GraphError::NoVertices)
        ));
        assert_eq!(err("p 2 1\ne 0 2 1").line, 2);
        assert_eq!(err("p 2 1\ne 0 1 -1").line, 2);
        assert_eq!(err("p 2 1\ne 0 1 NaN").line, 2);
    }

    #[test]
    fn vertex_limit() {
        let e = read_graph_with_limit("p 1000 0".as_bytes(), 10).unwrap_err();
        assert!(matches!(
            e.kind,
            ParseErrorKind::TooManyVertices { n: 1000, limit: 10 }
        ));
    }

    #[test]
    fn weight_formatting() {
        let g = WeightedGraph::new(2, &[(0, 1, 2.5)]).unwrap();
        assert_eq!(graph_to_string(&g), "p 2 1\ne 0 1 2.5\n");
    }

    #[test]
    fn round_trip_seeded() {
        for seed in 0..100 {
            let g = generate_random_graph(100, 300, (0.0, 1.0), seed).unwrap();
            let back = parse_graph(&graph_to_string(&g)).unwrap();
            assert_eq!(back.vertex_count(), g.vertex_count());
            assert_eq!(back.edges(), g.edges());
        }
    }

    proptest! {
        #[test]
        fn round_trips_any_weight(bits in prop::collection::vec(any::<u64>(), 1..20)) {
            let list: Vec<_> = bits
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    let w = f64::from_bits(*b).abs();
                    let w = if w.is_finite() { w } else { i as f64 };
                    (i % 5, (i % 5 + 1) % 6, w)
                })
                .collect();
            let g = WeightedGraph::new(6, &list).unwrap();
            let back = parse_graph(&graph_to_string(&g)).unwrap();
            for (a, b) in g.edges().iter().zip(back.edges()) {
                prop_assert_eq!(a.weight.to_bits(), b.weight.to_bits());
            }
            prop_assert_eq!(back.edges(), g.edges());
        }

        #[test]
        fn never_panics(text in "[cpe0-9 .\\-\n]{0,200}") {
            let _ = parse_graph(&text);
        }
    }
}
