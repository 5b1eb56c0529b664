//! Edge-list text format and DOT export.
//!
//! Data lines hold two ASCII decimal vertex indices separated by whitespace.
//! Lines starting with `#` are comments; an optional `n <count>` header fixes
//! the vertex count (otherwise n = 1 + max index mentioned).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::{EdgeId, Graph};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed line {content:?}")]
    Malformed { line: usize, content: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: vertex {vertex} exceeds declared count {n}")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate header")]
    DuplicateHeader { line: usize },
}

/// A parsed graph plus non-fatal warnings (currently: collapsed duplicates).
#[derive(Debug)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

/// Parse the edge-list format. Duplicate edges collapse with a warning;
/// self-loops are errors.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut warnings = Vec::new();
    let mut max_vertex: Option<usize> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let first = parts.next().unwrap();
        if first == "n" {
            let count = parts
                .next()
                .and_then(|t| t.parse::<usize>().ok())
                .ok_or_else(|| ParseError::Malformed {
                    line: line_no,
                    content: raw.to_string(),
                })?;
            if parts.next().is_some() {
                return Err(ParseError::Malformed {
                    line: line_no,
                    content: raw.to_string(),
                });
            }
            if declared.is_some() {
                return Err(ParseError::DuplicateHeader { line: line_no });
            }
            declared = Some(count);
            continue;
        }
        let u: usize = first.parse().map_err(|_| ParseError::Malformed {
            line: line_no,
            content: raw.to_string(),
        })?;
        let v: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| ParseError::Malformed {
                line: line_no,
                content: raw.to_string(),
            })?;
        if parts.next().is_some() {
            return Err(ParseError::Malformed {
                line: line_no,
                content: raw.to_string(),
            });
        }
        if u == v {
            return Err(ParseError::SelfLoop {
                line: line_no,
                vertex: u,
            });
        }
        if let Some(n) = declared {
            if u >= n || v >= n {
                return Err(ParseError::OutOfRange {
                    line: line_no,
                    vertex: u.max(v),
                    n,
                });
            }
        }
        max_vertex = Some(max_vertex.unwrap_or(0).max(u).max(v));
        let canon = (u.min(v), u.max(v));
        if edges.contains(&canon) {
            warnings.push(format!("line {line_no}: duplicate edge {u} {v} collapsed"));
        } else {
            edges.push(canon);
        }
    }

    let n = declared.unwrap_or(match max_vertex {
        Some(mx) => mx + 1,
        None => 0,
    });
    Ok(ParsedGraph {
        graph: Graph::from_edges(n, edges),
        warnings,
    })
}

/// Serialize a graph in the edge-list format, header included.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

/// DOT export with optional vertex/edge colorings and optional vertex labels.
pub fn to_dot(
    g: &Graph,
    vertex_colors: Option<&BTreeMap<usize, String>>,
    edge_colors: Option<&BTreeMap<EdgeId, String>>,
    labels: Option<&[String]>,
) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let mut attrs = Vec::new();
        if let Some(ls) = labels {
            attrs.push(format!("label=\"{}\"", ls[v]));
        }
        if let Some(colors) = vertex_colors {
            if let Some(c) = colors.get(&v) {
                attrs.push(format!("color=\"{c}\""));
                attrs.push("style=filled".to_string());
            }
        }
        if attrs.is_empty() {
            out.push_str(&format!("  {v};\n"));
        } else {
            out.push_str(&format!("  {v} [{}];\n", attrs.join(", ")));
        }
    }
    for e in g.edges() {
        match edge_colors.and_then(|c| c.get(&e)) {
            Some(c) => out.push_str(&format!(
                "  {} -- {} [color=\"{c}\"];\n",
                e.u(),
                e.v()
            )),
            None => out.push_str(&format!("  {} -- {};\n", e.u(), e.v())),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let p = parse_edge_list("0 1\n1 2\n").unwrap();
        assert_eq!(p.graph.n(), 3);
        assert_eq!(p.graph.m(), 2);
        assert!(p.warnings.is_empty());
    }

    #[test]
    fn duplicate_collapses_with_warning() {
        let p = parse_edge_list("0 1\n0 1\n").unwrap();
        assert_eq!(p.graph.m(), 1);
        assert_eq!(p.warnings.len(), 1);
    }

    #[test]
    fn k4_from_file() {
        let text = "# complete graph on four vertices\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
        let p = parse_edge_list(text).unwrap();
        assert_eq!(p.graph.n(), 4);
        assert_eq!(p.graph.m(), 6);
        assert_eq!(p.graph.min_degree(), 3);
    }

    #[test]
    fn header_fixes_vertex_count() {
        let p = parse_edge_list("n 5\n0 1\n").unwrap();
        assert_eq!(p.graph.n(), 5);
        let err = parse_edge_list("n 2\n0 3\n").unwrap_err();
        assert!(matches!(err, ParseError::OutOfRange { vertex: 3, .. }));
    }

    #[test]
    fn rejects_self_loop_and_garbage() {
        assert!(matches!(
            parse_edge_list("1 1\n").unwrap_err(),
            ParseError::SelfLoop { line: 1, vertex: 1 }
        ));
        assert!(matches!(
            parse_edge_list("0 1\nx y\n").unwrap_err(),
            ParseError::Malformed { line: 2, .. }
        ));
        assert!(matches!(
            parse_edge_list("0 1 2\n").unwrap_err(),
            ParseError::Malformed { line: 1, .. }
        ));
    }

    #[test]
    fn round_trip() {
        let text = "n 4\n0 1\n0 2\n1 3\n";
        let p = parse_edge_list(text).unwrap();
        assert_eq!(write_edge_list(&p.graph), text);
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let p = parse_edge_list("# nothing\n").unwrap();
        assert_eq!(p.graph.n(), 0);
    }
}
