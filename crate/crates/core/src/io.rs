//! Graph readers and writers: edge lists, DIMACS `.col`, and JSON.
//!
//! Edge lists hold one `u v` pair per line, 0-indexed, with `#` comments. A comment
//! of the form `# n 12` fixes the vertex count, which otherwise is one more than the
//! largest id seen. DIMACS uses `p edge n m` and 1-indexed `e u v` lines.

use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Dimacs,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(Format::EdgeList),
            "dimacs" => Ok(Format::Dimacs),
            "json" => Ok(Format::Json),
            other => Err(Error::pre(format!("unknown graph format {other:?}"))),
        }
    }
}

impl Format {
    /// `.col`/`.dimacs` → DIMACS, `.json` → JSON, anything else → edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("col" | "dimacs") => Format::Dimacs,
            Some("json") => Format::Json,
            _ => Format::EdgeList,
        }
    }
}

fn parse_vertex(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a vertex id, found {tok:?}"),
    })
}

fn build(n: usize, edges: &[(Vertex, Vertex)], line: usize) -> Result<Graph> {
    Graph::from_edges(n, edges).map_err(|e| match e {
        Error::Precondition(msg) => Error::Parse { line, msg },
        other => other,
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if let Some(comment) = s.strip_prefix('#') {
            let mut toks = comment.split_whitespace();
            if toks.next() == Some("n") {
                if let Some(tok) = toks.next() {
                    declared = Some(parse_vertex(tok, line)?);
                }
            }
            continue;
        }
        let body = s.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            [u, v] => {
                let (u, v) = (parse_vertex(u, line)?, parse_vertex(v, line)?);
                max_id = Some(max_id.unwrap_or(0).max(u).max(v));
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected two vertex ids, found {} tokens", toks.len()),
                })
            }
        }
    }
    let n = match (declared, max_id) {
        (Some(n), Some(m)) if m >= n => {
            return Err(Error::Parse {
                line: 0,
                msg: format!("vertex {m} outside the declared count {n}"),
            })
        }
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => 0,
    };
    build(n, &edges, 0)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.as_slice() {
            [] | ["c", ..] => {}
            ["p", _kind, nv, _m] => {
                if n.is_some() {
                    return Err(Error::Parse {
                        line,
                        msg: "second problem line".into(),
                    });
                }
                n = Some(parse_vertex(nv, line)?);
            }
            ["e", u, v] => {
                let nv = n.ok_or_else(|| Error::Parse {
                    line,
                    msg: "edge before the problem line".into(),
                })?;
                let (u, v) = (parse_vertex(u, line)?, parse_vertex(v, line)?);
                if u == 0 || v == 0 || u > nv || v > nv {
                    return Err(Error::Parse {
                        line,
                        msg: format!("edge ({u}, {v}) outside 1..={nv}"),
                    });
                }
                edges.push((u - 1, v - 1));
            }
            _ => {
                return Err(Error::Parse {
                    line,
                    msg: format!("unrecognized line {raw:?}"),
                })
            }
        }
    }
    let n = n.ok_or_else(|| Error::Parse {
        line: 0,
        msg: "missing problem line".into(),
    })?;
    build(n, &edges, 0)
}

#[derive(Serialize, Deserialize)]
struct GraphDoc {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

/// `{"n": 4, "edges": [[0, 1], ...]}`
pub fn parse_json(text: &str) -> Result<Graph> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    Graph::from_edges(doc.n, &doc.edges)
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Dimacs => parse_dimacs(text),
        Format::Json => parse_json(text),
    }
}

/// Reads a graph, guessing the format from the extension unless one is given.
pub fn read_graph(path: &Path, format: Option<Format>) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text, format.unwrap_or_else(|| Format::from_path(path)))
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("# n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn to_json(g: &Graph) -> serde_json::Value {
    serde_json::to_value(GraphDoc {
        n: g.n(),
        edges: g.edges().collect(),
    })
    .expect("serializable")
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::EdgeList => to_edge_list(g),
        Format::Dimacs => to_dimacs(g),
        Format::Json => serde_json::to_string_pretty(&to_json(g)).expect("serializable") + "\n",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{families, gnp};

    #[test]
    fn round_trips() {
        for seed in 0..5 {
            let mut g = gnp(15, 0.3, seed).unwrap();
            g = g.disjoint_union(&Graph::empty(2));
            for f in [Format::EdgeList, Format::Dimacs, Format::Json] {
                assert_eq!(parse_graph(&write_graph(&g, f), f).unwrap(), g);
            }
        }
    }

    #[test]
    fn edge_list_details() {
        let g = parse_edge_list("# triangle\n0 1\n1 2 # trailing\n\n2 0\n").unwrap();
        assert_eq!(g, families::cycle(3));
        assert_eq!(parse_edge_list("").unwrap().n(), 0);
        assert_eq!(parse_edge_list("# n 5\n0 1\n").unwrap().n(), 5);
        assert!(matches!(parse_edge_list("0 1\n1 x\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 1 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_edge_list("# n 2\n0 3\n").is_err());
        assert!(parse_edge_list("1 1\n").is_err());
    }

    #[test]
    fn dimacs_details() {
        let g = parse_dimacs("c petersen-ish\np edge 3 3\ne 1 2\ne 2 3\ne 3 1\ne 1 2\n").unwrap();
        assert_eq!(g, families::cycle(3));
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 0 1\n").is_err());
        assert!(parse_dimacs("p edge 2 1\ne 1 3\n").is_err());
    }
}
