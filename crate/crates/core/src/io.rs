//! The line-oriented hypergraph text format.
//!
//! UTF-8. `#` starts a comment that runs to the end of the line. Every
//! non-blank, non-comment line is one edge given as whitespace-separated
//! nonnegative integer vertex ids. Duplicate lines are duplicate edges.
//! Canonical output sorts the vertices of each edge ascending and preserves
//! edge order, one edge per line with single spaces; parsing a canonical
//! file and writing it back reproduces it byte for byte.

use thiserror::Error;

use crate::hypergraph::{Edge, Hypergraph, HypergraphError};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {token:?} is not a nonnegative integer vertex id")]
    BadToken { line: usize, token: String },
    #[error("line {line}: {source}")]
    BadEdge {
        line: usize,
        #[source]
        source: HypergraphError,
    },
}

pub fn parse_hypergraph(input: &str) -> Result<Hypergraph, ParseError> {
    let mut edges = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let ids = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u64>().map_err(|_| ParseError::BadToken {
                    line,
                    token: tok.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        edges.push(Edge::from_ids(ids).map_err(|source| ParseError::BadEdge { line, source })?);
    }
    Ok(Hypergraph::new(edges))
}

/// Canonical text form: one edge per line, vertices ascending, trailing
/// newline after every edge, nothing else.
pub fn format_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::new();
    for e in h.edges() {
        let mut first = true;
        for v in e.iter() {
            if !first {
                out.push(' ');
            }
            out.push_str(&v.to_string());
            first = false;
        }
        out.push('\n');
    }
    out
}
