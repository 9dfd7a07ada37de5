use std::collections::HashMap;
use std::io::{BufRead, Write};

use super::Graph;
use crate::error::{Error, Result};

/// A graph read from an edge list plus what the reader had to discard.
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub self_loops_dropped: usize,
    pub duplicates_collapsed: usize,
}

/// Parses a whitespace-separated edge list.
///
/// Blank lines and lines starting with `#` are skipped. Every other line must
/// hold exactly two tokens; tokens are arbitrary strings and receive dense ids
/// in order of first appearance. `node_count` pads the graph with isolated
/// nodes, which an edge list cannot otherwise express.
pub fn parse_edge_list(text: &str, node_count: Option<usize>) -> Result<ParsedGraph> {
    read_edge_list(text.as_bytes(), node_count)
}

pub fn read_edge_list<R: BufRead>(reader: R, node_count: Option<usize>) -> Result<ParsedGraph> {
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut pairs = Vec::new();
    let mut self_loops = 0;
    let mut data_lines = 0;

    for (index, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        data_lines += 1;
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: index + 1,
                message: format!("expected 2 node tokens, found {}", tokens.len()),
            });
        }
        let mut intern = |token: &str| {
            *ids.entry(token.to_owned()).or_insert_with(|| {
                labels.push(token.to_owned());
                labels.len() - 1
            })
        };
        let a = intern(tokens[0]);
        let b = intern(tokens[1]);
        if a == b {
            self_loops += 1;
            continue;
        }
        pairs.push(if a < b {
            (a as u32, b as u32)
        } else {
            (b as u32, a as u32)
        });
    }

    if data_lines == 0 {
        return Err(Error::EmptyInput);
    }

    let observed = labels.len();
    let node_count = match node_count {
        Some(n) if n < observed => {
            return Err(Error::param(format!(
                "node count {n} is smaller than the {observed} distinct nodes in the edge list"
            )))
        }
        Some(n) => n,
        None => observed,
    };
    if node_count > u32::MAX as usize {
        return Err(Error::param(format!(
            "node count {node_count} exceeds u32 ids"
        )));
    }

    let raw = pairs.len();
    pairs.sort_unstable();
    pairs.dedup();
    let duplicates_collapsed = raw - pairs.len();

    Ok(ParsedGraph {
        graph: Graph::from_canonical(node_count, pairs).with_labels(labels),
        self_loops_dropped: self_loops,
        duplicates_collapsed,
    })
}

/// Writes the canonical form: sorted `u v` pairs of 0-based ids, one per
/// line. Isolated nodes are not represented; readers recover them with a
/// declared node count.
pub fn write_edge_list<W: Write>(graph: &Graph, mut out: W) -> std::io::Result<()> {
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()
}
