//! Plain-text file formats.
//!
//! Edge lists: `#` starts a comment line, an optional `n <count>` header
//! fixes the vertex universe to `0..count`, and every other non-empty line is
//! `u v` with two non-negative integer ids. Without a header the universe is
//! the set of ids that appear, renumbered densely in increasing order.
//!
//! Vertex lists (partition `V2` files and `S` files): a single line of
//! whitespace-separated ids, in the original numbering of the edge list.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::{Error, Graph, Result, Vertex, VertexSet};

/// A graph together with the original ids of its dense vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    labels: Vec<u64>,
    index: HashMap<u64, Vertex>,
}

impl LabeledGraph {
    /// Labels every vertex with its own dense id.
    pub fn identity(graph: Graph) -> Self {
        let labels: Vec<u64> = (0..graph.n() as u64).collect();
        Self::with_labels(graph, labels)
    }

    fn with_labels(graph: Graph, labels: Vec<u64>) -> Self {
        let index = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        LabeledGraph {
            graph,
            labels,
            index,
        }
    }

    pub fn label(&self, v: Vertex) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn vertex(&self, label: u64) -> Option<Vertex> {
        self.index.get(&label).copied()
    }

    pub fn labels_of(&self, set: &VertexSet) -> Vec<u64> {
        set.iter().map(|v| self.labels[v]).collect()
    }
}

fn parse_id(token: &str, line: usize) -> Result<u64> {
    token.parse::<u64>().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer, found {token:?}"),
    })
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_edge_list(text: &str) -> Result<LabeledGraph> {
    let mut declared: Option<u64> = None;
    let mut raw = Vec::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["n", count] => {
                if declared.is_some() || !raw.is_empty() {
                    return Err(Error::Parse {
                        line,
                        message: "the `n <count>` header must come first and only once".into(),
                    });
                }
                declared = Some(parse_id(count, line)?);
            }
            [a, b] => raw.push((parse_id(a, line)?, parse_id(b, line)?, line)),
            _ => {
                return Err(Error::Parse {
                    line,
                    message: format!("expected `u v`, found {content:?}"),
                })
            }
        }
    }

    let labels: Vec<u64> = match declared {
        Some(count) => {
            if let Some(&(a, b, line)) = raw.iter().find(|(a, b, _)| *a.max(b) >= count) {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex {} outside declared universe 0..{count}", a.max(b)),
                });
            }
            (0..count).collect()
        }
        None => raw
            .iter()
            .flat_map(|&(a, b, _)| [a, b])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect(),
    };
    let index: HashMap<u64, Vertex> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();

    // Re-attach line numbers to structural errors.
    let mut seen = HashMap::new();
    for &(a, b, line) in &raw {
        if a == b {
            return Err(Error::Parse {
                line,
                message: format!("loop edge at vertex {a}"),
            });
        }
        if let Some(first) = seen.insert((a.min(b), a.max(b)), line) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate edge {a} {b} (first on line {first})"),
            });
        }
    }
    let graph = Graph::new(
        labels.len(),
        raw.iter().map(|&(a, b, _)| (index[&a], index[&b])),
    )?;
    Ok(LabeledGraph::with_labels(graph, labels))
}

/// Writes `graph` with an `n` header and dense ids, so that re-parsing
/// yields the identical graph.
pub fn write_edge_list(graph: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", graph.n()).unwrap();
    for e in graph.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).unwrap();
    }
    out
}

/// Parses a vertex-list file against the labels of `lg`.
pub fn parse_vertex_list(text: &str, lg: &LabeledGraph) -> Result<VertexSet> {
    let mut lines = content_lines(text);
    let Some((line, content)) = lines.next() else {
        return Err(Error::EmptySet);
    };
    if let Some((extra, _)) = lines.next() {
        return Err(Error::Parse {
            line: extra,
            message: "a vertex list must be a single line".into(),
        });
    }
    let mut set = VertexSet::empty(lg.graph.n());
    for token in content.split_whitespace() {
        let label = parse_id(token, line)?;
        let v = lg.vertex(label).ok_or_else(|| Error::Parse {
            line,
            message: format!("unknown vertex id {label}"),
        })?;
        if !set.insert(v) {
            return Err(Error::Parse {
                line,
                message: format!("vertex id {label} listed twice"),
            });
        }
    }
    Ok(set)
}

pub fn write_vertex_list(set: &VertexSet) -> String {
    let ids: Vec<String> = set.iter().map(|v| v.to_string()).collect();
    format!("{}\n", ids.join(" "))
}
