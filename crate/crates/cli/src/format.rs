//! Input file formats.
//!
//! Graph files are line-oriented text, 0-based:
//!
//! ```text
//! c optional comment
//! p digraph <num_vertices> <num_edges> <s> <t>
//! e <u> <v>
//! ```
//!
//! or `p bipartite <left> <right>` followed by `e <left> <right>` lines.
//! Repeated edge lines are parallel edges. System files are JSON:
//! `{"A": [[...], ...], "b": [...]}`.

use std::path::Path;

use lexsect::{BipartiteInstance, DigraphInstance, TuSystem};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("missing problem line (`p digraph ...` or `p bipartite ...`)")]
    MissingHeader,
    #[error("expected a {expected} graph, found a {found} graph")]
    WrongKind { expected: &'static str, found: &'static str },
    #[error("header declares {declared} edges, file has {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("invalid system file: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    System(#[from] lexsect::SystemError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFile {
    Digraph { vertices: usize, edges: Vec<(usize, usize)>, source: usize, sink: usize },
    Bipartite { left: usize, right: usize, edges: Vec<(usize, usize)> },
}

impl GraphFile {
    fn kind(&self) -> &'static str {
        match self {
            GraphFile::Digraph { .. } => "digraph",
            GraphFile::Bipartite { .. } => "bipartite",
        }
    }

    pub fn into_digraph(self, n: usize) -> Result<DigraphInstance, ParseError> {
        match self {
            GraphFile::Digraph { vertices, edges, source, sink } => {
                Ok(DigraphInstance { vertices, edges, source, sink, n })
            }
            other => Err(ParseError::WrongKind { expected: "digraph", found: other.kind() }),
        }
    }

    pub fn into_bipartite(self, n: usize) -> Result<BipartiteInstance, ParseError> {
        match self {
            GraphFile::Bipartite { left, right, edges } => Ok(BipartiteInstance { left, right, edges, n }),
            other => Err(ParseError::WrongKind { expected: "bipartite", found: other.kind() }),
        }
    }
}

fn read(path: &Path) -> Result<String, ParseError> {
    std::fs::read_to_string(path).map_err(|source| ParseError::Io { path: path.display().to_string(), source })
}

fn numbers(fields: &[&str], count: usize, line: usize) -> Result<Vec<usize>, ParseError> {
    if fields.len() != count {
        return Err(ParseError::Line { line, message: format!("expected {count} numbers, found {}", fields.len()) });
    }
    fields
        .iter()
        .map(|f| {
            f.parse::<usize>().map_err(|_| ParseError::Line { line, message: format!("`{f}` is not a vertex index") })
        })
        .collect()
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let mut graph: Option<GraphFile> = None;
    let mut declared_edges = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        match fields.first().copied() {
            None | Some("c") => {}
            Some("p") => {
                if graph.is_some() {
                    return Err(ParseError::Line { line, message: "duplicate problem line".into() });
                }
                match fields.get(1).copied() {
                    Some("digraph") => {
                        let v = numbers(&fields[2..], 4, line)?;
                        declared_edges = v[1];
                        graph = Some(GraphFile::Digraph {
                            vertices: v[0],
                            edges: Vec::with_capacity(v[1]),
                            source: v[2],
                            sink: v[3],
                        });
                    }
                    Some("bipartite") => {
                        let v = numbers(&fields[2..], 2, line)?;
                        graph = Some(GraphFile::Bipartite { left: v[0], right: v[1], edges: Vec::new() });
                    }
                    other => {
                        return Err(ParseError::Line {
                            line,
                            message: format!("unknown problem type `{}`", other.unwrap_or("")),
                        })
                    }
                }
            }
            Some("e") => {
                let v = numbers(&fields[1..], 2, line)?;
                match graph.as_mut() {
                    None => return Err(ParseError::MissingHeader),
                    Some(GraphFile::Digraph { edges, .. }) | Some(GraphFile::Bipartite { edges, .. }) => {
                        edges.push((v[0], v[1]))
                    }
                }
            }
            Some(other) => {
                return Err(ParseError::Line { line, message: format!("unknown line type `{other}`") })
            }
        }
    }
    let graph = graph.ok_or(ParseError::MissingHeader)?;
    if let GraphFile::Digraph { edges, .. } = &graph {
        if edges.len() != declared_edges {
            return Err(ParseError::EdgeCount { declared: declared_edges, found: edges.len() });
        }
    }
    Ok(graph)
}

pub fn read_graph(path: &Path) -> Result<GraphFile, ParseError> {
    parse_graph(&read(path)?)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFile {
    #[serde(rename = "A")]
    a: Vec<Vec<i64>>,
    b: Vec<i64>,
}

/// Parses the JSON system and rejects entries outside {-1, 0, 1}.
pub fn parse_system(text: &str) -> Result<TuSystem, ParseError> {
    let file: SystemFile = serde_json::from_str(text)?;
    Ok(TuSystem::checked(file.a, file.b)?)
}

pub fn read_system(path: &Path) -> Result<TuSystem, ParseError> {
    parse_system(&read(path)?)
}
