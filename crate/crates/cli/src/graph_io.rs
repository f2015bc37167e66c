//! Graph documents and built-in graph names.

use std::path::Path;

use covreg_core::families::{self, seeded_rng};
use covreg_core::{Error, Hypergraph, Vertex};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    #[serde(default)]
    pub name: String,
    pub vertices: Vec<u64>,
    pub edges: Vec<Vec<u64>>,
}

impl GraphDocument {
    pub fn from_graph(name: impl Into<String>, g: &Hypergraph) -> GraphDocument {
        GraphDocument {
            name: name.into(),
            vertices: g.vertices().iter().map(|&v| v as u64).collect(),
            edges: g
                .edges()
                .into_iter()
                .map(|e| e.into_iter().map(u64::from).collect())
                .collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Hypergraph> {
        let label = |v: u64, at: String| -> Result<Vertex> {
            match Vertex::try_from(v) {
                Ok(x) if x > 0 => Ok(x),
                _ => Err(CliError::Graph { location: at, source: Error::InvalidVertex(v) }),
            }
        };
        let vertices = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| label(v, format!("vertices[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        let mut edges = Vec::with_capacity(self.edges.len());
        for (i, e) in self.edges.iter().enumerate() {
            let edge = e
                .iter()
                .enumerate()
                .map(|(j, &v)| label(v, format!("edges[{i}][{j}]")))
                .collect::<Result<Vec<_>>>()?;
            edges.push(edge);
        }
        Hypergraph::new(vertices, edges).map_err(|source| CliError::Graph {
            location: locate(&source),
            source,
        })
    }
}

fn locate(e: &Error) -> String {
    match e {
        Error::EmptyEdge { edge } | Error::UnknownVertex { edge, .. } | Error::NotAGraph { edge, .. } => {
            format!("edges[{edge}]")
        }
        Error::DuplicateEdge { second, .. } => format!("edges[{second}]"),
        Error::NestedEdges { outer, .. } => format!("edges[{outer}]"),
        _ => "graph".to_string(),
    }
}

/// Parses a JSON graph document.
pub fn parse_graph(json: &str) -> Result<(GraphDocument, Hypergraph)> {
    let doc: GraphDocument = serde_json::from_str(json).map_err(|e| {
        CliError::input(format!("line {} column {}: {e}", e.line(), e.column()))
    })?;
    let g = doc.to_graph()?;
    Ok((doc, g))
}

fn numbers(params: &[&str], want: usize, name: &str) -> Result<Vec<u64>> {
    if params.len() != want {
        return Err(CliError::input(format!("{name} takes {want} parameter(s), got {}", params.len())));
    }
    params
        .iter()
        .map(|p| p.parse::<u64>().map_err(|_| CliError::input(format!("{name}: bad parameter {p:?}"))))
        .collect()
}

/// Built-in families: `figure1`, `figure2`, `cycle:n`, `path:n`, `star:k`,
/// `complete:n`, `random-tree:n:seed`, `random-unicyclic:n:cycle:seed`.
pub fn builtin(spec: &str) -> Result<Option<Hypergraph>> {
    let mut parts = spec.split(':');
    let name = parts.next().unwrap_or_default();
    let params: Vec<&str> = parts.collect();
    let g = match name {
        "figure1" => {
            numbers(&params, 0, name)?;
            families::figure1()
        }
        "figure2" => {
            numbers(&params, 0, name)?;
            families::figure2()
        }
        "cycle" => {
            let n = numbers(&params, 1, name)?[0] as usize;
            if !(3..=64).contains(&n) {
                return Err(CliError::input("cycle needs 3..=64 vertices"));
            }
            families::cycle(n)
        }
        "path" | "complete" => {
            let n = numbers(&params, 1, name)?[0] as usize;
            if !(2..=64).contains(&n) {
                return Err(CliError::input(format!("{name} needs 2..=64 vertices")));
            }
            if name == "path" {
                families::path(n)
            } else {
                families::complete(n)
            }
        }
        "star" => {
            let k = numbers(&params, 1, name)?[0] as usize;
            if !(1..=63).contains(&k) {
                return Err(CliError::input("star needs 1..=63 leaves"));
            }
            families::star(k)
        }
        "random-tree" => {
            let p = numbers(&params, 2, name)?;
            if !(2..=64).contains(&p[0]) {
                return Err(CliError::input("random-tree needs 2..=64 vertices"));
            }
            families::random_tree(p[0] as usize, &mut seeded_rng(p[1]))
        }
        "random-unicyclic" => {
            let p = numbers(&params, 3, name)?;
            if p[1] < 3 || p[1] > p[0] || p[0] > 64 {
                return Err(CliError::input("random-unicyclic needs 3 <= cycle <= n <= 64"));
            }
            families::random_unicyclic(p[0] as usize, p[1] as usize, &mut seeded_rng(p[2]))
        }
        _ => return Ok(None),
    };
    Ok(Some(g))
}

/// A built-in name, `-` for stdin, or a path to a JSON document.
pub fn load_graph(spec: &str) -> Result<(String, Hypergraph)> {
    if let Some(g) = builtin(spec)? {
        return Ok((spec.to_string(), g));
    }
    let text = if spec == "-" {
        std::io::read_to_string(std::io::stdin())
            .map_err(|source| CliError::Io { path: "stdin".into(), source })?
    } else {
        std::fs::read_to_string(Path::new(spec))
            .map_err(|source| CliError::Io { path: spec.into(), source })?
    };
    let (doc, g) = parse_graph(&text)?;
    let name = if doc.name.is_empty() { spec.to_string() } else { doc.name };
    Ok((name, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documents() {
        let (_, g) = parse_graph(r#"{"name":"k2","vertices":[1,2],"edges":[[1,2]]}"#).unwrap();
        assert_eq!(g, families::path(2));
        let err = parse_graph(r#"{"vertices":[1,2,3],"edges":[[1,2],[1,2,3]]}"#).unwrap_err();
        assert!(err.to_string().starts_with("edges[1]"), "{err}");
        let err = parse_graph(r#"{"vertices":[1,2],"edges":[[1,5]]}"#).unwrap_err();
        assert!(err.to_string().starts_with("edges[0]"), "{err}");
        let err = parse_graph(r#"{"vertices":[0,1],"edges":[[0,1]]}"#).unwrap_err();
        assert!(err.to_string().starts_with("vertices[0]"), "{err}");
        assert!(parse_graph(r#"{"vertices":[1],"edges":[[1]],"extra":1}"#).is_err());
        assert!(parse_graph("{").unwrap_err().to_string().starts_with("line 1"));
    }

    #[test]
    fn round_trip() {
        for g in [families::figure1(), families::figure2(), families::cycle(6)] {
            let doc = GraphDocument::from_graph("x", &g);
            let json = serde_json::to_string(&doc).unwrap();
            let (back, h) = parse_graph(&json).unwrap();
            assert_eq!(back, doc);
            assert_eq!(h, g);
        }
    }

    #[test]
    fn builtins() {
        assert_eq!(builtin("figure1").unwrap().unwrap().num_vertices(), 9);
        assert_eq!(builtin("cycle:6").unwrap().unwrap(), families::cycle(6));
        assert_eq!(
            builtin("random-unicyclic:9:4:3").unwrap(),
            builtin("random-unicyclic:9:4:3").unwrap()
        );
        assert!(builtin("cycle:2").is_err());
        assert!(builtin("cycle").is_err());
        assert!(builtin("no-such-file.json").unwrap().is_none());
    }
}
