//! Graph file parsing and rendering.
//!
//! Text format: first line d, then one "i j" edge per line, 1-indexed,
//! sorted. JSON alternative: {"d": int, "edges": [[i, j], ...],
//! "lambda": [ints]} with lambda optional.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{Graph, WeightVector};

#[derive(Serialize, Deserialize)]
struct GraphJson {
    d: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<Vec<u64>>,
}

pub fn parse_graph_text(input: &str) -> Result<Graph> {
    let mut lines = input.lines().filter(|l| !l.trim().is_empty());
    let d: usize = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty graph file".into()))?
        .trim()
        .parse()
        .map_err(|e| Error::InvalidInput(format!("bad vertex count: {e}")))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let a: usize = it
            .next()
            .ok_or_else(|| Error::InvalidInput(format!("bad edge line {line:?}")))?
            .parse()
            .map_err(|e| Error::InvalidInput(format!("bad edge line {line:?}: {e}")))?;
        let b: usize = it
            .next()
            .ok_or_else(|| Error::InvalidInput(format!("bad edge line {line:?}")))?
            .parse()
            .map_err(|e| Error::InvalidInput(format!("bad edge line {line:?}: {e}")))?;
        if it.next().is_some() {
            return Err(Error::InvalidInput(format!("bad edge line {line:?}")));
        }
        edges.push((a, b));
    }
    build_graph(d, edges)
}

fn build_graph(d: usize, one_indexed: Vec<(usize, usize)>) -> Result<Graph> {
    if d == 0 {
        return Err(Error::InvalidInput(
            "graph needs at least one vertex".into(),
        ));
    }
    let mut edges = Vec::with_capacity(one_indexed.len());
    for (a, b) in one_indexed {
        if a == 0 || b == 0 || a > d || b > d {
            return Err(Error::InvalidInput(format!(
                "edge ({a}, {b}) out of range 1..={d}"
            )));
        }
        if a == b {
            return Err(Error::InvalidInput(format!("loop at vertex {a}")));
        }
        edges.push((a - 1, b - 1));
    }
    Ok(Graph::new(d, edges))
}

pub fn parse_graph_json(input: &str) -> Result<(Graph, Option<WeightVector>)> {
    let raw: GraphJson = serde_json::from_str(input)
        .map_err(|e| Error::InvalidInput(format!("bad JSON graph: {e}")))?;
    let graph = build_graph(raw.d, raw.edges)?;
    let lambda = match raw.lambda {
        None => None,
        Some(weights) => {
            if weights.len() != graph.vertex_count() {
                return Err(Error::InvalidInput(format!(
                    "lambda has {} entries for {} vertices",
                    weights.len(),
                    graph.vertex_count()
                )));
            }
            Some(WeightVector::new(weights)?)
        }
    };
    Ok((graph, lambda))
}

/// Parses either format, sniffing JSON by a leading brace.
pub fn parse_graph(input: &str) -> Result<(Graph, Option<WeightVector>)> {
    if input.trim_start().starts_with('{') {
        parse_graph_json(input)
    } else {
        Ok((parse_graph_text(input)?, None))
    }
}

pub fn load_graph_file(path: &str) -> Result<(Graph, Option<WeightVector>)> {
    let contents = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
    parse_graph(&contents)
}

pub fn parse_lambda_csv(input: &str, d: usize) -> Result<WeightVector> {
    let mut weights = Vec::new();
    for part in input.split(',') {
        weights.push(
            part.trim()
                .parse::<u64>()
                .map_err(|e| Error::InvalidInput(format!("bad weight {part:?}: {e}")))?,
        );
    }
    if weights.len() != d {
        return Err(Error::InvalidInput(format!(
            "lambda has {} entries for {d} vertices",
            weights.len()
        )));
    }
    WeightVector::new(weights)
}

pub fn lambda_to_csv(lambda: &WeightVector) -> String {
    lambda
        .weights()
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn graph_to_json(graph: &Graph, lambda: Option<&WeightVector>) -> serde_json::Value {
    let raw = GraphJson {
        d: graph.vertex_count(),
        edges: graph.edges().iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
        lambda: lambda.map(|l| l.weights().to_vec()),
    };
    serde_json::to_value(raw).expect("graph serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let g = Graph::new(4, [(0, 1), (1, 2), (1, 3)]);
        let text = g.to_text();
        assert_eq!(text, "4\n1 2\n2 3\n2 4\n");
        let back = parse_graph_text(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn json_round_trip_with_lambda() {
        let g = Graph::path(3);
        let lam = WeightVector::new(vec![2, 1, 1]).unwrap();
        let json = graph_to_json(&g, Some(&lam)).to_string();
        let (back, back_lam) = parse_graph_json(&json).unwrap();
        assert_eq!(back, g);
        assert_eq!(back_lam, Some(lam));
    }

    #[test]
    fn format_sniffing() {
        assert!(parse_graph("2\n1 2\n").is_ok());
        assert!(parse_graph(r#"{"d": 2, "edges": [[1, 2]]}"#).is_ok());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(parse_graph_text("").is_err());
        assert!(parse_graph_text("2\n1 3\n").is_err());
        assert!(parse_graph_text("2\n1 1\n").is_err());
        assert!(parse_graph_text("x\n").is_err());
        assert!(parse_lambda_csv("1,2", 3).is_err());
        assert!(parse_lambda_csv("1,0,2", 3).is_err());
        assert!(parse_graph_json(r#"{"d": 2, "edges": [[1, 2]], "lambda": [1]}"#).is_err());
    }

    #[test]
    fn lambda_csv_round_trip() {
        let lam = WeightVector::new(vec![3, 1, 2]).unwrap();
        assert_eq!(parse_lambda_csv(&lambda_to_csv(&lam), 3).unwrap(), lam);
    }
}
