//! Text formats: edge lists, centrality vectors and weight files.
//!
//! All three formats are line oriented, ignore blank lines, and treat lines
//! starting with `#` as comments. Vertex labels are 1-based.

use std::collections::BTreeMap;

use crate::error::{Error, Result, ValidationError};
use crate::graph::Graph;
use crate::lp::WeightAssignment;
use crate::rational::parse_rational;
use crate::target::CentralityTarget;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let line = line.trim();
        (!line.is_empty() && !line.starts_with('#')).then_some((k + 1, line))
    })
}

fn parse_usize(field: &str, line: usize) -> Result<usize> {
    field.parse().map_err(|_| {
        Error::parse(
            line,
            format!("expected a non-negative integer, got {field:?}"),
        )
    })
}

fn fields<const N: usize>(line_no: usize, line: &str) -> Result<[&str; N]> {
    let parts: Vec<&str> = line.split_whitespace().collect();
    parts.try_into().map_err(|parts: Vec<&str>| {
        Error::parse(line_no, format!("expected {N} fields, got {}", parts.len()))
    })
}

/// Parses an edge-list document: a header `n m` followed by `m` lines `i j`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header line \"n m\""))?;
    let [n, m] = fields::<2>(header_line, header)?;
    let n = parse_usize(n, header_line)?;
    let m = parse_usize(m, header_line)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        let [i, j] = fields::<2>(line_no, line)?;
        edges.push((parse_usize(i, line_no)?, parse_usize(j, line_no)?));
        last_line = line_no;
    }
    if edges.len() != m {
        return Err(Error::parse(
            last_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_labels(n, &edges)
}

/// Parses a centrality vector, one rational (`p/q` or decimal) per line.
pub fn parse_target(text: &str) -> Result<CentralityTarget> {
    let values = content_lines(text)
        .map(|(line_no, line)| {
            parse_rational(line)
                .ok_or_else(|| Error::parse(line_no, format!("not a rational number: {line:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    CentralityTarget::new(values)
}

/// Parses a centrality vector and checks it has one entry per vertex.
pub fn parse_target_for(graph: &Graph, text: &str) -> Result<CentralityTarget> {
    let target = parse_target(text)?;
    target.check_len(graph.n())?;
    Ok(target)
}

/// Parses a weight file with lines `i j p/q`. Every edge of `graph` must
/// appear exactly once; unknown edges are rejected.
pub fn parse_weights(graph: &Graph, text: &str) -> Result<WeightAssignment> {
    let mut weights = BTreeMap::new();
    for (line_no, line) in content_lines(text) {
        let [i, j, w] = fields::<3>(line_no, line)?;
        let (i, j) = (parse_usize(i, line_no)?, parse_usize(j, line_no)?);
        let weight = parse_rational(w)
            .ok_or_else(|| Error::parse(line_no, format!("not a rational number: {w:?}")))?;
        if i == 0 || j == 0 || i > graph.n() || j > graph.n() || !graph.has_edge(i - 1, j - 1) {
            return Err(ValidationError::UnknownEdge(i, j).into());
        }
        let key = (i.min(j) - 1, i.max(j) - 1);
        if weights.insert(key, weight).is_some() {
            return Err(ValidationError::DuplicateEdge(key.0 + 1, key.1 + 1).into());
        }
    }
    if let Some(&(i, j)) = graph.edges().iter().find(|e| !weights.contains_key(e)) {
        return Err(Error::MissingWeight(i + 1, j + 1));
    }
    Ok(WeightAssignment::from_map(weights))
}

/// Renders weights as `i j p/q` lines in edge order.
pub fn format_weights(weights: &WeightAssignment) -> String {
    weights
        .iter()
        .map(|((i, j), w)| format!("{} {} {}\n", i + 1, j + 1, w))
        .collect()
}
