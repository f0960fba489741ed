//! Text formats for graphs, assignments and vertex sets.
//!
//! Edge lists: optional `#` comment lines, a header `n m`, then exactly `m`
//! lines `u v` with `0 <= u, v < n` and `u != v`. Assignments: one
//! `vertex value` pair per line covering every vertex once, or a single
//! `* value` line for a constant map. Vertex sets and orderings: whitespace
//! separated ids. Blank lines are ignored everywhere.

use std::collections::HashSet;

use crate::assignment::{check_value, Assignment, Role};
use crate::error::{Error, ParseErrorKind, Result};
use crate::graph::{Graph, Vertex, VertexSet};

fn fail<T>(line: usize, kind: ParseErrorKind) -> Result<T> {
    Err(Error::Parse { line, kind })
}

/// Numbered lines that carry data.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn line_count(text: &str) -> usize {
    text.lines().count()
}

fn two_fields(line: &str) -> Option<(&str, &str)> {
    let mut it = line.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Some((a, b)),
        _ => None,
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return fail(line_count(text) + 1, ParseErrorKind::BadHeader);
    };
    let (n, declared) = two_fields(header)
        .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
        .map_or_else(|| fail(header_line, ParseErrorKind::BadHeader), Ok)?;

    let mut edges = Vec::with_capacity(declared);
    let mut seen = HashSet::with_capacity(declared);
    for (line, body) in lines {
        if edges.len() == declared {
            return fail(
                line,
                ParseErrorKind::EdgeCountMismatch {
                    declared,
                    found: declared + 1,
                },
            );
        }
        let (u, v) = two_fields(body)
            .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
            .map_or_else(|| fail(line, ParseErrorKind::BadEdgeLine), Ok)?;
        for w in [u, v] {
            if w >= n {
                return fail(line, ParseErrorKind::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return fail(line, ParseErrorKind::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return fail(line, ParseErrorKind::DuplicateEdge(key.0, key.1));
        }
        edges.push(key);
    }
    if edges.len() != declared {
        return fail(
            line_count(text) + 1,
            ParseErrorKind::EdgeCountMismatch {
                declared,
                found: edges.len(),
            },
        );
    }
    Graph::from_edges(n, &edges)
}

pub fn parse_assignment(text: &str, graph: &Graph, role: Role) -> Result<Assignment> {
    let n = graph.n();
    let mut values: Vec<Option<i64>> = vec![None; n];
    let mut constant = false;
    let mut entries = 0usize;
    for (line, body) in data_lines(text) {
        let (key, value) = two_fields(body)
            .and_then(|(a, b)| Some((a, b.parse::<i64>().ok()?)))
            .map_or_else(|| fail(line, ParseErrorKind::BadAssignmentLine), Ok)?;
        entries += 1;
        if key == "*" {
            if entries > 1 {
                return fail(line, ParseErrorKind::MixedConstant);
            }
            for (v, slot) in values.iter_mut().enumerate() {
                check_value(graph, role, v, value).map_err(|e| Error::Parse { line, kind: e.into() })?;
                *slot = Some(value);
            }
            constant = true;
            continue;
        }
        if constant {
            return fail(line, ParseErrorKind::MixedConstant);
        }
        let vertex: Vertex = key
            .parse()
            .map_or_else(|_| fail(line, ParseErrorKind::BadVertexToken(key.to_string())), Ok)?;
        if vertex >= n {
            return fail(line, ParseErrorKind::VertexOutOfRange { vertex, n });
        }
        if values[vertex].is_some() {
            return fail(line, ParseErrorKind::DuplicateVertex(vertex));
        }
        check_value(graph, role, vertex, value).map_err(|e| Error::Parse { line, kind: e.into() })?;
        values[vertex] = Some(value);
    }
    if let Some(missing) = values.iter().position(Option::is_none) {
        return fail(line_count(text) + 1, ParseErrorKind::MissingVertex(missing));
    }
    Ok(Assignment::from_raw(values.into_iter().flatten().collect(), role))
}

/// Whitespace-separated ids in file order. Duplicates are kept so that
/// callers can decide whether they are an error.
pub fn parse_id_list(text: &str, n: usize) -> Result<Vec<Vertex>> {
    let mut ids = Vec::new();
    for (line, body) in data_lines(text) {
        for token in body.split_whitespace() {
            ids.push(parse_id(line, token, n)?);
        }
    }
    Ok(ids)
}

pub fn parse_vertex_set(text: &str, graph: &Graph) -> Result<VertexSet> {
    let mut set = VertexSet::empty(graph.n());
    for (line, body) in data_lines(text) {
        for token in body.split_whitespace() {
            let v = parse_id(line, token, graph.n())?;
            if !set.insert(v) {
                return fail(line, ParseErrorKind::DuplicateVertex(v));
            }
        }
    }
    Ok(set)
}

fn parse_id(line: usize, token: &str, n: usize) -> Result<Vertex> {
    let v: Vertex = token
        .parse()
        .map_or_else(|_| fail(line, ParseErrorKind::BadVertexToken(token.to_string())), Ok)?;
    if v >= n {
        return fail(line, ParseErrorKind::VertexOutOfRange { vertex: v, n });
    }
    Ok(v)
}

/// Space-separated ids on one line, `(none)` for an empty list.
pub fn format_ids<I: IntoIterator<Item = Vertex>>(ids: I) -> String {
    let parts: Vec<String> = ids.into_iter().map(|v| v.to_string()).collect();
    if parts.is_empty() {
        "(none)".to_string()
    } else {
        parts.join(" ")
    }
}
