//! Graph files. Edge lists: first line is the vertex count, then one
//! `u v` pair per line, 0-based, `#` starts a comment. JSON:
//! `{"n": 5, "edges": [[0,1], ...], "family": "cycle:5"}`.
//!
//! Wherever a graph is expected the CLI also accepts a family spec such
//! as `cycle:7`, `cayley:10:2`, `johnson3:6`, `complete:4`, `path:5`,
//! `empty:3` or `petersen`.

use std::path::Path;

use relfrac_core::graph::{self, Graph};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

pub fn parse_edge_list(text: &str) -> Result<Graph, CliError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| CliError::parse(line, format!("expected a non-negative integer, found {s:?}")));
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(CliError::parse(line, "first line must hold only the vertex count"));
                }
                n = Some(num(fields[0])?);
            }
            Some(n) => {
                if fields.len() != 2 {
                    return Err(CliError::parse(line, format!("expected \"u v\", found {body:?}")));
                }
                let (u, v) = (num(fields[0])?, num(fields[1])?);
                if u >= n || v >= n {
                    return Err(CliError::parse(line, format!("vertex out of range in edge ({u}, {v}); n = {n}")));
                }
                if u == v {
                    return Err(CliError::parse(line, format!("self-loop at {u}")));
                }
                edges.push((u, v));
            }
        }
    }
    let n = n.ok_or_else(|| CliError::parse(1, "missing vertex count"))?;
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    if let Some(f) = g.family() {
        out = format!("# {}\n{out}", f.describe());
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<String>,
}

/// Also accepts a `make` report, reading the graph from its `result`.
pub fn parse_json_graph(text: &str) -> Result<Graph, CliError> {
    let mut v: Value = serde_json::from_str(text).map_err(|e| CliError::parse(e.line(), e.to_string()))?;
    if v.get("command").is_some() {
        v = v.get_mut("result").map(Value::take).unwrap_or(Value::Null);
    }
    let gj: GraphJson = serde_json::from_value(v).map_err(|e| CliError::Usage(format!("not a graph: {e}")))?;
    for (i, [u, v]) in gj.edges.iter().enumerate() {
        if *u >= gj.n || *v >= gj.n || u == v {
            return Err(CliError::Usage(format!("edge #{i} ({u}, {v}) is invalid for n = {}", gj.n)));
        }
    }
    let edges: Vec<(usize, usize)> = gj.edges.iter().map(|e| (e[0], e[1])).collect();
    let g = Graph::from_edges(gj.n, &edges)?;
    // keep the family tag only when it really describes the graph
    if let Some(Ok(fam)) = gj.family.as_deref().and_then(from_spec) {
        if fam == g {
            return Ok(fam);
        }
    }
    Ok(g)
}

pub fn to_json_value(g: &Graph) -> Value {
    let gj = GraphJson {
        n: g.n(),
        edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        family: g.family().map(|f| f.describe()),
    };
    serde_json::to_value(gj).expect("graph serialises")
}

/// Builds a graph from a family spec; `None` when `spec` is not one.
pub fn from_spec(spec: &str) -> Option<Result<Graph, CliError>> {
    let parts: Vec<&str> = spec.split(':').collect();
    let nums: Option<Vec<usize>> = parts[1..].iter().map(|p| p.parse().ok()).collect();
    let nums = nums?;
    let g = match (parts[0], nums.as_slice()) {
        ("cycle", [n]) => graph::make_cycle(*n),
        ("cayley", [n, k]) => graph::make_cayley_cyclic(*n, *k),
        ("johnson3", [n]) => graph::make_johnson3(*n),
        ("complete", [n]) => Ok(graph::make_complete(*n)),
        ("path", [n]) => Ok(graph::make_path(*n)),
        ("empty", [n]) => Ok(Graph::empty(*n)),
        ("petersen", []) => Ok(graph::make_petersen()),
        _ => return None,
    };
    Some(g.map_err(CliError::from))
}

pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    if text.trim_start().starts_with('{') {
        parse_json_graph(text)
    } else {
        parse_edge_list(text)
    }
}

/// A family spec, or else a path to an edge-list or JSON file.
pub fn load_graph(arg: &str) -> Result<Graph, CliError> {
    if let Some(g) = from_spec(arg) {
        return g;
    }
    let text = std::fs::read_to_string(Path::new(arg)).map_err(|e| CliError::Io { path: arg.to_string(), message: e.to_string() })?;
    parse_graph(&text).map_err(|e| e.in_file(arg))
}
