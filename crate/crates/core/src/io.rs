//! Text and JSON formats for complexes and graphs.
//!
//! Text complexes start with `complex n=<N>` followed by one facet per line
//! as space-separated vertex ids. Text graphs start with `graph n=<N>`
//! followed by one `u v` edge per line. `#` starts a comment. A complex file
//! with no facet lines is `{∅}`.
//!
//! JSON forms are `{"n": N, "facets": [[...], ...]}` and
//! `{"n": N, "edges": [[u, v], ...]}`. Complexes are exported on a dense
//! ground set `0..n`, relabeling in order if necessary.

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{input, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&SimplicialComplex> for ComplexJson {
    fn from(cx: &SimplicialComplex) -> Self {
        let (dense, _) = cx.relabel_dense();
        ComplexJson {
            n: dense.ground_size(),
            facets: dense.facets().iter().map(|f| f.to_vec()).collect(),
        }
    }
}

impl TryFrom<ComplexJson> for SimplicialComplex {
    type Error = crate::Error;
    fn try_from(j: ComplexJson) -> Result<Self> {
        SimplicialComplex::from_facets(j.n, j.facets)
    }
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = crate::Error;
    fn try_from(j: GraphJson) -> Result<Self> {
        Graph::from_edges(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

/// Either kind of input file.
#[derive(Clone, Debug)]
pub enum Input {
    Complex(SimplicialComplex),
    Graph(Graph),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

fn parse_header(line: &str, kind: &str) -> Result<usize> {
    let rest = line
        .strip_prefix(kind)
        .map(str::trim_start)
        .and_then(|r| r.strip_prefix("n="))
        .ok_or_else(|| input(format!("expected header `{kind} n=<N>`, found `{line}`")))?;
    rest.trim()
        .parse()
        .map_err(|_| input(format!("bad vertex count in header `{line}`")))
}

fn parse_ids(lineno: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse()
                .map_err(|_| input(format!("line {lineno}: `{tok}` is not a vertex id")))
        })
        .collect()
}

pub fn parse_complex_text(text: &str) -> Result<SimplicialComplex> {
    let mut lines = content_lines(text);
    let (_, header) = lines.next().ok_or_else(|| input("empty complex file"))?;
    let n = parse_header(header, "complex")?;
    let facets = lines
        .map(|(k, l)| parse_ids(k, l))
        .collect::<Result<Vec<_>>>()?;
    SimplicialComplex::from_facets(n, facets)
}

pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (_, header) = lines.next().ok_or_else(|| input("empty graph file"))?;
    let n = parse_header(header, "graph")?;
    let mut edges = Vec::new();
    for (k, line) in lines {
        match parse_ids(k, line)?.as_slice() {
            &[u, v] => edges.push((u, v)),
            _ => return Err(input(format!("line {k}: an edge needs exactly two vertex ids"))),
        }
    }
    Graph::from_edges(n, edges)
}

pub fn complex_to_text(cx: &SimplicialComplex) -> String {
    let j = ComplexJson::from(cx);
    let mut out = format!("complex n={}\n", j.n);
    for facet in j.facets.iter().filter(|f| !f.is_empty()) {
        let ids: Vec<String> = facet.iter().map(usize::to_string).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("graph n={}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn complex_to_json(cx: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexJson::from(cx)).expect("serializable")
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("serializable")
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| input(format!("bad JSON: {e}")))
}

/// Parses a complex in either format.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    if text.trim_start().starts_with('{') {
        parse_json::<ComplexJson>(text)?.try_into()
    } else {
        parse_complex_text(text)
    }
}

/// Parses a graph in either format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_json::<GraphJson>(text)?.try_into()
    } else {
        parse_graph_text(text)
    }
}

/// Parses either kind of file, deciding by header or JSON keys.
pub fn parse_any(text: &str) -> Result<Input> {
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value = parse_json(text)?;
        if value.get("edges").is_some() {
            return Ok(Input::Graph(parse_graph(text)?));
        }
        return Ok(Input::Complex(parse_complex(text)?));
    }
    match content_lines(text).next() {
        Some((_, l)) if l.starts_with("graph") => Ok(Input::Graph(parse_graph_text(text)?)),
        _ => Ok(Input::Complex(parse_complex_text(text)?)),
    }
}
