//! Finite simple graphs, their independence complexes, and the whisker,
//! suspension and multipartite constructions.

use std::fmt;

use crate::complex::SimplicialComplex;
use crate::error::{domain, input, Error, Result};
use crate::face::{low_bits, Face, Vertex, MAX_VERTICES};

/// A finite simple graph on `0..n` with bit-mask adjacency rows.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<u64>,
    parts: Option<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.adj.hash(state);
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(input(format!(
                "graph on {n} vertices exceeds the supported maximum {MAX_VERTICES}"
            )));
        }
        Ok(Graph {
            adj: vec![0; n],
            parts: None,
        })
    }

    pub fn from_edges<I: IntoIterator<Item = (Vertex, Vertex)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(input(format!("edge {{{u},{v}}} outside vertex range 0..{n}")));
        }
        if u == v {
            return Err(input(format!("loop at vertex {u}")));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> Face {
        Face::from_mask(low_bits(self.n()))
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.n())
            .flat_map(|u| {
                Face::from_mask(self.adj[u] & !low_bits(u + 1))
                    .iter()
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> Face {
        Face::from_mask(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> Face {
        self.neighbors(v).with(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Part index of each vertex, when the graph was built as a multipartite graph.
    pub fn parts(&self) -> Option<&[usize]> {
        self.parts.as_deref()
    }

    pub fn is_independent(&self, set: Face) -> bool {
        set.iter().all(|v| self.adj[v] & set.mask() == 0)
    }

    pub fn is_vertex_cover(&self, set: Face) -> bool {
        self.is_independent(self.vertices().difference(set))
    }

    pub fn isolated_vertices(&self) -> Face {
        Face::from_mask(
            (0..self.n())
                .filter(|&v| self.adj[v] == 0)
                .fold(0u64, |m, v| m | 1 << v),
        )
    }

    /// `G|_S`, relabeled onto `0..|S|` in ascending order; also returns the
    /// old id of each new vertex.
    pub fn induced_subgraph(&self, set: Face) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = set.iter().filter(|&v| v < self.n()).collect();
        let mut g = Graph {
            adj: vec![0; old.len()],
            parts: None,
        };
        for (i, &a) in old.iter().enumerate() {
            for (j, &b) in old.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        (g, old)
    }

    /// Maximal independent sets in lexicographic order.
    pub fn maximal_independent_sets(&self) -> Vec<Face> {
        let mut out = Vec::new();
        self.bron_kerbosch(0, self.vertices().mask(), 0, &mut out);
        out.sort();
        out
    }

    // maximal cliques of the complement, with pivoting
    fn bron_kerbosch(&self, chosen: u64, candidates: u64, excluded: u64, out: &mut Vec<Face>) {
        if candidates == 0 && excluded == 0 {
            out.push(Face::from_mask(chosen));
            return;
        }
        let all = self.vertices().mask();
        let non_nbr = |v: usize| all & !self.adj[v] & !(1u64 << v);
        let pivot = Face::from_mask(candidates | excluded)
            .iter()
            .max_by_key(|&u| (candidates & non_nbr(u)).count_ones())
            .expect("nonempty");
        let mut candidates = candidates;
        let mut excluded = excluded;
        for v in Face::from_mask(candidates & !non_nbr(pivot)).iter() {
            let nv = non_nbr(v);
            self.bron_kerbosch(chosen | 1 << v, candidates & nv, excluded & nv, out);
            candidates &= !(1 << v);
            excluded |= 1 << v;
        }
    }

    /// Lexicographically first independent set of size `k`.
    pub fn first_independent_set(&self, k: usize) -> Option<Face> {
        fn go(g: &Graph, start: usize, k: usize, cur: Face) -> Option<Face> {
            if cur.len() == k {
                return Some(cur);
            }
            for v in start..g.n() {
                if g.adj[v] & cur.mask() == 0 {
                    if let Some(found) = go(g, v + 1, k, cur.with(v)) {
                        return Some(found);
                    }
                }
            }
            None
        }
        go(self, 0, k, Face::EMPTY)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// `Δ(G)`: the complex of independent sets, on the ground set `V(G)`.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::new_unchecked(g.vertices(), g.maximal_independent_sets())
}

/// `W(G)`: vertex `i` gets a pendant neighbour `n + i`.
pub fn whisker(g: &Graph) -> Result<Graph> {
    let n = g.n();
    let mut w = Graph::empty(2 * n)?;
    for (u, v) in g.edges() {
        w.add_edge(u, v)?;
    }
    for i in 0..n {
        w.add_edge(i, n + i)?;
    }
    Ok(w)
}

/// `G^S`: a new vertex `n` adjacent to every vertex outside the independent set `S`.
pub fn s_suspension(g: &Graph, s: Face) -> Result<Graph> {
    if !s.is_subset(g.vertices()) {
        return Err(input(format!("{s} is not a vertex set of the graph")));
    }
    if !g.is_independent(s) {
        return Err(domain(format!("{s} is not an independent set")));
    }
    let n = g.n();
    let mut out = Graph::empty(n + 1)?;
    out.adj[..n].copy_from_slice(&g.adj);
    for v in g.vertices().difference(s).iter() {
        out.add_edge(v, n)?;
    }
    Ok(out)
}

/// `K_{r_1,...,r_t}` with parts laid out consecutively; part labels retained.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(domain("complete multipartite graph needs at least one part"));
    }
    if parts.contains(&0) {
        return Err(domain("every part must have at least one vertex"));
    }
    let n: usize = parts.iter().sum();
    let mut g = Graph::empty(n)?;
    let labels: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| std::iter::repeat_n(i, r))
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            if labels[u] != labels[v] {
                g.add_edge(u, v)?;
            }
        }
    }
    g.parts = Some(labels);
    Ok(g)
}

/// Size of a largest induced matching, by exact branch and bound.
pub fn induced_matching_number(g: &Graph) -> usize {
    let mut best = 0;
    branch_induced_matching(g, g.vertices().mask(), 0, &mut best);
    best
}

fn branch_induced_matching(g: &Graph, avail: u64, size: usize, best: &mut usize) {
    // vertices with no available neighbour can never be matched
    let live = Face::from_mask(avail)
        .iter()
        .filter(|&v| g.adj[v] & avail != 0)
        .fold(0u64, |m, v| m | 1 << v);
    *best = (*best).max(size);
    if size + live.count_ones() as usize / 2 <= *best {
        return;
    }
    let u = Face::from_mask(live)
        .iter()
        .max_by_key(|&v| (g.adj[v] & live).count_ones())
        .expect("live vertices remain");
    for v in Face::from_mask(g.adj[u] & live).iter() {
        let blocked = g.closed_neighborhood(u).union(g.closed_neighborhood(v)).mask();
        branch_induced_matching(g, live & !blocked, size + 1, best);
    }
    branch_induced_matching(g, live & !(1 << u), size, best);
}

/// Inclusion-minimal vertex covers in lexicographic order; their number is `υ(G)`.
pub fn minimal_vertex_covers(g: &Graph) -> Vec<Face> {
    let all = g.vertices();
    let mut covers: Vec<Face> = g
        .maximal_independent_sets()
        .into_iter()
        .map(|s| all.difference(s))
        .collect();
    covers.sort();
    covers
}

/// Which part of the pairing condition on `(X, Y)` failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConditionClause {
    /// `V = X ⊔ Y` with `|X| = |Y| = d` and `|V| = 2d`.
    Partition,
    /// `X` is a minimal vertex cover.
    MinimalVertexCover,
    /// `Y` is a maximal independent set.
    MaximalIndependentSet,
    /// Every `{x_i, y_i}` is an edge.
    MatchingEdges,
}

impl fmt::Display for ConditionClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConditionClause::Partition => "X and Y must partition V into halves",
            ConditionClause::MinimalVertexCover => "X must be a minimal vertex cover",
            ConditionClause::MaximalIndependentSet => "Y must be a maximal independent set",
            ConditionClause::MatchingEdges => "every {x_i, y_i} must be an edge",
        })
    }
}

fn violated(clause: ConditionClause, detail: String) -> Error {
    Error::Domain(format!("{clause}: {detail}"))
}

/// Checks the pairing condition and returns which clause fails first.
pub fn check_pairing(g: &Graph, xs: &[Vertex], ys: &[Vertex]) -> Result<(), (ConditionClause, String)> {
    use ConditionClause::*;
    let d = xs.len();
    let x = Face::from_vertices(xs.iter().copied()).map_err(|e| (Partition, e.to_string()))?;
    let y = Face::from_vertices(ys.iter().copied()).map_err(|e| (Partition, e.to_string()))?;
    if ys.len() != d || g.n() != 2 * d || x.len() != d || y.len() != d {
        return Err((
            Partition,
            format!("|X| = {}, |Y| = {}, |V| = {}", xs.len(), ys.len(), g.n()),
        ));
    }
    if !x.intersection(y).is_empty() || x.union(y) != g.vertices() {
        return Err((Partition, format!("X = {x}, Y = {y} do not partition V")));
    }
    if !g.is_vertex_cover(x) {
        return Err((MinimalVertexCover, format!("{x} misses an edge")));
    }
    if let Some(v) = x.iter().find(|&v| g.is_vertex_cover(x.without(v))) {
        return Err((MinimalVertexCover, format!("{x} stays a cover without {v}")));
    }
    if !g.is_independent(y) {
        return Err((MaximalIndependentSet, format!("{y} contains an edge")));
    }
    if let Some(v) = g
        .vertices()
        .difference(y)
        .iter()
        .find(|&v| g.is_independent(y.with(v)))
    {
        return Err((MaximalIndependentSet, format!("{y} extends by {v}")));
    }
    if let Some(i) = (0..d).find(|&i| !g.has_edge(xs[i], ys[i])) {
        return Err((MatchingEdges, format!("{{{}, {}}} missing", xs[i], ys[i])));
    }
    Ok(())
}

/// `O_[d](G)`: for each `i`, every cross edge `{x_k, y_i}` with `k ≠ i` is
/// replaced by `{x_k, x_i}`.
pub fn o_transform(g: &Graph, xs: &[Vertex], ys: &[Vertex]) -> Result<Graph> {
    check_pairing(g, xs, ys).map_err(|(clause, detail)| violated(clause, detail))?;
    let d = xs.len();
    let mut out = g.clone();
    out.parts = None;
    for i in 0..d {
        let cross: Vec<usize> = (0..d)
            .filter(|&k| k != i && g.has_edge(xs[k], ys[i]))
            .collect();
        for k in cross {
            out.remove_edge(xs[k], ys[i]);
            out.add_edge(xs[k], xs[i])?;
        }
    }
    Ok(out)
}
