//! Fixtures shared by the criterion benches.

use srinv_core::{complete_multipartite, independence_complex, whisker, Graph, SimplicialComplex};

/// `Δ(W(K_parts))`.
pub fn whiskered_multipartite(parts: &[usize]) -> SimplicialComplex {
    let g = whisker(&complete_multipartite(parts).expect("valid parts")).expect("fits");
    independence_complex(&g)
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}
