//! Test-only oracles. Nothing here calls into the library's homology or
//! Betti code: faces are found by testing every subset against a membership
//! predicate, and ranks are taken over the rationals by fraction-free
//! integer elimination.

#![allow(dead_code)]

use std::collections::BTreeMap;

use srinv_core::{Face, Graph, SimplicialComplex};

/// Rank over Q of an integer matrix.
pub fn rational_rank(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                for k in 0..cols {
                    m[r][k] = m[r][k] * a - m[rank][k] * b;
                }
                let g = m[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    m[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Reduced homology over Q of the complex whose faces are the subsets of
/// `ground` accepted by `is_face`. Index 0 is degree -1.
pub fn oracle_homology(ground: u64, is_face: &dyn Fn(u64) -> bool) -> Vec<usize> {
    let mut by_size: Vec<Vec<u64>> = vec![Vec::new(); 65];
    let mut sub = ground;
    loop {
        if is_face(sub) {
            by_size[sub.count_ones() as usize].push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & ground;
    }
    let top = by_size.iter().rposition(|g| !g.is_empty()).unwrap();
    for g in &mut by_size {
        g.sort();
    }
    let rank_of = |k: usize| -> usize {
        // boundary from k-sets to (k-1)-sets
        if k == 0 || k > top {
            return 0;
        }
        let (src, dst) = (&by_size[k], &by_size[k - 1]);
        let m: Vec<Vec<i128>> = src
            .iter()
            .map(|&f| {
                let mut row = vec![0i128; dst.len()];
                let mut pos = 0;
                for v in 0..64 {
                    if f >> v & 1 == 1 {
                        let c = dst.iter().position(|&g| g == f & !(1 << v)).unwrap();
                        row[c] = if pos % 2 == 0 { 1 } else { -1 };
                        pos += 1;
                    }
                }
                row
            })
            .collect();
        rational_rank(m)
    };
    (0..=top)
        .map(|k| by_size[k].len() - rank_of(k) - rank_of(k + 1))
        .collect()
}

/// Hochster's formula evaluated with the oracle homology. Keys are
/// `(i, total degree j)`.
pub fn oracle_betti(n: usize, is_face: &dyn Fn(u64) -> bool) -> BTreeMap<(usize, usize), u64> {
    let mut table = BTreeMap::new();
    for w in 0u64..1 << n {
        let restricted = |f: u64| f & !w == 0 && is_face(f);
        let ranks = oracle_homology(w, &restricted);
        let j = w.count_ones() as usize;
        for (k, &r) in ranks.iter().enumerate() {
            if r != 0 {
                *table.entry((j - k, j)).or_insert(0) += r as u64;
            }
        }
    }
    table
}

/// Reisner's criterion with oracle homology on every link.
pub fn oracle_reisner(n: usize, is_face: &dyn Fn(u64) -> bool) -> bool {
    let all = (1u64 << n) - 1;
    (0u64..1 << n).filter(|&f| is_face(f)).all(|f| {
        let link = |g: u64| g & f == 0 && is_face(g | f);
        let ranks = oracle_homology(all & !f, &link);
        let dim = ranks.len() as isize - 2;
        (-1..dim).all(|i| ranks[(i + 1) as usize] == 0)
    })
}

pub fn independent(g: &Graph) -> impl Fn(u64) -> bool + '_ {
    move |f| g.is_independent(Face::from_mask(f))
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (0..n.saturating_sub(1)).map(|i| (i, i + 1))).unwrap()
}

pub fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(n, facets.iter().map(|s| s.iter().copied())).unwrap()
}

pub fn f(vs: &[usize]) -> Face {
    Face::from_vertices(vs.iter().copied()).unwrap()
}

/// All labeled graphs on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let m = pairs.len();
    (0u64..1 << m).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}

/// Every simplicial complex (downward-closed, nonvoid family) on the ground
/// set `0..n`, including those where some ground vertices are not faces.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    let mut subsets: Vec<u64> = (0u64..1 << n).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let mut out = Vec::new();
    let mut chosen = vec![false; 1 << n];
    fn go(
        idx: usize,
        subsets: &[u64],
        chosen: &mut Vec<bool>,
        n: usize,
        out: &mut Vec<SimplicialComplex>,
    ) {
        if idx == subsets.len() {
            let faces: Vec<Face> = (0u64..1 << n)
                .filter(|&s| chosen[s as usize])
                .map(Face::from_mask)
                .collect();
            if !faces.is_empty() {
                out.push(SimplicialComplex::from_faces(Face::range(n).unwrap(), faces).unwrap());
            }
            return;
        }
        let s = subsets[idx];
        let allowed = (0..n).filter(|v| s >> v & 1 == 1).all(|v| chosen[(s & !(1 << v)) as usize]);
        if allowed {
            chosen[s as usize] = true;
            go(idx + 1, subsets, chosen, n, out);
            chosen[s as usize] = false;
        }
        go(idx + 1, subsets, chosen, n, out);
    }
    go(0, &subsets, &mut chosen, n, &mut out);
    out
}
