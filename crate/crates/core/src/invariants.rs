//! Graded Betti numbers and the invariants read off from them.
//!
//! Betti numbers come from Hochster's formula
//! `β_{i,j} = Σ_{|W| = j} dim H̃_{j-i-1}(Δ_W)`, summed over all vertex
//! subsets `W` of the ground set. Tables store the total degree `j`; the
//! shift `j - i` is what regularity and linearity look at.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{domain, Error, Result};
use crate::face::{Face, Vertex};
use crate::homology::{reduced_homology_ranks, FaceTable, FieldSpec};

/// Largest ground set accepted by [`betti_table`].
pub const DEFAULT_MAX_BETTI_VERTICES: usize = 22;

/// `β_{i,j}` indexed by homological degree `i` and total degree `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    n: usize,
    #[serde(serialize_with = "serialize_entries")]
    entries: BTreeMap<(usize, usize), u64>,
}

fn serialize_entries<S: serde::Serializer>(
    entries: &BTreeMap<(usize, usize), u64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry {
        i: usize,
        j: usize,
        shift: usize,
        value: u64,
    }
    s.collect_seq(entries.iter().map(|(&(i, j), &value)| Entry {
        i,
        j,
        shift: j - i,
        value,
    }))
}

impl BettiTable {
    /// Builds a table from `(i, j_total, β)` triples; zero entries are dropped.
    pub fn from_entries<I: IntoIterator<Item = ((usize, usize), u64)>>(n: usize, entries: I) -> Self {
        let mut map = BTreeMap::new();
        for (k, v) in entries {
            if v != 0 {
                *map.entry(k).or_insert(0) += v;
            }
        }
        BettiTable { n, entries: map }
    }

    /// Number of variables of the ambient polynomial ring.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `β_{i,j}` with `j` the total degree.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `β_{i,i+shift}`: the entry in row `shift` of the usual table layout.
    pub fn get_by_shift(&self, i: usize, shift: usize) -> u64 {
        self.get(i, i + shift)
    }

    /// Nonzero entries as `((i, j_total), β)` in increasing order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .range((i, 0)..=(i, usize::MAX))
            .map(|(_, &v)| v)
            .sum()
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `max{j - i : β_{i,j} ≠ 0}`; 0 when only `β_{0,0}` survives.
    pub fn regularity(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// True when the ideal is zero, i.e. only `β_{0,0}` is nonzero.
    pub fn is_trivial(&self) -> bool {
        self.entries.keys().all(|&(i, _)| i == 0)
    }

    /// Whether every entry with `i ≥ 1` sits at shift `p`. `None` for the zero ideal.
    pub fn is_linear(&self, p: usize) -> Option<bool> {
        if self.is_trivial() {
            return None;
        }
        Some(
            self.entries
                .keys()
                .filter(|&&(i, _)| i >= 1)
                .all(|&(i, j)| j - i == p),
        )
    }

    fn rows(&self) -> (usize, usize) {
        (self.projective_dimension(), self.regularity())
    }
}

impl fmt::Display for BettiTable {
    /// Shift rows against homological columns, followed by the same entries
    /// listed in total degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (pd, reg) = self.rows();
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .chain((0..=pd).map(|i| self.total(i).to_string().len()))
            .max()
            .unwrap_or(1)
            .max(pd.to_string().len());
        write!(f, "{:>7}", "")?;
        for i in 0..=pd {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>7}", "total:")?;
        for i in 0..=pd {
            write!(f, " {:>width$}", self.total(i))?;
        }
        writeln!(f)?;
        for shift in 0..=reg {
            write!(f, "{:>7}", format!("{shift}:"))?;
            for i in 0..=pd {
                match self.get_by_shift(i, shift) {
                    0 => write!(f, " {:>width$}", ".")?,
                    v => write!(f, " {v:>width$}")?,
                }
            }
            writeln!(f)?;
        }
        write!(f, "total degree:")?;
        for ((i, j), v) in self.entries() {
            write!(f, " b[{i},{j}]={v}")?;
        }
        writeln!(f)
    }
}

/// Betti table of `k[Δ]` over `field`, for ground sets up to
/// [`DEFAULT_MAX_BETTI_VERTICES`].
pub fn betti_table(cx: &SimplicialComplex, field: FieldSpec) -> Result<BettiTable> {
    betti_table_with_limit(cx, field, DEFAULT_MAX_BETTI_VERTICES)
}

pub fn betti_table_with_limit(
    cx: &SimplicialComplex,
    field: FieldSpec,
    max_vertices: usize,
) -> Result<BettiTable> {
    let n = cx.ground_size();
    if n > max_vertices {
        return Err(Error::Resource(format!(
            "Betti table over {n} vertices exceeds the limit of {max_vertices}"
        )));
    }
    let ground: Vec<Vertex> = cx.ground().iter().collect();
    let table = FaceTable::new(cx);
    // W runs over the ground subsets in Gray-code order; per-subset results are
    // merged by integer addition, so the schedule does not affect the table
    let entries = (0u64..1 << n)
        .into_par_iter()
        .fold(HashMap::new, |mut acc: HashMap<(usize, usize), u64>, g| {
            let code = g ^ (g >> 1);
            let w = Face::from_mask(
                Face::from_mask(code)
                    .iter()
                    .fold(0u64, |m, k| m | 1 << ground[k]),
            );
            let j = w.len();
            let ranks = table.homology_of_restriction(w, field);
            for (k, &r) in ranks.as_slice().iter().enumerate() {
                if r != 0 {
                    // degree l = k - 1 contributes to i = j - l - 1 = j - k
                    *acc.entry((j - k, j)).or_insert(0) += r as u64;
                }
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    Ok(BettiTable::from_entries(n, entries))
}

/// `1 + max{l : H̃_l(Δ_W) ≠ 0}` over all ground subsets `W`, computed from
/// explicit restrictions without assembling a Betti table.
pub fn regularity_from_restrictions(cx: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    let n = cx.ground_size();
    if n > DEFAULT_MAX_BETTI_VERTICES {
        return Err(Error::Resource(format!(
            "restriction scan over {n} vertices exceeds the limit of {DEFAULT_MAX_BETTI_VERTICES}"
        )));
    }
    let subsets: Vec<Face> = cx.ground().subsets().collect();
    let top = subsets
        .par_iter()
        .map(|&w| {
            let r = cx.restriction(w).expect("subset of ground");
            reduced_homology_ranks(&r, field)
                .max_nonvanishing()
                .unwrap_or(-1)
        })
        .max()
        .unwrap_or(-1);
    Ok((top + 1).max(0) as usize)
}

/// `reg(k[Δ])`.
pub fn regularity(cx: &SimplicialComplex, field: FieldSpec) -> Result<usize> {
    Ok(betti_table(cx, field)?.regularity())
}

/// Reisner's criterion: `H̃_i(link F) = 0` for every face `F` and every
/// `i < dim link F`.
pub fn is_cm_reisner(cx: &SimplicialComplex, field: FieldSpec) -> bool {
    cx.faces().par_iter().all(|&f| {
        let link = cx.link(f).expect("face of the complex");
        let ranks = reduced_homology_ranks(&link, field);
        (-1..link.dim()).all(|i| ranks.get(i) == 0)
    })
}

/// Auslander-Buchsbaum route: `pd k[Δ] = n - d`.
pub fn is_cm_betti(cx: &SimplicialComplex, field: FieldSpec) -> Result<bool> {
    let table = betti_table(cx, field)?;
    Ok(cm_from_table(cx, &table))
}

fn cm_from_table(cx: &SimplicialComplex, table: &BettiTable) -> bool {
    table.projective_dimension() == cx.ground_size() - cx.krull_dim()
}

/// Both Cohen-Macaulay verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CmVerdict {
    pub reisner: bool,
    pub betti: bool,
}

impl CmVerdict {
    pub fn agree(self) -> bool {
        self.reisner == self.betti
    }
}

pub fn is_cohen_macaulay(cx: &SimplicialComplex, field: FieldSpec) -> Result<CmVerdict> {
    Ok(CmVerdict {
        reisner: is_cm_reisner(cx, field),
        betti: is_cm_betti(cx, field)?,
    })
}

fn require_cm(cx: &SimplicialComplex, table: &BettiTable, what: &str) -> Result<()> {
    if cm_from_table(cx, table) {
        Ok(())
    } else {
        Err(domain(format!("{what} is only defined for Cohen-Macaulay complexes")))
    }
}

/// Cohen-Macaulay type `β_{n-d}`.
pub fn cm_type(cx: &SimplicialComplex, field: FieldSpec) -> Result<u64> {
    let table = betti_table(cx, field)?;
    require_cm(cx, &table, "Cohen-Macaulay type")?;
    Ok(table.total(cx.ground_size() - cx.krull_dim()))
}

/// `a(Δ) = reg - d`.
pub fn a_invariant(cx: &SimplicialComplex, field: FieldSpec) -> Result<i64> {
    let table = betti_table(cx, field)?;
    require_cm(cx, &table, "a-invariant")?;
    Ok(table.regularity() as i64 - cx.krull_dim() as i64)
}

/// Whether `k[Δ]` has a `p`-linear resolution.
pub fn has_p_linear_resolution(cx: &SimplicialComplex, p: usize, field: FieldSpec) -> Result<bool> {
    betti_table(cx, field)?
        .is_linear(p)
        .ok_or_else(|| domain("the zero ideal has no generators, linearity is undefined"))
}

/// Everything computed for one complex over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub field: FieldSpec,
    pub n: usize,
    pub dim_complex: isize,
    pub krull_dim: usize,
    pub is_cm_reisner: bool,
    pub is_cm_betti: bool,
    pub reg: usize,
    pub pd: usize,
    pub cm_type: Option<u64>,
    pub a_invariant: Option<i64>,
    pub is_core: bool,
    pub betti: BettiTable,
}

impl InvariantReport {
    pub fn is_cm(&self) -> bool {
        self.is_cm_reisner && self.is_cm_betti
    }
}

pub fn invariant_report(cx: &SimplicialComplex, field: FieldSpec) -> Result<InvariantReport> {
    let betti = betti_table(cx, field)?;
    let is_cm_betti = cm_from_table(cx, &betti);
    let d = cx.krull_dim();
    let reg = betti.regularity();
    let (cm_type, a_invariant) = if is_cm_betti {
        (
            Some(betti.total(cx.ground_size() - d)),
            Some(reg as i64 - d as i64),
        )
    } else {
        (None, None)
    };
    Ok(InvariantReport {
        field,
        n: cx.ground_size(),
        dim_complex: cx.dim(),
        krull_dim: d,
        is_cm_reisner: is_cm_reisner(cx, field),
        is_cm_betti,
        reg,
        pd: betti.projective_dimension(),
        cm_type,
        a_invariant,
        is_core: cx.is_core(),
        betti,
    })
}

/// Recursive vertex decomposability test with memoization on facet lists.
///
/// Shedding vertices are tried in ascending order, so witnesses are
/// deterministic.
#[derive(Default)]
pub struct VertexDecomposability {
    memo: HashMap<Vec<Face>, bool>,
}

impl VertexDecomposability {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, cx: &SimplicialComplex) -> bool {
        self.first_shedding_vertex(cx).is_some() || cx.is_simplex()
    }

    /// Smallest shedding vertex witnessing decomposability, if any.
    /// A simplex needs none and reports `None`.
    pub fn first_shedding_vertex(&mut self, cx: &SimplicialComplex) -> Option<Vertex> {
        if cx.is_simplex() {
            return None;
        }
        cx.vertex_support()
            .iter()
            .find(|&v| self.is_shedding(cx, v))
    }

    fn is_shedding(&mut self, cx: &SimplicialComplex, v: Vertex) -> bool {
        let vf = Face::singleton(v);
        let deletion = cx.deletion(vf);
        // no facet of Δ ∖ v may lie in link(v)
        if deletion.facets().iter().any(|g| cx.contains(g.with(v))) {
            return false;
        }
        let link = cx.link(vf).expect("vertex is a face");
        self.decomposable(&deletion) && self.decomposable(&link)
    }

    fn decomposable(&mut self, cx: &SimplicialComplex) -> bool {
        if cx.is_simplex() {
            return true;
        }
        if let Some(&known) = self.memo.get(cx.facets()) {
            return known;
        }
        let found = cx
            .vertex_support()
            .iter()
            .any(|v| self.is_shedding(cx, v));
        self.memo.insert(cx.facets().to_vec(), found);
        found
    }

    /// Shedding vertices along the deletion spine `Δ, Δ∖v_1, Δ∖v_1∖v_2, …`
    /// down to a simplex; `None` if `Δ` is not vertex decomposable.
    pub fn shedding_sequence(&mut self, cx: &SimplicialComplex) -> Option<Vec<Vertex>> {
        let mut seq = Vec::new();
        let mut cur = cx.clone();
        while !cur.is_simplex() {
            let v = self.first_shedding_vertex(&cur)?;
            seq.push(v);
            cur = cur.deletion(Face::singleton(v));
        }
        Some(seq)
    }
}

pub fn is_vertex_decomposable(cx: &SimplicialComplex) -> bool {
    VertexDecomposability::new().check(cx)
}

/// `X(Δ)`: faces whose link has nonzero homology in its top degree, and
/// `M(Δ)`: the inclusion-minimal members of `X(Δ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceSetReport {
    pub x: Vec<Face>,
    pub m: Vec<Face>,
}

pub fn face_sets_x_m(cx: &SimplicialComplex, field: FieldSpec) -> FaceSetReport {
    let mut x: Vec<Face> = cx
        .faces()
        .into_par_iter()
        .filter(|&f| {
            let link = cx.link(f).expect("face of the complex");
            reduced_homology_ranks(&link, field).get(link.dim()) != 0
        })
        .collect();
    x.sort_by(Face::cmp_graded);
    let m = x
        .iter()
        .copied()
        .filter(|f| !x.iter().any(|g| g != f && g.is_subset(*f)))
        .collect();
    FaceSetReport { x, m }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_multipartite, independence_complex, whisker, Graph};

    fn f(vs: &[usize]) -> Face {
        Face::from_vertices(vs.iter().copied()).unwrap()
    }

    fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, facets.iter().map(|s| s.iter().copied())).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    const GF2: FieldSpec = FieldSpec::GF2;

    #[test]
    fn full_simplex_has_trivial_table() {
        let s = cx(3, &[&[0, 1, 2]]);
        let t = betti_table(&s, GF2).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![((0, 0), 1)]);
        assert_eq!(t.regularity(), 0);
        assert_eq!(cm_type(&s, GF2).unwrap(), 1);
        assert_eq!(a_invariant(&s, GF2).unwrap(), -3);
        assert!(has_p_linear_resolution(&s, 1, GF2).is_err());
    }

    #[test]
    fn hollow_triangle_is_principal() {
        let t = cx(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let table = betti_table(&t, GF2).unwrap();
        assert_eq!(table.entries().collect::<Vec<_>>(), vec![((0, 0), 1), ((1, 3), 1)]);
        assert!(has_p_linear_resolution(&t, 2, GF2).unwrap());
    }

    #[test]
    fn linear_generator_from_non_face_vertex() {
        let c = cx(3, &[&[0, 1]]);
        let table = betti_table(&c, GF2).unwrap();
        assert_eq!(table.entries().collect::<Vec<_>>(), vec![((0, 0), 1), ((1, 1), 1)]);
        assert!(is_cm_reisner(&c, GF2));
        assert!(is_cm_betti(&c, GF2).unwrap());
    }

    #[test]
    fn size_limit() {
        let s = SimplicialComplex::simplex(Face::range(8).unwrap());
        assert!(matches!(betti_table_with_limit(&s, GF2, 7), Err(Error::Resource(_))));
        assert!(betti_table_with_limit(&s, GF2, 8).is_ok());
    }

    #[test]
    fn c4_and_c5() {
        let c4 = independence_complex(&cycle(4));
        let v = is_cohen_macaulay(&c4, GF2).unwrap();
        assert!(!v.reisner && !v.betti);
        assert!(cm_type(&c4, GF2).is_err());
        assert!(a_invariant(&c4, GF2).is_err());
        assert!(has_p_linear_resolution(&c4, 1, GF2).unwrap());

        let c5 = independence_complex(&cycle(5));
        assert!(is_cm_reisner(&c5, GF2));
        assert!(!has_p_linear_resolution(&c5, 1, GF2).unwrap());
        assert_eq!(betti_table(&c5, GF2).unwrap().get(3, 5), 1);
    }

    #[test]
    fn display_shows_both_conventions() {
        let c4 = independence_complex(&cycle(4));
        let s = betti_table(&c4, GF2).unwrap().to_string();
        assert!(s.contains("total: 1 4 4 1"), "{s}");
        assert!(s.contains("1: . 4 4 1"), "{s}");
        assert!(s.contains("b[3,4]=1"), "{s}");
    }

    #[test]
    fn vertex_decomposability_examples() {
        assert!(is_vertex_decomposable(&cx(3, &[&[0, 1, 2]])));
        assert!(is_vertex_decomposable(&SimplicialComplex::empty_face_only(Face::EMPTY)));
        assert!(!is_vertex_decomposable(&independence_complex(&cycle(4))));
        assert!(is_vertex_decomposable(&cx(2, &[&[0], &[1]])));
        let w = independence_complex(&whisker(&complete_multipartite(&[2, 1]).unwrap()).unwrap());
        let mut vd = VertexDecomposability::new();
        let seq = vd.shedding_sequence(&w).unwrap();
        let mut cur = w.clone();
        for &v in &seq {
            cur = cur.deletion(Face::singleton(v));
        }
        assert!(cur.is_simplex());
    }

    #[test]
    fn face_sets_examples() {
        let seg = cx(2, &[&[0, 1]]);
        let r = face_sets_x_m(&seg, GF2);
        assert_eq!(r.x, vec![f(&[0, 1])]);
        assert_eq!(r.m, vec![f(&[0, 1])]);

        let c5 = independence_complex(&cycle(5));
        let r = face_sets_x_m(&c5, GF2);
        assert_eq!(r.m, vec![Face::EMPTY]);
        for facet in c5.facets() {
            assert!(r.x.contains(facet));
        }
    }

    #[test]
    fn report_fields() {
        let c5 = independence_complex(&cycle(5));
        let r = invariant_report(&c5, GF2).unwrap();
        assert_eq!((r.dim_complex, r.krull_dim, r.reg, r.pd), (1, 2, 2, 3));
        assert_eq!((r.cm_type, r.a_invariant), (Some(1), Some(0)));
        assert!(r.is_core && r.is_cm());
        let c4 = invariant_report(&independence_complex(&cycle(4)), GF2).unwrap();
        assert_eq!((c4.cm_type, c4.a_invariant), (None, None));
    }
}
