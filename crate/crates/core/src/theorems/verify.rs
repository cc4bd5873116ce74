//! Checks of the regularity-type inequalities and of the closed forms for
//! whiskered multipartite graphs.

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{domain, Result};
use crate::face::{Face, Vertex};
use crate::graph::{
    complete_multipartite, independence_complex, induced_matching_number, minimal_vertex_covers,
    o_transform, whisker, Graph,
};
use crate::homology::FieldSpec;
use crate::invariants::{
    face_sets_x_m, invariant_report, FaceSetReport, InvariantReport, DEFAULT_MAX_BETTI_VERTICES,
};

/// Why the additive bound `d ≤ reg + type - 1` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RefinementReason {
    LinearResolution,
    ZeroAInvariant,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RefinementRecord {
    pub reasons: Vec<RefinementReason>,
    pub bound: u64,
    pub holds: bool,
}

/// `d ≤ reg · type` for one CM complex with `Δ = core(Δ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityRecord {
    pub d: usize,
    pub reg: usize,
    pub cm_type: u64,
    pub product: u64,
    pub holds: bool,
    pub tight: bool,
    pub refinement: Option<RefinementRecord>,
}

/// Evaluates the inequality from an already computed report.
pub fn inequality_record(report: &InvariantReport) -> Result<InequalityRecord> {
    if !report.is_cm() {
        return Err(domain("hypothesis failed: the complex is not Cohen-Macaulay"));
    }
    if !report.is_core {
        return Err(domain("hypothesis failed: the complex differs from its core"));
    }
    let d = report.krull_dim;
    let reg = report.reg;
    let ty = report.cm_type.expect("CM complexes have a type");
    let product = reg as u64 * ty;
    let mut reasons = Vec::new();
    if report.betti.is_linear(1) == Some(true) {
        reasons.push(RefinementReason::LinearResolution);
    }
    if report.a_invariant == Some(0) {
        reasons.push(RefinementReason::ZeroAInvariant);
    }
    let bound = reg as u64 + ty - 1;
    let refinement = (!reasons.is_empty()).then_some(RefinementRecord {
        reasons,
        bound,
        holds: d as u64 <= bound,
    });
    Ok(InequalityRecord {
        d,
        reg,
        cm_type: ty,
        product,
        holds: d as u64 <= product,
        tight: d as u64 == product,
        refinement,
    })
}

pub fn verify_inequality(cx: &SimplicialComplex, field: FieldSpec) -> Result<InequalityRecord> {
    inequality_record(&invariant_report(cx, field)?)
}

pub fn verify_inequality_graph(g: &Graph, field: FieldSpec) -> Result<InequalityRecord> {
    verify_inequality(&independence_complex(g), field)
}

/// The three face-set properties behind the inequality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FaceSetCheck {
    /// Stars of the members of `M(Δ)` cover `Δ`.
    pub star_cover: bool,
    /// `d - |F| ≤ reg` for every `F ∈ M(Δ)`.
    pub degree_bound: bool,
    /// `|M(Δ)| ≤ type`.
    pub count_bound: bool,
}

impl FaceSetCheck {
    pub fn all(self) -> bool {
        self.star_cover && self.degree_bound && self.count_bound
    }
}

pub fn check_face_sets(
    cx: &SimplicialComplex,
    report: &InvariantReport,
    sets: &FaceSetReport,
) -> FaceSetCheck {
    let cover = sets
        .m
        .iter()
        .map(|&f| cx.star(f).expect("members of M are faces"))
        .reduce(|a, b| a.union(&b));
    let d = report.krull_dim;
    FaceSetCheck {
        star_cover: cover.as_ref() == Some(cx),
        degree_bound: sets.m.iter().all(|f| d - f.len() <= report.reg),
        count_bound: report
            .cm_type
            .is_some_and(|ty| sets.m.len() as u64 <= ty),
    }
}

pub fn face_set_check(cx: &SimplicialComplex, field: FieldSpec) -> Result<FaceSetCheck> {
    let report = invariant_report(cx, field)?;
    Ok(check_face_sets(cx, &report, &face_sets_x_m(cx, field)))
}

/// Computed versus closed-form invariants of `Δ(W(K_{r_1,...,r_t}))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop41Report {
    pub parts: Vec<usize>,
    pub expected: (isize, usize, u64),
    pub computed: (isize, usize, Option<u64>),
    pub cm: bool,
    pub induced_matching: usize,
    pub holds: bool,
}

pub fn verify_prop41(parts: &[usize], field: FieldSpec) -> Result<Prop41Report> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(domain("parts must be positive and nonempty"));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(domain("parts must be listed in non-increasing order"));
    }
    let total: usize = parts.iter().sum();
    if 2 * total > DEFAULT_MAX_BETTI_VERTICES {
        return Err(crate::Error::Resource(format!(
            "W(K) on {} vertices exceeds the Betti limit of {DEFAULT_MAX_BETTI_VERTICES}",
            2 * total
        )));
    }
    let g = whisker(&complete_multipartite(parts)?)?;
    let report = invariant_report(&independence_complex(&g), field)?;
    let expected = (total as isize - 1, parts[0], parts.len() as u64);
    let computed = (report.dim_complex, report.reg, report.cm_type);
    let induced_matching = induced_matching_number(&g);
    let holds = report.is_cm()
        && computed == (expected.0, expected.1, Some(expected.2))
        && induced_matching == report.reg;
    Ok(Prop41Report {
        parts: parts.to_vec(),
        expected,
        computed,
        cm: report.is_cm(),
        induced_matching,
        holds,
    })
}

/// Type from the Betti table against the minimal vertex cover count of `O_[d](G)|_X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop44Report {
    pub betti_type: u64,
    pub cover_type: usize,
    pub agree: bool,
}

pub fn verify_prop44(g: &Graph, xs: &[Vertex], ys: &[Vertex], field: FieldSpec) -> Result<Prop44Report> {
    let cx = independence_complex(g);
    let report = invariant_report(&cx, field)?;
    if !report.is_cm() {
        return Err(domain("hypothesis failed: Δ(G) is not Cohen-Macaulay"));
    }
    if 2 * report.krull_dim != g.n() {
        return Err(domain(format!(
            "hypothesis failed: dim Δ(G) = {} but |V| = {}",
            report.dim_complex,
            g.n()
        )));
    }
    let o = o_transform(g, xs, ys)?;
    let (restricted, _) = o.induced_subgraph(Face::from_vertices(xs.iter().copied())?);
    let cover_type = minimal_vertex_covers(&restricted).len();
    let betti_type = report.cm_type.expect("CM");
    Ok(Prop44Report {
        betti_type,
        cover_type,
        agree: betti_type == cover_type as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const GF2: FieldSpec = FieldSpec::GF2;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn pentagon_record() {
        let rec = verify_inequality_graph(&cycle(5), GF2).unwrap();
        assert_eq!((rec.d, rec.reg, rec.cm_type), (2, 2, 1));
        assert!(rec.holds && rec.tight);
        let refinement = rec.refinement.unwrap();
        assert_eq!(refinement.reasons, vec![RefinementReason::ZeroAInvariant]);
        assert_eq!(refinement.bound, 2);
        assert!(refinement.holds);
    }

    #[test]
    fn whiskered_square_is_tight() {
        let g = whisker(&complete_multipartite(&[2, 2]).unwrap()).unwrap();
        let rec = verify_inequality_graph(&g, GF2).unwrap();
        assert_eq!((rec.d, rec.product), (4, 4));
        assert!(rec.tight);
    }

    #[test]
    fn hypothesis_gates() {
        let simplex = SimplicialComplex::simplex(Face::range(3).unwrap());
        assert!(verify_inequality(&simplex, GF2).is_err());
        assert!(verify_inequality_graph(&cycle(4), GF2).is_err());
    }

    #[test]
    fn prop41_examples() {
        for (parts, dim, reg) in [(vec![2, 2], 3, 2), (vec![1, 1], 1, 1), (vec![3, 2], 4, 3)] {
            let r = verify_prop41(&parts, GF2).unwrap();
            assert!(r.holds, "{r:?}");
            assert_eq!(r.computed, (dim, reg, Some(2)));
        }
        assert!(verify_prop41(&[1, 2], GF2).is_err());
        assert!(verify_prop41(&[6, 6], GF2).is_err());
    }

    #[test]
    fn prop44_examples() {
        for parts in [vec![1, 1], vec![2, 2], vec![2, 1]] {
            let g = whisker(&complete_multipartite(&parts).unwrap()).unwrap();
            let d = g.n() / 2;
            let xs: Vec<usize> = (0..d).collect();
            let ys: Vec<usize> = (d..2 * d).collect();
            let r = verify_prop44(&g, &xs, &ys, GF2).unwrap();
            assert_eq!((r.betti_type, r.cover_type), (2, 2));
        }
        assert!(verify_prop44(&cycle(4), &[0, 2], &[1, 3], GF2).is_err());
    }

    #[test]
    fn face_sets_on_pentagon() {
        let check = face_set_check(&independence_complex(&cycle(5)), GF2).unwrap();
        assert!(check.all());
    }
}
