//! Graphs whose independence complexes realize a prescribed
//! `(dimension + 1, regularity, type)` triple.
//!
//! For `d = p·r + q` with `0 ≤ q < r`, start from the whiskered complete
//! multipartite graph with `p` parts of size `r` (plus one of size `q` when
//! `q ≠ 0`), then suspend along independent sets of size `d - 1` until the
//! type reaches `t`. Every step is recomputed from scratch.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::face::Face;
use crate::graph::{complete_multipartite, independence_complex, s_suspension, whisker, Graph};
use crate::homology::FieldSpec;
use crate::invariants::{invariant_report, InvariantReport};
use crate::io::GraphJson;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ConstructionInput {
    pub d: usize,
    pub r: usize,
    pub t: usize,
}

/// One suspension `G -> G^S` with the invariants on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuspensionStep {
    pub s: Face,
    pub new_vertex: usize,
    pub dim_before: isize,
    pub dim_after: isize,
    pub reg_before: usize,
    pub reg_after: usize,
    pub type_before: Option<u64>,
    pub type_after: Option<u64>,
    pub cm_after: bool,
    /// CM kept, dimension and regularity unchanged, type up by exactly one.
    pub step_ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionCertificate {
    pub input: ConstructionInput,
    pub base_parts: Vec<usize>,
    pub suspensions: Vec<SuspensionStep>,
    pub graph: GraphJson,
    pub invariants: InvariantReport,
    pub claims_met: bool,
    #[serde(skip)]
    pub final_graph: Graph,
}

impl ConstructionCertificate {
    /// `(p, q)` with `d = p·r + q`.
    pub fn quotient_remainder(&self) -> (usize, usize) {
        (self.input.d / self.input.r, self.input.d % self.input.r)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}

/// Multipartite signature `(r, ..., r, q)` used as the base graph.
pub fn base_parts(d: usize, r: usize) -> Vec<usize> {
    let (p, q) = (d / r, d % r);
    let mut parts = vec![r; p];
    if q != 0 {
        parts.push(q);
    }
    parts
}

pub fn construct(d: usize, r: usize, t: usize) -> Result<ConstructionCertificate> {
    construct_over(d, r, t, FieldSpec::GF2)
}

pub fn construct_over(d: usize, r: usize, t: usize, field: FieldSpec) -> Result<ConstructionCertificate> {
    if r < 2 || t < 2 {
        return Err(domain(format!("need r ≥ 2 and t ≥ 2, got r = {r}, t = {t}")));
    }
    if d < r || d > r * t {
        return Err(domain(format!("need r ≤ d ≤ r·t, got d = {d}, r = {r}, t = {t}")));
    }
    let parts = base_parts(d, r);
    let mut graph = whisker(&complete_multipartite(&parts)?)?;
    let mut report = invariant_report(&independence_complex(&graph), field)?;
    let mut steps = Vec::new();

    // each step adds exactly one to the type when it behaves; bail out otherwise
    while report.is_cm() && report.cm_type.is_some_and(|ty| ty < t as u64) && steps.len() < t {
        let Some(s) = graph.first_independent_set(d - 1) else {
            break;
        };
        let next = s_suspension(&graph, s)?;
        let next_report = invariant_report(&independence_complex(&next), field)?;
        let step_ok = next_report.is_cm()
            && next_report.dim_complex == report.dim_complex
            && next_report.reg == report.reg
            && next_report.cm_type == report.cm_type.map(|ty| ty + 1);
        steps.push(SuspensionStep {
            s,
            new_vertex: graph.n(),
            dim_before: report.dim_complex,
            dim_after: next_report.dim_complex,
            reg_before: report.reg,
            reg_after: next_report.reg,
            type_before: report.cm_type,
            type_after: next_report.cm_type,
            cm_after: next_report.is_cm(),
            step_ok,
        });
        graph = next;
        report = next_report;
        if !step_ok {
            break;
        }
    }

    let claims_met = report.is_cm()
        && report.dim_complex == d as isize - 1
        && report.reg == r
        && report.cm_type == Some(t as u64)
        && graph.isolated_vertices().is_empty()
        && steps.iter().all(|s| s.step_ok);

    Ok(ConstructionCertificate {
        input: ConstructionInput { d, r, t },
        base_parts: parts,
        suspensions: steps,
        graph: GraphJson::from(&graph),
        invariants: report,
        claims_met,
        final_graph: graph,
    })
}
