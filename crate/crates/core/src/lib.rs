//! Exact Stanley-Reisner invariants of simplicial complexes and of
//! independence complexes of graphs.
//!
//! Complexes are stored by facets over a ground set of at most 63 vertices.
//! Homology is computed over prime fields (GF(2) by default); graded Betti
//! numbers come from Hochster's formula, and regularity, projective
//! dimension, Cohen-Macaulay type and the a-invariant are read off the table.
//! The [`theorems`] module builds graphs with prescribed dimension,
//! regularity and type, and sweeps small graphs checking `d ≤ reg · type`.

pub mod complex;
pub mod error;
pub mod face;
pub mod graph;
pub mod homology;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod theorems;

pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use face::{Face, Vertex, MAX_VERTICES};
pub use graph::{
    complete_multipartite, independence_complex, induced_matching_number, minimal_vertex_covers,
    o_transform, s_suspension, whisker, ConditionClause, Graph,
};
pub use homology::{boundary_matrices, reduced_homology_ranks, FieldSpec, HomologyRanks};
pub use invariants::{
    a_invariant, betti_table, cm_type, face_sets_x_m, has_p_linear_resolution, invariant_report,
    is_cm_betti, is_cm_reisner, is_cohen_macaulay, is_vertex_decomposable, regularity,
    BettiTable, FaceSetReport, InvariantReport, VertexDecomposability,
};
