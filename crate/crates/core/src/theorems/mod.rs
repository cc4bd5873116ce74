//! Constructions and checks for the inequality `d ≤ reg · type` on
//! Cohen-Macaulay complexes.

pub mod construct;
pub mod sweep;
pub mod verify;

pub use construct::{base_parts, construct, construct_over, ConstructionCertificate, SuspensionStep};
pub use sweep::{check_graph, corpus, sweep, GraphId, SweepOptions, SweepReport};
pub use verify::{
    check_face_sets, face_set_check, inequality_record, verify_inequality, verify_inequality_graph,
    verify_prop41, verify_prop44, FaceSetCheck, InequalityRecord, Prop41Report, Prop44Report,
    RefinementReason,
};
