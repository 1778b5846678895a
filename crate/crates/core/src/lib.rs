//! Bipartite IC-plane drawings at desk scale.
//!
//! A drawing is stored as its planarization: a genus-0 combinatorial map
//! whose nodes are the true (colored) vertices together with one degree-4
//! false vertex per crossing. Everything downstream — face and tie
//! taxonomy, maximality, the extremal families, and the exhaustive
//! search — works on that map.
//!
//! Modules:
//! * [`embedding`] — the `Drawing` type, ICPD text format, face traversal,
//!   structural validation, planar skeletons.
//! * [`analysis`] — face/tie classification, incidence laws, vertex
//!   connectivity, density bounds, quadrangulation tests.
//! * [`maximality`] — edge-addition certificates, maximality, saturation.
//! * [`generators`] — the extremal families (stars, K_{2,m}, the H_k chain,
//!   pseudo double wheels, G_n, and the 4-connected G_k family).
//! * [`search`] — isomorphism-reduced exhaustive enumeration, minimum-size
//!   tables, crossing-free classification.
//! * [`report`] — JSON analysis reports with stable field names.

pub mod analysis;
pub mod embedding;
pub mod generators;
pub mod maximality;
pub mod report;
pub mod search;

pub use embedding::{
    Color, CrossingId, DartId, Drawing, DrawingSpec, EdgeId, EdgeStatus, FaceWalk, Faces, Node,
    RemovalRule, RotEntry, ValidationReport, VertexId,
};
