//! Colored webs, admissible subset flows and the graded MOY evaluation.

pub mod json;
pub mod moy;
pub mod web;
pub mod wiring;

pub use moy::{enumerate_flows, extend_flow, hom_dim, moy_eval, Flow};
pub use web::{BoundaryPoint, VertexKind, Web};
pub use wiring::{glue, Wiring};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum WebError {
    #[error("flow condition fails at vertex {0}")]
    Flow(usize),
    #[error("malformed web: {0}")]
    Malformed(String),
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("web has open boundary")]
    NotClosed,
    #[error("embedding is not planar")]
    NotPlanar,
    #[error("edge label {label} exceeds N = {n}")]
    LabelTooLarge { label: u32, n: u32 },
}
