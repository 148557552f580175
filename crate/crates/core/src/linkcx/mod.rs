//! Colored diagrams, crossing complexes, the cube of resolutions and graded
//! Euler characteristics.

pub mod corpus;
pub mod cube;
pub mod diagram;

pub use corpus::{reidemeister_corpus, CorpusPair};
pub use cube::{crossing_complex, cube, euler_char, resolution, Cube, GradedObject};
pub use diagram::{ColoredDiagram, Crossing};

use crate::webmoy::WebError;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown arc {0}")]
    UnknownArc(usize),
    #[error("unknown component {0}")]
    UnknownComponent(usize),
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error("diagram has open boundary")]
    OpenBoundary,
    #[error("color {color} exceeds N = {n}")]
    ColorTooLarge { color: u32, n: u32 },
    #[error(transparent)]
    Web(#[from] WebError),
}
