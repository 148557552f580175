//! The equivariant Frobenius algebra H*_{GL_N}(Gr_a): reduction, multiplication,
//! trace, Sylvester operator, theta evaluation and deformation idempotents.

pub mod algebra;
pub mod idempotent;
pub mod parse;
pub mod sylvester;

pub use algebra::{GrassmannAlgebra, GrassmannElt};
pub use idempotent::{idempotents, Idempotent};
pub use parse::parse_elt;
pub use sylvester::{sylvester, theta_eval};

use crate::symcore::SymError;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum GrassError {
    #[error("label {a} not allowed for N = {n}")]
    BadLabel { n: usize, a: usize },
    #[error("elements of different algebras: {left:?} vs {right:?}")]
    Mismatch { left: (usize, usize), right: (usize, usize) },
    #[error("repeated deformation parameter {0}")]
    RepeatedSigma(String),
    #[error("evaluation matrix is singular")]
    Singular,
    #[error(transparent)]
    Sym(#[from] SymError),
}
