//! Scalar bookkeeping for Reidemeister normalizations and movie moves on
//! simple resolutions. Foam isotopies are taken as given; only the scalars
//! picked up by local relations are multiplied out and compared with one.

pub mod catalog;
pub mod scalar;
pub mod scripts;

pub use catalog::{reidemeister_scalar, Catalog, Entry, Foam, LatticeScalar, Move, MoveScalars, RelationId, RelationStep};
pub use scalar::{r_number, ScalarExpr, Subset};
pub use scripts::{
    movie_move_scripts, numeric_spot_check, random_sigma, reidemeister_scripts, verify_identity, verify_movie_moves, verify_movie_moves_with,
    CaseReport, Outcome, Report, Script, Step,
};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum FuncError {
    #[error("malformed script: {0}")]
    Malformed(String),
    #[error("unsupported variant: {0}")]
    Unsupported(String),
}

/// r(X, Y) for subsets of Sigma.
pub fn r_scalar(x: &[usize], y: &[usize]) -> ScalarExpr {
    ScalarExpr::r(x, y)
}

/// omega_A for A a subset of Sigma with |Sigma| = n.
pub fn omega(a: &[usize], n: usize) -> ScalarExpr {
    ScalarExpr::omega(a, n)
}
