//! Partitions, Laurent polynomials, Littlewood-Richardson products and
//! symmetric functions in ordinary and difference alphabets.

pub mod difference;
pub mod laurent;
pub mod lr;
pub mod partition;
pub mod poly;
pub mod qbinom;
pub mod sym;

pub use difference::{h_difference, schur_difference};
pub use laurent::LaurentPoly;
pub use lr::{lr_coeff, lr_product};
pub use partition::Partition;
pub use poly::{Monomial, Poly, Var};
pub use qbinom::qbinomial;
pub use sym::SymElt;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a partition: {0}")]
    NotPartition(String),
    #[error("no value bound for variable {0}")]
    MissingBinding(String),
    #[error("alphabet bounds differ: {0} vs {1}")]
    AlphabetMismatch(usize, usize),
    #[error("partition {0} has more than {1} rows")]
    TooManyRows(String, usize),
    #[error("invalid arguments: {0}")]
    Invalid(String),
}
