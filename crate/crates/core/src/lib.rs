//! Exact algebra behind colored sl(N) link homology: Schur calculus,
//! equivariant Grassmannian Frobenius algebras, MOY evaluation, deformed
//! homology and the scalar bookkeeping of Reidemeister and movie moves.

pub mod symcore;
pub mod grassmann;
pub mod webmoy;
pub mod linkcx;
pub mod deformed;
pub mod functorial;
