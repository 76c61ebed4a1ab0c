//! Exact computer algebra for the Fibonacci Lie algebra over GF(2): the
//! closed-form bracket on its monomial basis, its distinguished subalgebras,
//! ideals and quotients, and graded Chevalley-Eilenberg homology in
//! homological degrees up to two, cross-checked against a Hopf-formula
//! computation in the free Lie algebra.

pub mod algebra;
pub mod exec;
pub mod free_lie;
pub mod gf2;
pub mod homology;
pub mod subquotients;

mod error;

pub use algebra::{BasisMonomial, Element, Tail};
pub use error::Error;
pub use exec::Execution;
pub use subquotients::AlgebraId;
