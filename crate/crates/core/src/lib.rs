//! Exact Sullivan-model computations: free graded-commutative algebras over
//! the rationals, differentials, cohomology, and tests for cohomological
//! symplecticity of pure and toral models.

pub mod algebra;
pub mod catalog;
pub mod cohomology;
pub mod csym;
pub mod differential;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod pairing;
pub mod parse;
pub mod toral;

pub use algebra::{
    coordinates, enumerate_degree_basis, multiply, DegreeSlice, Element, FreeGca, Generator,
    Monomial, Rational,
};
pub use error::{Error, Result};
