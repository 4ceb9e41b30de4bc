//! Exact verification of Lie algebras, self-invertible Yang-Baxter operators
//! and YB-Lie algebras living in monoidal categories of finite-dimensional
//! graded vector spaces.
//!
//! Every morphism is a [`RatMatrix`] under a fixed flattening of tensor
//! products (row-major, left factor major), and every axiom is an exact
//! matrix identity over the rationals.

pub mod constructions;
pub mod context;
pub mod corpus;
pub mod error;
pub mod lie;
pub mod matrix;
pub mod rational;
pub mod transport;
pub mod verdict;
pub mod yangbaxter;

pub use constructions::{AssocAlgebra, BialgebraData};
pub use context::{
    Bicharacter, CategoryObject, FiniteAbelianGroup, GradedObject, GroupElement, HomObject,
    MonoidalContext,
};
pub use error::Error;
pub use lie::{LieCoalgebra, YBLieAlgebra};
pub use matrix::{LinalgError, RatMatrix};
pub use rational::Rational;
pub use transport::FunctorData;
pub use verdict::{CheckLine, Report, Status, Verdict, Witness};
pub use yangbaxter::YBOperator;
