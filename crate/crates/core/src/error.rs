use crate::matrix::LinalgError;
use crate::verdict::Witness;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("grading groups differ")]
    GroupMismatch,
    #[error("invalid group element {element:?} for group {orders:?}")]
    InvalidElement { element: Vec<u32>, orders: Vec<u32> },
    #[error("invalid bicharacter: {0}")]
    InvalidBicharacter(String),
    #[error("map is not degree-preserving (entry {row},{col})")]
    NotDegreePreserving { row: usize, col: usize },
    #[error("non-invertible mu on a Hom object")]
    SingularMu,
    #[error("the Hom-deformed context needs Hom objects")]
    NeedsHomObject,
    #[error("singular change of basis")]
    SingularChangeOfBasis,
    #[error("Singular alpha")]
    SingularAlpha,
    #[error("NotLieMorphism: alpha does not commute with the bracket")]
    NotLieMorphism(Witness),
    #[error("hom_deform needs the context symmetry as Yang-Baxter operator in an undeformed context")]
    NotSymmetricInput,
    #[error("CompatFailed: the algebra violates the multiplication/Yang-Baxter compatibility")]
    CompatFailed(Witness),
    #[error("algebra has no unit")]
    MissingUnit,
    #[error("NotClosedUnderBracket: primitive elements are not closed under the commutator")]
    NotClosedUnderBracket,
    #[error("LambdaDoesNotRestrict: the Yang-Baxter operator does not restrict to the primitives")]
    LambdaDoesNotRestrict,
    #[error("primitive basis vector {0} is not homogeneous")]
    NotHomogeneous(usize),
    #[error("NotMonoidal: the functor data violates the monoidality square")]
    NotMonoidal(Witness),
    #[error("unsupported context for this construction: {0}")]
    UnsupportedContext(&'static str),
}
