//! Exact computations with group gradings and superinvolutions on
//! finite-dimensional associative superalgebras over cyclotomic fields.

pub mod abgroup;
pub mod classify;
pub mod error;
pub mod exactfield;
pub mod gradings;
pub mod json;
pub mod structure;
pub mod superalg;

pub use abgroup::{AbGroup, Character, GroupElem, SemigroupTable};
pub use error::{Error, Result};
pub use exactfield::{MatrixF, Scalar, Subspace};
pub use gradings::{ActionHom, Grading};
pub use superalg::{Element, MapKind, SuperAlgebra, SuperMap};
