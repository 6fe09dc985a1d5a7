//! Superalgebra constructors, products, canonical maps and checkers.

pub mod algebra;
pub mod canonical;
pub mod checks;
pub mod element;
pub mod map;
pub mod search;

pub use algebra::{AlgebraKind, SuperAlgebra};
pub use canonical::{apply_canonical_map, canonical_map, CanonicalKind};
pub use checks::{check_super_map, involution_simple, CheckReport, Claim, Witness};
pub use element::Element;
pub use map::{MapKind, SuperMap};
pub use search::{superinvolution_search, QCertificate, SearchResult};

/// Product of two elements of the same algebra.
pub fn mul(x: &Element, y: &Element) -> crate::Result<Element> {
    x.mul(y)
}
