//! Exact scalars in cyclotomic fields and linear algebra over them.

pub mod matrix;
pub mod scalar;
pub mod subspace;

pub use matrix::MatrixF;
pub use scalar::{cyclotomic_arith, cyclotomic_polynomial, euler_phi, lcm, polynomial_roots, ArithOp, Rational, Scalar};
pub use subspace::{dot, is_direct_decomposition, unit_vector, EchelonSpan, Subspace, Vector};

/// Kernel or intersection selector for [`kernel_and_intersect`].
pub enum SpaceQuery<'a> {
    Kernel(&'a MatrixF),
    Intersect(&'a Subspace, &'a Subspace),
}

pub fn kernel_and_intersect(query: SpaceQuery<'_>) -> crate::Result<Subspace> {
    match query {
        SpaceQuery::Kernel(m) => Ok(Subspace::kernel(m)),
        SpaceQuery::Intersect(a, b) => a.intersect(b),
    }
}

pub fn subspace_from_span(vectors: &[Vector], ambient_dim: usize) -> crate::Result<Subspace> {
    Subspace::from_span(vectors, ambient_dim)
}
