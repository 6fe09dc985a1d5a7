//! Two small structural facts used by the identity-component analysis,
//! available as exact checks.

use crate::abgroup::GroupElem;
use crate::error::Result;
use crate::exactfield::{Subspace, Vector};
use crate::gradings::Grading;
use crate::superalg::{SuperAlgebra, SuperMap};

/// `x R y` as a subspace.
pub fn sandwich(alg: &SuperAlgebra, x: &[crate::Scalar], y: &[crate::Scalar]) -> Subspace {
    let vs: Vec<Vector> = (0..alg.dim()).map(|k| alg.mul_vec(&alg.mul_vec(x, &alg.basis_vector(k)), y)).collect();
    Subspace::span(&vs, alg.dim())
}

/// `φ(xRy) ⊆ φ(y) R φ(x)`.
pub fn antiauto_sandwich_holds(phi: &SuperMap, x: &[crate::Scalar], y: &[crate::Scalar]) -> bool {
    let alg = phi.algebra();
    let img = sandwich(alg, x, y).image(phi.action());
    let target = sandwich(alg, &phi.apply_vec(y), &phi.apply_vec(x));
    target.contains_subspace(&img)
}

/// The degree `g` with `e₁ R e₂ ⊆ R_g`, if the corner is homogeneous.
pub fn corner_degree(gamma: &Grading, e1: &[crate::Scalar], e2: &[crate::Scalar]) -> Result<Option<GroupElem>> {
    let group = gamma.group()?;
    let corner = sandwich(gamma.algebra(), e1, e2);
    if corner.is_zero() {
        return Ok(None);
    }
    Ok(gamma.components().iter().position(|c| c.contains_subspace(&corner)).map(|i| group.element(i)))
}
