use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{MatrixF, Scalar, Subspace, Vector};
use crate::superalg::algebra::SuperAlgebra;
use crate::superalg::element::Element;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapKind {
    Automorphism,
    Antiautomorphism,
    Unchecked,
}

/// Linear operator on a superalgebra; column `j` of `action` is the image of
/// basis element `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperMap {
    alg: SuperAlgebra,
    action: MatrixF,
    claimed: MapKind,
}

impl std::fmt::Debug for SuperMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SuperMap({:?}, {:?}) {:?}", self.alg.kind(), self.claimed, self.action)
    }
}

impl SuperMap {
    pub fn new(alg: &SuperAlgebra, action: MatrixF, claimed: MapKind) -> Result<Self> {
        if action.rows() != alg.dim() || action.cols() != alg.dim() {
            return Err(Error::DimensionMismatch { expected: alg.dim(), found: action.rows() });
        }
        Ok(SuperMap { alg: alg.clone(), action, claimed })
    }

    /// Builds the map from the images of basis elements.
    pub fn from_images(alg: &SuperAlgebra, images: &[Vector], claimed: MapKind) -> Result<Self> {
        if images.len() != alg.dim() {
            return Err(Error::DimensionMismatch { expected: alg.dim(), found: images.len() });
        }
        SuperMap::new(alg, MatrixF::from_columns(images, alg.dim()), claimed)
    }

    pub fn from_fn(alg: &SuperAlgebra, claimed: MapKind, f: impl Fn(usize) -> Vector) -> Self {
        let images: Vec<Vector> = (0..alg.dim()).map(f).collect();
        SuperMap::from_images(alg, &images, claimed).expect("images of the right length")
    }

    pub fn identity(alg: &SuperAlgebra) -> Self {
        SuperMap { alg: alg.clone(), action: MatrixF::identity(alg.dim()), claimed: MapKind::Automorphism }
    }

    /// The parity automorphism `x ↦ (-1)^{|x|} x`.
    pub fn parity_automorphism(alg: &SuperAlgebra) -> Self {
        let diag: Vec<Scalar> = alg.parities().iter().map(|&p| Scalar::from_int(if p == 0 { 1 } else { -1 })).collect();
        SuperMap { alg: alg.clone(), action: MatrixF::diagonal(&diag), claimed: MapKind::Automorphism }
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.alg
    }

    pub fn action(&self) -> &MatrixF {
        &self.action
    }

    pub fn claimed(&self) -> MapKind {
        self.claimed
    }

    pub fn with_claim(mut self, claimed: MapKind) -> Self {
        self.claimed = claimed;
        self
    }

    pub fn apply_vec(&self, v: &[Scalar]) -> Vector {
        self.action.apply(v)
    }

    pub fn apply(&self, x: &Element) -> Result<Element> {
        if x.algebra() != &self.alg {
            return Err(Error::AlgebraMismatch);
        }
        Element::new(&self.alg, self.apply_vec(x.coords()))
    }

    pub fn image_of_basis(&self, j: usize) -> Vector {
        self.action.column(j)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SuperMap) -> SuperMap {
        let claimed = match (self.claimed, other.claimed) {
            (MapKind::Automorphism, MapKind::Automorphism) | (MapKind::Antiautomorphism, MapKind::Antiautomorphism) => {
                MapKind::Automorphism
            }
            (MapKind::Automorphism, MapKind::Antiautomorphism) | (MapKind::Antiautomorphism, MapKind::Automorphism) => {
                MapKind::Antiautomorphism
            }
            _ => MapKind::Unchecked,
        };
        SuperMap { alg: self.alg.clone(), action: &self.action * &other.action, claimed }
    }

    pub fn pow(&self, k: u32) -> SuperMap {
        let mut acc = SuperMap::identity(&self.alg);
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    pub fn inverse(&self) -> Result<SuperMap> {
        Ok(SuperMap { alg: self.alg.clone(), action: self.action.inverse()?, claimed: self.claimed })
    }

    pub fn is_identity(&self) -> bool {
        self.action.is_identity()
    }

    pub fn commutes_with(&self, other: &SuperMap) -> bool {
        &self.action * &other.action == &other.action * &self.action
    }

    pub fn is_parity_preserving(&self) -> bool {
        let d = self.alg.dim();
        (0..d).all(|j| (0..d).all(|i| self.action.get(i, j).is_zero() || self.alg.parity(i) == self.alg.parity(j)))
    }

    pub fn preserves(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|v| s.contains(&self.apply_vec(v)))
    }

    /// Scales the action on the even and odd parts separately.
    pub fn scaled(&self, c: &Scalar) -> SuperMap {
        SuperMap { alg: self.alg.clone(), action: self.action.scale(c), claimed: MapKind::Unchecked }
    }

    /// Restriction to a subspace it preserves, written in that subspace's echelon basis.
    pub fn restrict(&self, s: &Subspace) -> Result<MatrixF> {
        let cols: Vec<Vector> = s
            .basis()
            .iter()
            .map(|v| s.coordinates(&self.apply_vec(v)).ok_or_else(|| Error::Precondition("subspace is not invariant".into())))
            .collect::<Result<_>>()?;
        Ok(MatrixF::from_columns(&cols, s.dim()))
    }
}
