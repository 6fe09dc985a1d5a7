use std::fmt;

use crate::error::{Error, Result};
use crate::exactfield::{MatrixF, Scalar, Vector};
use crate::superalg::algebra::{AlgebraKind, SuperAlgebra};

/// An element of a superalgebra in flattened coordinates.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    alg: SuperAlgebra,
    coords: Vector,
}

pub fn flatten_matrix(m: &MatrixF) -> Vector {
    m.entries().to_vec()
}

pub fn unflatten_matrix(v: &[Scalar], size: usize) -> MatrixF {
    MatrixF::from_entries(size, size, v.to_vec()).expect("square coordinate block")
}

impl Element {
    pub fn new(alg: &SuperAlgebra, coords: Vector) -> Result<Self> {
        if coords.len() != alg.dim() {
            return Err(Error::DimensionMismatch { expected: alg.dim(), found: coords.len() });
        }
        Ok(Element { alg: alg.clone(), coords })
    }

    pub fn zero(alg: &SuperAlgebra) -> Self {
        Element { alg: alg.clone(), coords: vec![Scalar::zero(); alg.dim()] }
    }

    pub fn one(alg: &SuperAlgebra) -> Self {
        Element { alg: alg.clone(), coords: alg.unit().to_vec() }
    }

    pub fn basis(alg: &SuperAlgebra, i: usize) -> Self {
        Element { alg: alg.clone(), coords: alg.basis_vector(i) }
    }

    /// Element of `M_{n,m}` given by its matrix.
    pub fn from_matrix(alg: &SuperAlgebra, m: &MatrixF) -> Result<Self> {
        match alg.kind() {
            AlgebraKind::MatrixSuper { n, m: k } if m.rows() == n + k && m.is_square() => {
                Ok(Element { alg: alg.clone(), coords: flatten_matrix(m) })
            }
            AlgebraKind::MatrixSuper { n, m: k } => Err(Error::DimensionMismatch { expected: n + k, found: m.rows() }),
            _ => Err(Error::AlgebraMismatch),
        }
    }

    /// `X + tY` in `Q(n)`.
    pub fn q(alg: &SuperAlgebra, x: &MatrixF, y: &MatrixF) -> Result<Self> {
        let AlgebraKind::QType { n } = alg.kind() else { return Err(Error::AlgebraMismatch) };
        if x.rows() != *n || y.rows() != *n || !x.is_square() || !y.is_square() {
            return Err(Error::DimensionMismatch { expected: *n, found: x.rows() });
        }
        let mut coords = flatten_matrix(x);
        coords.extend(flatten_matrix(y));
        Ok(Element { alg: alg.clone(), coords })
    }

    /// `(a, b)` in a pair or product algebra.
    pub fn pair(alg: &SuperAlgebra, a: &Element, b: &Element) -> Result<Self> {
        let (first, second) = alg.halves().ok_or(Error::AlgebraMismatch)?;
        if a.coords.len() != first.len() || b.coords.len() != second.len() {
            return Err(Error::AlgebraMismatch);
        }
        let mut coords = a.coords.clone();
        coords.extend(b.coords.iter().cloned());
        Ok(Element { alg: alg.clone(), coords })
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.alg
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vector {
        self.coords
    }

    pub fn as_matrix(&self) -> Option<MatrixF> {
        match self.alg.kind() {
            AlgebraKind::MatrixSuper { n, m } => Some(unflatten_matrix(&self.coords, n + m)),
            _ => None,
        }
    }

    /// `(X, Y)` with the element equal to `X + tY`.
    pub fn as_q(&self) -> Option<(MatrixF, MatrixF)> {
        match self.alg.kind() {
            AlgebraKind::QType { n } => {
                let h = n * n;
                Some((unflatten_matrix(&self.coords[..h], *n), unflatten_matrix(&self.coords[h..], *n)))
            }
            _ => None,
        }
    }

    pub fn as_pair(&self) -> Option<(Element, Element)> {
        let (first, second) = self.alg.halves()?;
        let (l, r) = match self.alg.kind() {
            AlgebraKind::PairSop { base } => ((**base).clone(), (**base).clone()),
            AlgebraKind::Product { left, right } => ((**left).clone(), (**right).clone()),
            _ => return None,
        };
        let la = SuperAlgebra::new(l).ok()?;
        let ra = SuperAlgebra::new(r).ok()?;
        Some((
            Element { alg: la, coords: self.coords[first].to_vec() },
            Element { alg: ra, coords: self.coords[second].to_vec() },
        ))
    }

    pub fn mul(&self, other: &Element) -> Result<Element> {
        if self.alg != other.alg {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Element { alg: self.alg.clone(), coords: self.alg.mul_vec(&self.coords, &other.coords) })
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        if self.alg != other.alg {
            return Err(Error::AlgebraMismatch);
        }
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Ok(Element { alg: self.alg.clone(), coords })
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element { alg: self.alg.clone(), coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn parity(&self) -> Option<u8> {
        self.alg.vector_parity(&self.coords)
    }
}

/// `E_ij` of the matrix superalgebra (zero-based).
pub fn matrix_unit(alg: &SuperAlgebra, i: usize, j: usize) -> Element {
    let s = alg.matrix_size().expect("matrix algebra");
    Element::from_matrix(alg, &MatrixF::unit(s, i, j)).expect("matrix unit")
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|s| s.to_string()).collect();
        write!(f, "{}[{}]", self.alg.kind(), parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_units_multiply() {
        let m = SuperAlgebra::matrix(1, 1);
        let p = matrix_unit(&m, 0, 1).mul(&matrix_unit(&m, 1, 0)).unwrap();
        assert_eq!(p, matrix_unit(&m, 0, 0));
    }

    #[test]
    fn t_squared_is_one() {
        let q = SuperAlgebra::q(1);
        let t = Element::q(&q, &MatrixF::zeros(1, 1), &MatrixF::identity(1)).unwrap();
        assert_eq!(t.mul(&t).unwrap(), Element::one(&q));
    }

    #[test]
    fn sop_odd_product_sign() {
        let a = SuperAlgebra::matrix(1, 1);
        let r = SuperAlgebra::pair_sop(&a);
        let z = Element::zero(&a);
        let x = Element::pair(&r, &z, &matrix_unit(&a, 0, 1)).unwrap();
        let y = Element::pair(&r, &z, &matrix_unit(&a, 1, 0)).unwrap();
        let expected = Element::pair(&r, &z, &matrix_unit(&a, 1, 1).scale(&Scalar::from_int(-1))).unwrap();
        assert_eq!(x.mul(&y).unwrap(), expected);
    }

    #[test]
    fn mismatched_algebras_rejected() {
        let a = Element::one(&SuperAlgebra::matrix(1, 1));
        let b = Element::one(&SuperAlgebra::matrix(2, 0));
        assert_eq!(a.mul(&b), Err(Error::AlgebraMismatch));
    }
}
