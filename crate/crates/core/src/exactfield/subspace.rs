use crate::error::{Error, Result};
use crate::exactfield::matrix::{rref_in_place, MatrixF};
use crate::exactfield::scalar::Scalar;

pub type Vector = Vec<Scalar>;

/// Linear subspace of `F^ambient_dim`, stored as the nonzero rows of its
/// reduced row echelon form. Equal subspaces have identical representations.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| unit_vector(ambient_dim, i)).collect();
        Subspace { ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    pub fn from_span(vectors: &[Vector], ambient_dim: usize) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch { expected: ambient_dim, found: v.len() });
            }
        }
        let mut rows = vectors.to_vec();
        let pivots = rref_in_place(&mut rows, ambient_dim);
        rows.truncate(pivots.len());
        Ok(Subspace { ambient_dim, basis: rows, pivots })
    }

    /// Span of the given vectors; panics on length mismatch.
    pub fn span(vectors: &[Vector], ambient_dim: usize) -> Self {
        Subspace::from_span(vectors, ambient_dim).expect("vector length mismatch")
    }

    /// Null space of `m` as a subspace of `F^{m.cols}`.
    pub fn kernel(m: &MatrixF) -> Self {
        Subspace::span(&m.null_vectors(), m.cols())
    }

    /// Vectors `v` with `f(v) = c·v` where `f` is a square matrix.
    pub fn eigenspace(f: &MatrixF, c: &Scalar) -> Self {
        Subspace::kernel(&(f - &MatrixF::scalar_matrix(f.rows(), c)))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after elimination against the echelon basis.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut w = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, y) in w.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        self.reduce(v).iter().all(Scalar::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        self.contains(v).then(|| self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::from_span(&vs, self.ambient_dim)
    }

    /// Linear functionals vanishing on the subspace (dot-product pairing).
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient_dim);
        }
        let m = MatrixF::from_rows(self.basis.clone()).expect("echelon rows");
        Subspace::kernel(&m)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.is_full() {
            return Ok(other.clone());
        }
        if other.is_full() {
            return Ok(self.clone());
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let mut rows = self.annihilator().basis;
        rows.extend(other.annihilator().basis);
        let m = MatrixF::from_rows(rows).expect("annihilator rows");
        Ok(Subspace::kernel(&m))
    }

    /// Image of the subspace under a linear map given as a matrix acting on columns.
    pub fn image(&self, f: &MatrixF) -> Subspace {
        let vs: Vec<Vector> = self.basis.iter().map(|v| f.apply(v)).collect();
        Subspace::span(&vs, f.rows())
    }

    /// Matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> MatrixF {
        MatrixF::from_columns(&self.basis, self.ambient_dim)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {})", self.dim(), self.ambient_dim)?;
        for v in &self.basis {
            let parts: Vec<String> = v.iter().map(|s| s.to_string()).collect();
            write!(f, "\n  [{}]", parts.join(", "))?;
        }
        Ok(())
    }
}

/// Incremental echelon basis used by closure computations.
#[derive(Clone, Debug)]
pub struct EchelonSpan {
    space: Subspace,
}

impl EchelonSpan {
    pub fn new(ambient_dim: usize) -> Self {
        EchelonSpan { space: Subspace::zero(ambient_dim) }
    }

    /// Adds `v`; returns `true` when the span grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut w = self.space.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else { return false };
        let inv = w[p].inv().expect("nonzero pivot");
        for x in w.iter_mut() {
            *x = &*x * &inv;
        }
        for b in self.space.basis.iter_mut() {
            if b[p].is_zero() {
                continue;
            }
            let f = b[p].clone();
            for (x, y) in b.iter_mut().zip(&w) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
        let pos = self.space.pivots.partition_point(|&q| q < p);
        self.space.pivots.insert(pos, p);
        self.space.basis.insert(pos, w);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.space.contains(v)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn as_subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn into_subspace(self) -> Subspace {
        self.space
    }
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// Whether the subspaces form an internal direct sum equal to the whole space.
pub fn is_direct_decomposition(parts: &[Subspace], ambient_dim: usize) -> bool {
    let total: usize = parts.iter().map(Subspace::dim).sum();
    if total != ambient_dim {
        return false;
    }
    let all: Vec<Vector> = parts.iter().flat_map(|s| s.basis().iter().cloned()).collect();
    Subspace::span(&all, ambient_dim).dim() == ambient_dim
}
