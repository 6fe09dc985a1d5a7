use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{MatrixF, Scalar, Vector};

/// Structure descriptor of a superalgebra.
///
/// Flattening conventions: matrix units `E_ij` are row-major; `Q(n)` lists
/// the `X` part before the `tY` part; pairs list the first component first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum AlgebraKind {
    MatrixSuper { n: usize, m: usize },
    #[serde(rename = "q")]
    QType { n: usize },
    PairSop { base: Box<AlgebraKind> },
    /// Ordinary direct sum of two superalgebras.
    Product { left: Box<AlgebraKind>, right: Box<AlgebraKind> },
}

impl AlgebraKind {
    pub fn dim(&self) -> usize {
        match self {
            AlgebraKind::MatrixSuper { n, m } => (n + m) * (n + m),
            AlgebraKind::QType { n } => 2 * n * n,
            AlgebraKind::PairSop { base } => 2 * base.dim(),
            AlgebraKind::Product { left, right } => left.dim() + right.dim(),
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::MatrixSuper { n, m } => write!(f, "M_{{{n},{m}}}"),
            AlgebraKind::QType { n } => write!(f, "Q({n})"),
            AlgebraKind::PairSop { base } => write!(f, "{base} + {base}^sop"),
            AlgebraKind::Product { left, right } => write!(f, "{left} x {right}"),
        }
    }
}

/// Structure constants: the product of basis elements `i` and `j` is
/// `±e_k` or zero.
#[derive(Debug)]
struct Data {
    kind: AlgebraKind,
    dim: usize,
    parity: Vec<u8>,
    table: Vec<Option<(u32, bool)>>,
    unit: Vector,
}

/// Finite-dimensional associative superalgebra with a monomial basis.
#[derive(Clone)]
pub struct SuperAlgebra {
    data: Arc<Data>,
}

impl PartialEq for SuperAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data.kind == other.data.kind
    }
}

impl Eq for SuperAlgebra {}

impl fmt::Debug for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperAlgebra({})", self.data.kind)
    }
}

type Parts = (usize, Vec<u8>, Vec<Option<(u32, bool)>>);

fn matrix_parts(n: usize, m: usize) -> Parts {
    let s = n + m;
    let dim = s * s;
    let parity = (0..dim).map(|idx| ((idx / s < n) != (idx % s < n)) as u8).collect();
    let mut table = vec![None; dim * dim];
    for i in 0..s {
        for j in 0..s {
            for l in 0..s {
                table[(i * s + j) * dim + j * s + l] = Some(((i * s + l) as u32, false));
            }
        }
    }
    (dim, parity, table)
}

fn q_parts(n: usize) -> Parts {
    let half = n * n;
    let dim = 2 * half;
    let parity = (0..dim).map(|idx| (idx >= half) as u8).collect();
    let mut table = vec![None; dim * dim];
    for a in 0..2 {
        for b in 0..2 {
            for i in 0..n {
                for j in 0..n {
                    for l in 0..n {
                        let x = a * half + i * n + j;
                        let y = b * half + j * n + l;
                        let z = ((a + b) % 2) * half + i * n + l;
                        table[x * dim + y] = Some((z as u32, false));
                    }
                }
            }
        }
    }
    (dim, parity, table)
}

fn pair_parts(base: &SuperAlgebra, sop: bool, right: Option<&SuperAlgebra>) -> Parts {
    let right = right.unwrap_or(base);
    let (d1, d2) = (base.dim(), right.dim());
    let dim = d1 + d2;
    let mut parity = base.data.parity.clone();
    parity.extend(&right.data.parity);
    let mut table = vec![None; dim * dim];
    for i in 0..d1 {
        for j in 0..d1 {
            table[i * dim + j] = base.data.table[i * d1 + j];
        }
    }
    for i in 0..d2 {
        for j in 0..d2 {
            let entry = if sop {
                // a ∘ b = (-1)^{|a||b|} b a
                let sign = right.data.parity[i] & right.data.parity[j] == 1;
                right.data.table[j * d2 + i].map(|(k, neg)| (k, neg ^ sign))
            } else {
                right.data.table[i * d2 + j]
            };
            table[(d1 + i) * dim + d1 + j] = entry.map(|(k, neg)| (k + d1 as u32, neg));
        }
    }
    (dim, parity, table)
}

impl SuperAlgebra {
    pub fn new(kind: AlgebraKind) -> Result<Self> {
        let (dim, parity, table) = match &kind {
            AlgebraKind::MatrixSuper { n, m } => {
                if n + m == 0 {
                    return Err(Error::Precondition("matrix size must be positive".into()));
                }
                matrix_parts(*n, *m)
            }
            AlgebraKind::QType { n } => {
                if *n == 0 {
                    return Err(Error::Precondition("Q(n) needs n >= 1".into()));
                }
                q_parts(*n)
            }
            AlgebraKind::PairSop { base } => pair_parts(&SuperAlgebra::new((**base).clone())?, true, None),
            AlgebraKind::Product { left, right } => pair_parts(
                &SuperAlgebra::new((**left).clone())?,
                false,
                Some(&SuperAlgebra::new((**right).clone())?),
            ),
        };
        let mut alg = Data { kind, dim, parity, table, unit: Vec::new() };
        alg.unit = find_unit(&alg);
        Ok(SuperAlgebra { data: Arc::new(alg) })
    }

    pub fn matrix(n: usize, m: usize) -> Self {
        SuperAlgebra::new(AlgebraKind::MatrixSuper { n, m }).expect("valid matrix superalgebra")
    }

    pub fn q(n: usize) -> Self {
        SuperAlgebra::new(AlgebraKind::QType { n }).expect("valid Q(n)")
    }

    pub fn pair_sop(base: &SuperAlgebra) -> Self {
        SuperAlgebra::new(AlgebraKind::PairSop { base: Box::new(base.kind().clone()) }).expect("valid base")
    }

    pub fn product(left: &SuperAlgebra, right: &SuperAlgebra) -> Self {
        SuperAlgebra::new(AlgebraKind::Product {
            left: Box::new(left.kind().clone()),
            right: Box::new(right.kind().clone()),
        })
        .expect("valid factors")
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.data.kind
    }

    pub fn dim(&self) -> usize {
        self.data.dim
    }

    pub fn parity(&self, i: usize) -> u8 {
        self.data.parity[i]
    }

    pub fn parities(&self) -> &[u8] {
        &self.data.parity
    }

    /// Base algebra of a pair algebra.
    pub fn base(&self) -> Option<SuperAlgebra> {
        match self.kind() {
            AlgebraKind::PairSop { base } => SuperAlgebra::new((**base).clone()).ok(),
            _ => None,
        }
    }

    /// Matrix size `n + m` for `M_{n,m}`, `n` for `Q(n)`.
    pub fn matrix_size(&self) -> Option<usize> {
        match self.kind() {
            AlgebraKind::MatrixSuper { n, m } => Some(n + m),
            AlgebraKind::QType { n } => Some(*n),
            _ => None,
        }
    }

    /// `e_i e_j` as an optional signed basis index.
    pub fn basis_product(&self, i: usize, j: usize) -> Option<(usize, bool)> {
        self.data.table[i * self.data.dim + j].map(|(k, neg)| (k as usize, neg))
    }

    pub fn mul_vec(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let d = self.dim();
        let mut out = vec![Scalar::zero(); d];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                if let Some((k, neg)) = self.basis_product(i, j) {
                    let p = x * y;
                    if neg {
                        out[k] -= &p;
                    } else {
                        out[k] += &p;
                    }
                }
            }
        }
        out
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.data.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        crate::exactfield::unit_vector(self.dim(), i)
    }

    /// Parity of a vector when it is homogeneous (zero counts as even).
    pub fn vector_parity(&self, v: &[Scalar]) -> Option<u8> {
        let mut p = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match p {
                None => p = Some(self.parity(i)),
                Some(q) if q != self.parity(i) => return None,
                _ => {}
            }
        }
        Some(p.unwrap_or(0))
    }

    /// Splits `v` into its even and odd parts.
    pub fn parity_split(&self, v: &[Scalar]) -> (Vector, Vector) {
        let mut even = vec![Scalar::zero(); v.len()];
        let mut odd = vec![Scalar::zero(); v.len()];
        for (i, x) in v.iter().enumerate() {
            if self.parity(i) == 0 {
                even[i] = x.clone();
            } else {
                odd[i] = x.clone();
            }
        }
        (even, odd)
    }

    /// Left multiplication operator `v ↦ x v`.
    pub fn left_mul_matrix(&self, x: &[Scalar]) -> MatrixF {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul_vec(x, &self.basis_vector(j))).collect();
        MatrixF::from_columns(&cols, self.dim())
    }

    /// Right multiplication operator `v ↦ v x`.
    pub fn right_mul_matrix(&self, x: &[Scalar]) -> MatrixF {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul_vec(&self.basis_vector(j), x)).collect();
        MatrixF::from_columns(&cols, self.dim())
    }

    /// Whether the structure constants are associative (monomial check).
    pub fn is_associative(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let left = ij.and_then(|(a, s)| self.basis_product(a, k).map(|(b, t)| (b, s ^ t)));
                    let right = self.basis_product(j, k).and_then(|(a, s)| self.basis_product(i, a).map(|(b, t)| (b, s ^ t)));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether `R^2 ≠ 0`.
    pub fn square_nonzero(&self) -> bool {
        self.data.table.iter().any(Option::is_some)
    }

    /// Basis indices of the first and second ideals of a pair or product.
    pub fn halves(&self) -> Option<(std::ops::Range<usize>, std::ops::Range<usize>)> {
        match self.kind() {
            AlgebraKind::PairSop { base } => {
                let d = base.dim();
                Some((0..d, d..2 * d))
            }
            AlgebraKind::Product { left, .. } => {
                let d = left.dim();
                Some((0..d, d..self.dim()))
            }
            _ => None,
        }
    }
}

fn find_unit(alg: &Data) -> Vector {
    let d = alg.dim;
    // unit solves u e_j = e_j for all j; with monomial constants it is a signed sum of idempotent basis elements
    let mut u = vec![Scalar::zero(); d];
    for i in 0..d {
        if let Some((k, neg)) = alg.table[i * d + i] {
            if k as usize == i {
                u[i] = if neg { Scalar::from_int(-1) } else { Scalar::one() };
            }
        }
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dims_and_parities() {
        let m = SuperAlgebra::matrix(1, 2);
        assert_eq!(m.dim(), 9);
        assert_eq!(m.parities().iter().filter(|&&p| p == 1).count(), 4);
        let q = SuperAlgebra::q(2);
        assert_eq!(q.dim(), 8);
        let p = SuperAlgebra::pair_sop(&SuperAlgebra::matrix(1, 1));
        assert_eq!(p.dim(), 8);
    }

    #[test]
    fn all_constructions_associative() {
        for alg in [
            SuperAlgebra::matrix(1, 1),
            SuperAlgebra::matrix(2, 1),
            SuperAlgebra::q(2),
            SuperAlgebra::pair_sop(&SuperAlgebra::matrix(1, 1)),
            SuperAlgebra::pair_sop(&SuperAlgebra::q(1)),
            SuperAlgebra::product(&SuperAlgebra::matrix(1, 1), &SuperAlgebra::matrix(1, 1)),
        ] {
            assert!(alg.is_associative(), "{alg:?}");
        }
    }

    #[test]
    fn unit_is_two_sided() {
        for alg in [SuperAlgebra::matrix(2, 1), SuperAlgebra::q(2), SuperAlgebra::pair_sop(&SuperAlgebra::q(1))] {
            for j in 0..alg.dim() {
                let e = alg.basis_vector(j);
                assert_eq!(alg.mul_vec(alg.unit(), &e), e);
                assert_eq!(alg.mul_vec(&e, alg.unit()), e);
            }
        }
    }
}
