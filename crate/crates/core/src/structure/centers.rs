//! Centers, units and primitive idempotents of subalgebras given as subspaces.

use crate::error::{Error, Result};
use crate::exactfield::{polynomial_roots, MatrixF, Scalar, Subspace, Vector};
use crate::superalg::{MapKind, SuperAlgebra, SuperMap};

fn combination(basis: &[Vector], coeffs: &[Scalar], dim: usize) -> Vector {
    let mut v = vec![Scalar::zero(); dim];
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (x, y) in v.iter_mut().zip(b) {
            *x += &(c * y);
        }
    }
    v
}

/// Elements of `sub` commuting with every element of `sub`.
pub fn subalgebra_center(alg: &SuperAlgebra, sub: &Subspace) -> Subspace {
    let d = alg.dim();
    let basis = sub.basis();
    if basis.is_empty() {
        return Subspace::zero(d);
    }
    // unknown coefficients c with z = Σ c_i b_i and z b_j - b_j z = 0
    let mut rows: Vec<Vector> = Vec::new();
    for bj in basis {
        let cols: Vec<Vector> = basis
            .iter()
            .map(|bi| {
                let l = alg.mul_vec(bi, bj);
                let r = alg.mul_vec(bj, bi);
                l.iter().zip(&r).map(|(a, b)| a - b).collect()
            })
            .collect();
        rows.extend(MatrixF::from_columns(&cols, d).row_vectors());
    }
    let sys = MatrixF::from_rows(rows).expect("rows of equal length");
    let vs: Vec<Vector> = sys.null_vectors().iter().map(|c| combination(basis, c, d)).collect();
    Subspace::span(&vs, d)
}

/// Even vectors of `s`.
pub fn even_part(alg: &SuperAlgebra, s: &Subspace) -> Subspace {
    let d = alg.dim();
    let odd: Vec<Vector> = (0..d).filter(|&i| alg.parity(i) == 1).map(|i| alg.basis_vector(i)).collect();
    let even_space = Subspace::span(&odd, d).annihilator();
    s.intersect(&even_space).expect("same ambient space")
}

/// Identity element of the subalgebra `sub`, if it has one.
pub fn subalgebra_unit(alg: &SuperAlgebra, sub: &Subspace) -> Option<Vector> {
    let d = alg.dim();
    let basis = sub.basis();
    if basis.is_empty() {
        return Some(vec![Scalar::zero(); d]);
    }
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vector = Vec::new();
    for bj in basis {
        let left: Vec<Vector> = basis.iter().map(|bi| alg.mul_vec(bi, bj)).collect();
        let right: Vec<Vector> = basis.iter().map(|bi| alg.mul_vec(bj, bi)).collect();
        for cols in [left, right] {
            rows.extend(MatrixF::from_columns(&cols, d).row_vectors());
            rhs.extend(bj.iter().cloned());
        }
    }
    let sys = MatrixF::from_rows(rows).ok()?;
    sys.solve(&rhs).map(|c| combination(basis, &c, d))
}

/// Inverse of `u` in the algebra, when it exists.
pub fn algebra_inverse(alg: &SuperAlgebra, u: &[Scalar]) -> Option<Vector> {
    let v = alg.left_mul_matrix(u).solve(alg.unit())?;
    (alg.mul_vec(&v, u) == alg.unit()).then_some(v)
}

/// Inner automorphism `x ↦ u x u^{-1}` for an even invertible `u`.
pub fn conjugation(alg: &SuperAlgebra, u: &[Scalar]) -> Result<SuperMap> {
    let inv = algebra_inverse(alg, u).ok_or(Error::Singular)?;
    let action = &alg.left_mul_matrix(u) * &alg.right_mul_matrix(&inv);
    SuperMap::new(alg, action, MapKind::Automorphism)
}

/// Monic minimal polynomial of `x` inside the unital subalgebra with identity
/// `unit`, low degree first.
pub fn minimal_polynomial(alg: &SuperAlgebra, x: &[Scalar], unit: &[Scalar]) -> Vec<Scalar> {
    let d = alg.dim();
    let mut powers: Vec<Vector> = vec![unit.to_vec()];
    loop {
        let next = alg.mul_vec(powers.last().expect("nonempty"), x);
        let a = MatrixF::from_columns(&powers, d);
        if let Some(c) = a.solve(&next) {
            let mut poly: Vec<Scalar> = c.iter().map(|v| -v).collect();
            poly.push(Scalar::one());
            return poly;
        }
        powers.push(next);
    }
}

/// Splits `unit` into primitive idempotents of the commutative semisimple
/// algebra spanned by `z` (which must contain `unit`).
pub fn primitive_idempotents(alg: &SuperAlgebra, z: &Subspace, unit: &[Scalar]) -> Result<Vec<Vector>> {
    let d = alg.dim();
    let mut parts: Vec<Vector> = vec![unit.to_vec()];
    for b in z.basis() {
        let mut next = Vec::new();
        for e in &parts {
            let x = alg.mul_vec(e, b);
            let poly = minimal_polynomial(alg, &x, e);
            let mut roots: Vec<Scalar> = Vec::new();
            for r in polynomial_roots(&poly) {
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
            if roots.len() + 1 != poly.len() {
                return Err(Error::Hypothesis(format!(
                    "minimal polynomial of degree {} does not split into distinct roots over the ambient field",
                    poly.len() - 1
                )));
            }
            if roots.len() == 1 {
                next.push(e.clone());
                continue;
            }
            for (i, c) in roots.iter().enumerate() {
                let mut acc = e.clone();
                for (j, c2) in roots.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let denom = (c - c2).inv()?;
                    let shifted: Vector = x.iter().zip(e).map(|(xi, ei)| &(xi - &(c2 * ei)) * &denom).collect();
                    acc = alg.mul_vec(&acc, &shifted);
                }
                next.push(acc);
            }
        }
        parts = next;
    }
    if parts.iter().any(|p| p.iter().all(Scalar::is_zero)) {
        return Err(Error::Hypothesis("zero idempotent produced".into()));
    }
    debug_assert!(parts.iter().all(|p| p.len() == d));
    Ok(parts)
}

/// Outcome of looking for an invertible matrix in a linear span.
#[derive(Debug, Clone)]
pub struct InvertibleSearch {
    pub found: Option<MatrixF>,
    /// Whether a negative answer is certified: `det` vanishes on a grid
    /// `{0..=s}^w` large enough to force it to be identically zero.
    pub exhaustive: bool,
}

const GRID_CAP: usize = 1 << 14;

pub fn invertible_in_span(basis: &[MatrixF]) -> InvertibleSearch {
    if basis.is_empty() {
        return InvertibleSearch { found: None, exhaustive: true };
    }
    if let Some(m) = crate::superalg::search::find_invertible(basis) {
        return InvertibleSearch { found: Some(m), exhaustive: true };
    }
    let s = basis[0].rows();
    let w = basis.len();
    let side = s + 1;
    let Some(total) = (0..w).try_fold(1usize, |acc, _| acc.checked_mul(side).filter(|&t| t <= GRID_CAP)) else {
        return InvertibleSearch { found: None, exhaustive: false };
    };
    for idx in 0..total {
        let mut rest = idx;
        let mut m = MatrixF::zeros(s, s);
        for b in basis {
            let c = (rest % side) as i64;
            rest /= side;
            if c != 0 {
                m = &m + &b.scale(&Scalar::from_int(c));
            }
        }
        if m.is_invertible() {
            return InvertibleSearch { found: Some(m), exhaustive: true };
        }
    }
    InvertibleSearch { found: None, exhaustive: true }
}

/// Monic minimal polynomial of a square matrix, low degree first.
pub fn minimal_polynomial_of_matrix(a: &MatrixF) -> Vec<Scalar> {
    let n = a.rows();
    let mut powers: Vec<Vector> = vec![crate::superalg::element::flatten_matrix(&MatrixF::identity(n))];
    let mut current = MatrixF::identity(n);
    loop {
        current = &current * a;
        let next = crate::superalg::element::flatten_matrix(&current);
        if let Some(c) = MatrixF::from_columns(&powers, n * n).solve(&next) {
            let mut poly: Vec<Scalar> = c.iter().map(|v| -v).collect();
            poly.push(Scalar::one());
            return poly;
        }
        powers.push(next);
    }
}
