//! The canonical superinvolutions and the antiautomorphism `τ`, plus the
//! structured map families built from them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{MatrixF, Scalar, Vector};
use crate::superalg::algebra::{AlgebraKind, SuperAlgebra};
use crate::superalg::element::{flatten_matrix, unflatten_matrix, Element};
use crate::superalg::map::{MapKind, SuperMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CanonicalKind {
    Osp,
    Trp,
    Exchange,
    Tau,
}

/// `X^τ = (A, -B; C, D)^t` for the `(n|m)` block split.
pub fn tau_matrix(x: &MatrixF, n: usize) -> MatrixF {
    let s = x.rows();
    let mut out = MatrixF::zeros(s, s);
    for i in 0..s {
        for j in 0..s {
            let v = x.get(i, j);
            if v.is_zero() {
                continue;
            }
            out.set(j, i, if i < n && j >= n { -v } else { v.clone() });
        }
    }
    out
}

/// Symplectic block `(0, I_s; -I_s, 0)`.
pub fn symplectic_block(s: usize) -> MatrixF {
    let mut q = MatrixF::zeros(2 * s, 2 * s);
    for i in 0..s {
        q.set(i, s + i, Scalar::one());
        q.set(s + i, i, Scalar::from_int(-1));
    }
    q
}

/// `diag(I_r, Q)` defining the orthosymplectic involution on `M_{r,2s}`.
pub fn osp_gram(r: usize, m: usize) -> Result<MatrixF> {
    if !m.is_multiple_of(2) {
        return Err(Error::Inapplicable(format!("osp needs an even odd-block size, got m = {m}")));
    }
    Ok(MatrixF::identity(r).direct_sum(&symplectic_block(m / 2)))
}

/// `(0, I; I, 0)`, of size `2k`.
pub fn swap_block(k: usize) -> MatrixF {
    let mut s = MatrixF::zeros(2 * k, 2 * k);
    for i in 0..k {
        s.set(i, k + i, Scalar::one());
        s.set(k + i, i, Scalar::one());
    }
    s
}

fn matrix_dims(alg: &SuperAlgebra) -> Result<(usize, usize)> {
    match alg.kind() {
        AlgebraKind::MatrixSuper { n, m } => Ok((*n, *m)),
        other => Err(Error::Inapplicable(format!("expected a matrix superalgebra, got {other}"))),
    }
}

/// Map on `M_{n,m}` given by a matrix function applied to matrix units.
pub fn matrix_map(alg: &SuperAlgebra, claimed: MapKind, f: impl Fn(&MatrixF) -> MatrixF) -> Result<SuperMap> {
    let (n, m) = matrix_dims(alg)?;
    let s = n + m;
    Ok(SuperMap::from_fn(alg, claimed, |idx| flatten_matrix(&f(&MatrixF::unit(s, idx / s, idx % s)))))
}

pub fn tau(alg: &SuperAlgebra) -> Result<SuperMap> {
    let (n, _) = matrix_dims(alg)?;
    matrix_map(alg, MapKind::Antiautomorphism, |x| tau_matrix(x, n))
}

/// `X ↦ Φ^{-1} X^τ Φ`.
pub fn conjugated_tau(alg: &SuperAlgebra, phi: &MatrixF) -> Result<SuperMap> {
    let (n, _) = matrix_dims(alg)?;
    let inv = phi.inverse()?;
    matrix_map(alg, MapKind::Antiautomorphism, |x| &(&inv * &tau_matrix(x, n)) * phi)
}

/// `X ↦ Φ^{-1} X^t Φ`, an antiautomorphism of the ungraded matrix algebra.
pub fn conjugated_transpose(alg: &SuperAlgebra, phi: &MatrixF) -> Result<SuperMap> {
    let inv = phi.inverse()?;
    matrix_map(alg, MapKind::Antiautomorphism, |x| &(&inv * &x.transpose()) * phi)
}

/// Inner automorphism `X ↦ U X U^{-1}`.
pub fn inner(alg: &SuperAlgebra, u: &MatrixF) -> Result<SuperMap> {
    let inv = u.inverse()?;
    matrix_map(alg, MapKind::Automorphism, |x| &(u * x) * &inv)
}

pub fn osp(alg: &SuperAlgebra) -> Result<SuperMap> {
    let (n, m) = matrix_dims(alg)?;
    conjugated_tau(alg, &osp_gram(n, m)?)
}

pub fn trp(alg: &SuperAlgebra) -> Result<SuperMap> {
    let (n, m) = matrix_dims(alg)?;
    if n != m {
        return Err(Error::Inapplicable(format!("trp needs n = m, got ({n}, {m})")));
    }
    let k = n;
    matrix_map(alg, MapKind::Antiautomorphism, |x| {
        // (X, Y; Z, T) ↦ (T^t, -Y^t; Z^t, X^t)
        let xb = x.block(0, 0, k, k);
        let yb = x.block(0, k, k, k);
        let zb = x.block(k, 0, k, k);
        let tb = x.block(k, k, k, k);
        let mut out = MatrixF::zeros(2 * k, 2 * k);
        out.set_block(0, 0, &tb.transpose());
        out.set_block(0, k, &(-&yb.transpose()));
        out.set_block(k, 0, &zb.transpose());
        out.set_block(k, k, &xb.transpose());
        out
    })
}

/// `(a, b) ↦ (b, a)` on `A ⊕ A^sop` (or on `A ⊕ A`).
pub fn exchange(alg: &SuperAlgebra) -> Result<SuperMap> {
    let (first, second) = alg.halves().ok_or_else(|| Error::Inapplicable("exchange needs a pair algebra".into()))?;
    if first.len() != second.len() {
        return Err(Error::Inapplicable("exchange needs equal halves".into()));
    }
    let d = first.len();
    Ok(SuperMap::from_fn(alg, MapKind::Antiautomorphism, |j| alg.basis_vector(if j < d { j + d } else { j - d })))
}

/// `(x, y) ↦ (φ₀(x), φ₀(y))`.
pub fn pair_type1(alg: &SuperAlgebra, phi0: &SuperMap) -> Result<SuperMap> {
    pair_map(alg, phi0, false, MapKind::Automorphism)
}

/// `(x, y) ↦ (φ₀(y), φ₀(x))`.
pub fn pair_type2(alg: &SuperAlgebra, phi0: &SuperMap) -> Result<SuperMap> {
    pair_map(alg, phi0, true, MapKind::Automorphism)
}

/// Componentwise map `(x, y) ↦ (f(x), g(y))` on a pair or product algebra.
pub fn componentwise(alg: &SuperAlgebra, f: &SuperMap, g: &SuperMap, claimed: MapKind) -> Result<SuperMap> {
    let (first, second) = alg.halves().ok_or(Error::AlgebraMismatch)?;
    if f.algebra().dim() != first.len() || g.algebra().dim() != second.len() {
        return Err(Error::AlgebraMismatch);
    }
    let d = first.len();
    Ok(SuperMap::from_fn(alg, claimed, |j| {
        let mut v = vec![Scalar::zero(); alg.dim()];
        if j < d {
            for (i, x) in f.image_of_basis(j).into_iter().enumerate() {
                v[i] = x;
            }
        } else {
            for (i, x) in g.image_of_basis(j - d).into_iter().enumerate() {
                v[d + i] = x;
            }
        }
        v
    }))
}

fn pair_map(alg: &SuperAlgebra, phi0: &SuperMap, swap: bool, claimed: MapKind) -> Result<SuperMap> {
    let base = alg.base().ok_or_else(|| Error::Inapplicable("expected A + A^sop".into()))?;
    if phi0.algebra() != &base {
        return Err(Error::AlgebraMismatch);
    }
    let d = base.dim();
    Ok(SuperMap::from_fn(alg, claimed, |j| {
        let (src, off) = if j < d { (j, 0) } else { (j - d, d) };
        let target = if swap { d - off } else { off };
        let mut v = vec![Scalar::zero(); 2 * d];
        for (i, x) in phi0.image_of_basis(src).into_iter().enumerate() {
            v[target + i] = x;
        }
        v
    }))
}

/// `X + tY ↦ ψ₀(X) + λ t ψ₀(Y)` on `Q(n)`, with `ψ₀` acting on flattened `M_n`.
pub fn q_map(alg: &SuperAlgebra, psi0: &MatrixF, lambda: &Scalar, claimed: MapKind) -> Result<SuperMap> {
    let AlgebraKind::QType { n } = alg.kind() else { return Err(Error::AlgebraMismatch) };
    let h = n * n;
    if psi0.rows() != h || psi0.cols() != h {
        return Err(Error::DimensionMismatch { expected: h, found: psi0.rows() });
    }
    Ok(SuperMap::from_fn(alg, claimed, |j| {
        let mut v = vec![Scalar::zero(); 2 * h];
        if j < h {
            for i in 0..h {
                v[i] = psi0.get(i, j).clone();
            }
        } else {
            for i in 0..h {
                v[h + i] = lambda * psi0.get(i, j - h);
            }
        }
        v
    }))
}

/// Action matrix on flattened `M_n` of a matrix function.
pub fn flat_matrix_operator(size: usize, f: impl Fn(&MatrixF) -> MatrixF) -> MatrixF {
    let cols: Vec<Vector> = (0..size * size).map(|idx| flatten_matrix(&f(&MatrixF::unit(size, idx / size, idx % size)))).collect();
    MatrixF::from_columns(&cols, size * size)
}

/// Interprets a flattened block of coordinates as a square matrix.
pub fn block_as_matrix(v: &[Scalar], size: usize) -> MatrixF {
    unflatten_matrix(v, size)
}

pub fn canonical_map(kind: CanonicalKind, alg: &SuperAlgebra) -> Result<SuperMap> {
    match kind {
        CanonicalKind::Osp => osp(alg),
        CanonicalKind::Trp => trp(alg),
        CanonicalKind::Exchange => exchange(alg),
        CanonicalKind::Tau => tau(alg),
    }
}

pub fn apply_canonical_map(kind: CanonicalKind, x: &Element) -> Result<Element> {
    canonical_map(kind, x.algebra())?.apply(x)
}
