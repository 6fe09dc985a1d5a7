use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{MatrixF, Scalar, Subspace, Vector};
use crate::gradings::Grading;
use crate::structure::centers::{even_part, invertible_in_span, primitive_idempotents, subalgebra_center, subalgebra_unit};
use crate::superalg::canonical::{osp_gram, swap_block, tau_matrix};
use crate::superalg::element::{flatten_matrix, unflatten_matrix};
use crate::superalg::{AlgebraKind, SuperAlgebra, SuperMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    MatrixOsp,
    MatrixTrp,
    PairExchange,
    QPairExchange,
}

#[derive(Debug, Clone)]
pub struct DecompositionBlock {
    /// `B_i = e_i R_e`.
    pub subspace: Subspace,
    /// Central idempotent `e_i`.
    pub idempotent: Vector,
    pub kind: BlockKind,
    /// `(s, r)` of the simple summand `M_{s,r}`, or `(s, s)` for `Q(s)`.
    pub sizes: (usize, usize),
    /// Dimension of the symmetric part of the restricted involution.
    pub symmetric_dim: usize,
    /// Canonical `S_i` for the kind.
    pub canonical: MatrixF,
    /// `S e_i` for the solved `S` when `R` is a matrix superalgebra.
    pub solved: Option<MatrixF>,
}

#[derive(Debug, Clone)]
pub struct IdentityDecomposition {
    pub identity_component: Subspace,
    pub blocks: Vec<DecompositionBlock>,
    /// Invertible `S` with `X^τ S = S φ(X)` on `R_e`.
    pub s: Option<MatrixF>,
    /// Invertible `Φ` with `φ(X) = Φ^{-1} X^τ Φ` on all of `R`.
    pub phi: Option<MatrixF>,
}

fn restricted_superinvolution(alg: &SuperAlgebra, phi: &SuperMap, re: &Subspace) -> Result<()> {
    let d = alg.dim();
    let odd: Vec<Vector> = (0..d).filter(|&i| alg.parity(i) == 1).map(|i| alg.basis_vector(i)).collect();
    let re0 = even_part(alg, re);
    let re1 = re.intersect(&Subspace::span(&odd, d))?;
    if re0.dim() + re1.dim() != re.dim() {
        return Err(Error::Precondition("identity component is not Z2-graded".into()));
    }
    let homog: Vec<(Vector, u8)> =
        re0.basis().iter().map(|v| (v.clone(), 0)).chain(re1.basis().iter().map(|v| (v.clone(), 1))).collect();
    for (x, px) in &homog {
        let fx = phi.apply_vec(x);
        if alg.vector_parity(&fx).is_some_and(|p| p != *px) || phi.apply_vec(&fx) != *x {
            return Err(Error::Precondition("map is not an involution on the identity component".into()));
        }
        for (y, py) in &homog {
            let lhs = phi.apply_vec(&alg.mul_vec(x, y));
            let mut rhs = alg.mul_vec(&phi.apply_vec(y), &fx);
            if px & py == 1 {
                rhs = rhs.iter().map(|c| -c).collect();
            }
            if lhs != rhs {
                return Err(Error::Precondition("map does not reverse products on the identity component".into()));
            }
        }
    }
    Ok(())
}

fn block_of(alg: &SuperAlgebra, e: &[Scalar], re: &Subspace) -> Subspace {
    let vs: Vec<Vector> = re.basis().iter().map(|b| alg.mul_vec(e, b)).collect();
    Subspace::span(&vs, alg.dim())
}

fn parity_dims(alg: &SuperAlgebra, s: &Subspace) -> (usize, usize) {
    let e = even_part(alg, s).dim();
    (e, s.dim() - e)
}

fn isqrt(n: usize) -> Option<usize> {
    let r = (n as f64).sqrt().round() as usize;
    (r * r == n).then_some(r)
}

/// `(s, r)` with `s² + r² = even` and `2sr = odd`, `s ≥ r`.
fn matrix_sizes(even: usize, odd: usize) -> Option<(usize, usize)> {
    let total = isqrt(even + odd)?;
    let diff = isqrt(even.checked_sub(odd)?)?;
    ((total + diff) % 2 == 0).then_some(((total + diff) / 2, (total - diff) / 2))
}

fn fixed_dim(f: &SuperMap, s: &Subspace) -> Result<usize> {
    let fixed = Subspace::kernel(&(f.action() - &MatrixF::identity(f.algebra().dim())));
    Ok(fixed.intersect(s)?.dim())
}

/// Symmetric-part dimension of a canonical involution on `M_{p,q}`.
fn canonical_fingerprint(kind: BlockKind, p: usize, q: usize) -> Option<usize> {
    let alg = SuperAlgebra::matrix(p, q);
    let f = match kind {
        BlockKind::MatrixOsp => crate::superalg::canonical::osp(&alg).ok()?,
        BlockKind::MatrixTrp => crate::superalg::canonical::trp(&alg).ok()?,
        _ => return None,
    };
    fixed_dim(&f, &Subspace::full(alg.dim())).ok()
}

fn simple_block_kind(sym: usize, s: usize, r: usize) -> Option<(BlockKind, (usize, usize), MatrixF)> {
    let mut options: Vec<(BlockKind, (usize, usize))> = Vec::new();
    if s == r {
        options.push((BlockKind::MatrixTrp, (s, r)));
    }
    if r.is_multiple_of(2) {
        options.push((BlockKind::MatrixOsp, (s, r)));
    }
    if s.is_multiple_of(2) && s != r {
        options.push((BlockKind::MatrixOsp, (r, s)));
    }
    options.into_iter().find(|&(k, (p, q))| canonical_fingerprint(k, p, q) == Some(sym)).map(|(k, (p, q))| {
        let canonical = match k {
            BlockKind::MatrixTrp => swap_block(p),
            _ => osp_gram(p, q).expect("even odd part"),
        };
        (k, (p, q), canonical)
    })
}

/// Solutions `S` of `X^τ S = S φ(X)` for `X` in `span`.
fn tau_intertwiners(alg: &SuperAlgebra, phi: &SuperMap, span: &[Vector]) -> Result<Vec<MatrixF>> {
    let AlgebraKind::MatrixSuper { n, m } = alg.kind() else { return Err(Error::AlgebraMismatch) };
    let size = n + m;
    let mut rows: Vec<Vector> = Vec::new();
    for x in span {
        let xm = unflatten_matrix(x, size);
        let xt = tau_matrix(&xm, *n);
        let fx = unflatten_matrix(&phi.apply_vec(x), size);
        let cols: Vec<Vector> = (0..size * size)
            .map(|k| {
                let e = MatrixF::unit(size, k / size, k % size);
                flatten_matrix(&(&(&xt * &e) - &(&e * &fx)))
            })
            .collect();
        rows.extend(MatrixF::from_columns(&cols, size * size).row_vectors());
    }
    let sys = MatrixF::from_rows(rows)?;
    Ok(sys.null_vectors().iter().map(|v| unflatten_matrix(v, size)).collect())
}

/// Decomposes `R_e` into `φ`-simple blocks and identifies each against the
/// catalogue of involution simple superalgebras.
pub fn identity_decomposition(gamma: &Grading, phi: &SuperMap) -> Result<IdentityDecomposition> {
    let alg = gamma.algebra();
    if phi.algebra() != alg {
        return Err(Error::AlgebraMismatch);
    }
    if let Some(i) = gamma.components().iter().position(|c| !phi.preserves(c)) {
        return Err(Error::Precondition(format!("map moves the component {}", gamma.index().label(i))));
    }
    let e_idx = gamma.index().identity().ok_or_else(|| Error::Precondition("grading index has no identity".into()))?;
    let re = gamma.components()[e_idx].clone();
    restricted_superinvolution(alg, phi, &re)?;
    let unit = subalgebra_unit(alg, &re).ok_or_else(|| Error::Precondition("identity component has no unit".into()))?;
    let z = even_part(alg, &subalgebra_center(alg, &re));
    let eps = primitive_idempotents(alg, &z, &unit)?;
    let mut used = vec![false; eps.len()];
    let mut blocks = Vec::new();
    for i in 0..eps.len() {
        if used[i] {
            continue;
        }
        let img = phi.apply_vec(&eps[i]);
        let j = eps.iter().position(|e| *e == img).ok_or_else(|| Error::Classification("involution does not permute the central idempotents".into()))?;
        used[i] = true;
        used[j] = true;
        let piece = block_of(alg, &eps[i], &re);
        let piece_center = subalgebra_center(alg, &piece).dim();
        let (pe, po) = parity_dims(alg, &piece);
        let (idempotent, subspace) = if i == j {
            (eps[i].clone(), piece.clone())
        } else {
            let e: Vector = eps[i].iter().zip(&eps[j]).map(|(a, b)| a + b).collect();
            let s = block_of(alg, &e, &re);
            (e, s)
        };
        let symmetric_dim = fixed_dim(phi, &subspace)?;
        let (kind, sizes, canonical) = if i == j {
            if piece_center != 1 {
                return Err(Error::Classification("a Q-type block carries no superinvolution".into()));
            }
            let (s, r) = matrix_sizes(pe, po).ok_or_else(|| Error::Classification(format!("block of parity dimensions ({pe}, {po}) is not a matrix superalgebra")))?;
            simple_block_kind(symmetric_dim, s, r).ok_or_else(|| {
                Error::Classification(format!("unrecognized involution on M_({s},{r}) with symmetric part of dimension {symmetric_dim}"))
            })?
        } else if piece_center == 1 {
            let (s, r) = matrix_sizes(pe, po).ok_or_else(|| Error::Classification(format!("summand of parity dimensions ({pe}, {po}) is not a matrix superalgebra")))?;
            (BlockKind::PairExchange, (s, r), swap_block(s + r))
        } else if piece_center == 2 && pe == po && isqrt(pe).is_some() {
            let s = isqrt(pe).expect("checked");
            (BlockKind::QPairExchange, (s, s), swap_block(2 * s))
        } else {
            return Err(Error::Classification(format!("summand with center of dimension {piece_center} is not recognized")));
        };
        blocks.push(DecompositionBlock { subspace, idempotent, kind, sizes, symmetric_dim, canonical, solved: None });
    }
    let (mut s, mut phi_m) = (None, None);
    if let AlgebraKind::MatrixSuper { n, m } = alg.kind() {
        let size = n + m;
        let sols = tau_intertwiners(alg, phi, re.basis())?;
        s = invertible_in_span(&sols).found;
        if let Some(sm) = &s {
            for b in &mut blocks {
                b.solved = Some(sm * &unflatten_matrix(&b.idempotent, size));
            }
        }
        let all: Vec<Vector> = (0..alg.dim()).map(|k| alg.basis_vector(k)).collect();
        phi_m = invertible_in_span(&tau_intertwiners(alg, phi, &all)?).found;
    }
    Ok(IdentityDecomposition { identity_component: re, blocks, s, phi: phi_m })
}

impl IdentityDecomposition {
    /// `Σ e_i = 1` and `e_i e_j = δ_ij e_i`.
    pub fn idempotents_orthogonal(&self, alg: &SuperAlgebra) -> bool {
        let d = alg.dim();
        let mut sum = vec![Scalar::zero(); d];
        for b in &self.blocks {
            for (x, y) in sum.iter_mut().zip(&b.idempotent) {
                *x += y;
            }
        }
        let unit_ok = subalgebra_unit(alg, &self.identity_component).is_some_and(|u| u == sum);
        unit_ok
            && self.blocks.iter().enumerate().all(|(i, a)| {
                self.blocks.iter().enumerate().all(|(j, b)| {
                    let p = alg.mul_vec(&a.idempotent, &b.idempotent);
                    if i == j {
                        p == a.idempotent
                    } else {
                        p.iter().all(Scalar::is_zero)
                    }
                })
            })
    }
}
