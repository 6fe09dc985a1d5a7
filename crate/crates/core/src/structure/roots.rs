use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{lcm, Scalar, Subspace, Vector};
use crate::gradings::Grading;
use crate::structure::centers::{conjugation, even_part, primitive_idempotents, subalgebra_center, subalgebra_unit};
use crate::structure::decompose::decompose_pair_map;
use crate::superalg::canonical::exchange;
use crate::superalg::checks::{check_super_map, Claim};
use crate::superalg::{AlgebraKind, MapKind, SuperAlgebra, SuperMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootMode {
    Square,
    Fourth,
}

impl RootMode {
    pub fn exponent(self) -> u32 {
        match self {
            RootMode::Square => 2,
            RootMode::Fourth => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RootMethod {
    Identity,
    BlockScalar,
    Exhaustive,
}

#[derive(Debug, Clone)]
pub struct RootResult {
    pub psi: SuperMap,
    pub method: RootMethod,
    /// Scalars `t_j` with `ψ = conj(Σ t_j ε_j)`; empty for the identity.
    pub block_scalars: Vec<Scalar>,
    /// Largest cyclotomic order used by the block scalars.
    pub field_order: u32,
    pub candidates_tried: usize,
}

/// Everything a returned `ψ` must satisfy besides `ψ^k = φ^k`.
#[derive(Debug, Clone, Default)]
pub struct RootConstraints {
    /// Subspaces `ψ` must preserve.
    pub components: Vec<Subspace>,
    /// Maps `ψ` must commute with (besides `φ`).
    pub commute: Vec<SuperMap>,
    /// On `A ⊕ A^sop`, require `ψ` of type 1.
    pub type1: bool,
}

impl RootConstraints {
    pub fn of_grading(gamma: &Grading) -> Self {
        let type1 = matches!(gamma.algebra().kind(), AlgebraKind::PairSop { .. });
        RootConstraints { components: gamma.components().to_vec(), commute: Vec::new(), type1 }
    }
}

/// Exact check of every contract on a candidate root.
pub fn verify_root(psi: &SuperMap, phi: &SuperMap, k: u32, c: &RootConstraints) -> bool {
    if !psi.commutes_with(phi) || psi.pow(k).action() != phi.pow(k).action() {
        return false;
    }
    if !c.components.iter().all(|s| psi.preserves(s)) || !c.commute.iter().all(|f| psi.commutes_with(f)) {
        return false;
    }
    if c.type1 && !decompose_pair_map(psi).is_ok_and(|d| d.map_type == 1) {
        return false;
    }
    check_super_map(psi, Claim::Automorphism).passed
}

const ROOT_CHOICE_CAP: usize = 4096;
const EXHAUSTIVE_CAP: usize = 1024;

fn combine(eps: &[Vector], t: &[Scalar], d: usize) -> Vector {
    let mut u = vec![Scalar::zero(); d];
    for (e, c) in eps.iter().zip(t) {
        for (x, y) in u.iter_mut().zip(e) {
            *x += &(c * y);
        }
    }
    u
}

/// Coefficient vectors `c` with `Σ c_j ε_j` implementing `target` by conjugation.
fn implementing_coefficients(alg: &SuperAlgebra, eps: &[Vector], target: &SuperMap) -> Vec<Vector> {
    let d = alg.dim();
    // p x - target(x) p = 0 for every basis x, linear in c
    let mut rows: Vec<Vector> = Vec::new();
    for k in 0..d {
        let x = alg.basis_vector(k);
        let tx = target.apply_vec(&x);
        let cols: Vec<Vector> = eps
            .iter()
            .map(|e| {
                let a = alg.mul_vec(e, &x);
                let b = alg.mul_vec(&tx, e);
                a.iter().zip(&b).map(|(p, q)| p - q).collect()
            })
            .collect();
        rows.extend(crate::exactfield::MatrixF::from_columns(&cols, d).row_vectors());
    }
    crate::exactfield::MatrixF::from_rows(rows).map(|m| m.null_vectors()).unwrap_or_default()
}

fn normalized(c: &[Scalar]) -> Option<Vector> {
    if c.iter().any(Scalar::is_zero) {
        return None;
    }
    let inv = c[0].inv().ok()?;
    Some(c.iter().map(|x| (x * &inv).simplify()).collect())
}

/// Searches `ψ = conj(u)` with `u = Σ t_j ε_j` over the primitive idempotents
/// `ε_j` of the even center of the unital subalgebra `ambient`.
pub fn block_scalar_root(phi: &SuperMap, k: u32, ambient: &Subspace, c: &RootConstraints) -> Result<RootResult> {
    let alg = phi.algebra();
    let d = alg.dim();
    let unit = subalgebra_unit(alg, ambient).filter(|u| u.as_slice() == alg.unit()).ok_or_else(|| {
        Error::Precondition("the ambient subalgebra must contain the identity".into())
    })?;
    let z = even_part(alg, &subalgebra_center(alg, ambient));
    let eps = primitive_idempotents(alg, &z, &unit)?;
    let target = phi.pow(k);
    let mut tried = 0usize;
    let try_t = |t: &[Scalar], tried: &mut usize| -> Option<SuperMap> {
        *tried += 1;
        let u = combine(&eps, t, d);
        let psi = conjugation(alg, &u).ok()?;
        verify_root(&psi, phi, k, c).then_some(psi)
    };
    let sols = implementing_coefficients(alg, &eps, &target);
    let mut seeds: Vec<Vector> = sols.clone();
    if sols.len() > 1 {
        let mut sum = vec![Scalar::zero(); eps.len()];
        for s in &sols {
            for (x, y) in sum.iter_mut().zip(s) {
                *x += y;
            }
        }
        seeds.push(sum);
        for a in 0..sols.len() {
            for b in a + 1..sols.len() {
                seeds.push(sols[a].iter().zip(&sols[b]).map(|(x, y)| x - y).collect());
            }
        }
    }
    let kk = k as i64;
    for seed in seeds.iter().filter_map(|s| normalized(s)) {
        let Some(roots) = seed.iter().map(|p| p.nth_root(k)).collect::<Option<Vec<_>>>() else { continue };
        let r = roots.len();
        let choices = (k as usize).checked_pow(r.saturating_sub(1) as u32).filter(|&n| n <= ROOT_CHOICE_CAP);
        let Some(choices) = choices else { continue };
        for idx in 0..choices {
            let mut rest = idx;
            let t: Vec<Scalar> = roots
                .iter()
                .enumerate()
                .map(|(j, root)| {
                    if j == 0 {
                        return root.clone();
                    }
                    let a = (rest % k as usize) as i64;
                    rest /= k as usize;
                    (root * &Scalar::root_of_unity(k, a % kk)).simplify()
                })
                .collect();
            if let Some(psi) = try_t(&t, &mut tried) {
                let order = t.iter().fold(1u32, |acc, s| lcm(acc, s.order()));
                return Ok(RootResult { psi, method: RootMethod::BlockScalar, block_scalars: t, field_order: order, candidates_tried: tried });
            }
        }
    }
    // exhaustive: t_0 = 1, others among the roots of unity of order M
    let m = lcm(4 * k, lcm(phi.action().field_order(), 8));
    let r = eps.len();
    let total = (m as usize).checked_pow(r.saturating_sub(1) as u32).filter(|&n| n <= EXHAUSTIVE_CAP);
    if let Some(total) = total {
        for idx in 0..total {
            let mut rest = idx;
            let t: Vec<Scalar> = (0..r)
                .map(|j| {
                    if j == 0 {
                        return Scalar::one();
                    }
                    let a = (rest % m as usize) as i64;
                    rest /= m as usize;
                    Scalar::root_of_unity(m, a).simplify()
                })
                .collect();
            if let Some(psi) = try_t(&t, &mut tried) {
                return Ok(RootResult { psi, method: RootMethod::Exhaustive, block_scalars: t, field_order: m, candidates_tried: tried });
            }
        }
    }
    Err(Error::NoRoot(format!(
        "no block-scalar root of exponent {k} among {tried} candidates over {r} central idempotents"
    )))
}

/// A `Γ`-preserving automorphism `ψ` commuting with `φ` with `ψ^k = φ^k`,
/// verified exactly; `k = 2` (square) or `4` (fourth).
pub fn find_commuting_root(phi: &SuperMap, gamma: &Grading, mode: RootMode) -> Result<RootResult> {
    let alg = gamma.algebra();
    if phi.algebra() != alg {
        return Err(Error::AlgebraMismatch);
    }
    if let Some(i) = gamma.components().iter().position(|c| !phi.preserves(c)) {
        return Err(Error::Precondition(format!("map moves the component {}", gamma.index().label(i))));
    }
    if mode == RootMode::Square && alg.parities().contains(&1) {
        return Err(Error::Precondition("square mode needs the trivial super structure".into()));
    }
    let claimed_ok = [Claim::Superantiautomorphism, Claim::Automorphism].iter().any(|&cl| check_super_map(phi, cl).passed);
    if !claimed_ok {
        return Err(Error::Precondition("map is neither an automorphism nor a superantiautomorphism".into()));
    }
    let k = mode.exponent();
    let mut c = RootConstraints::of_grading(gamma);
    if c.type1 {
        c.commute.push(exchange(alg)?);
    }
    commuting_root(phi, k, gamma.index().identity().map(|e| &gamma.components()[e]), &c)
}

/// Identity first, then the block-scalar construction on `ambient`.
pub fn commuting_root(phi: &SuperMap, k: u32, ambient: Option<&Subspace>, c: &RootConstraints) -> Result<RootResult> {
    let id = SuperMap::identity(phi.algebra());
    if verify_root(&id, phi, k, c) {
        return Ok(RootResult { psi: id, method: RootMethod::Identity, block_scalars: Vec::new(), field_order: 1, candidates_tried: 1 });
    }
    let ambient = ambient.ok_or_else(|| Error::NoRoot("identity fails and no identity component is available".into()))?;
    let mut out = block_scalar_root(phi, k, ambient, c)?;
    out.psi = out.psi.with_claim(MapKind::Automorphism);
    Ok(out)
}
