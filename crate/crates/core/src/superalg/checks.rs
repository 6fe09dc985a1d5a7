use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{EchelonSpan, MatrixF, Scalar, Subspace, Vector};
use crate::superalg::algebra::SuperAlgebra;
use crate::superalg::map::SuperMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    Superinvolution,
    Superantiautomorphism,
    Automorphism,
}

/// A concrete counterexample to a checked identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub check: String,
    pub basis: Vec<usize>,
    pub detail: String,
}

impl Witness {
    pub fn new(check: &str, basis: Vec<usize>, detail: impl Into<String>) -> Self {
        Witness { check: check.to_string(), basis, detail: detail.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub passed: bool,
    pub checks_run: usize,
    pub witnesses: Vec<Witness>,
}

impl CheckReport {
    pub fn from_witnesses(checks_run: usize, witnesses: Vec<Witness>) -> Self {
        CheckReport { passed: witnesses.is_empty(), checks_run, witnesses }
    }
}

const MAX_WITNESSES: usize = 8;

fn render(v: &[Scalar]) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| format!("({x})e{i}"))
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Verifies the identities of `claim` for `f` on all pairs of basis elements.
pub fn check_super_map(f: &SuperMap, claim: Claim) -> CheckReport {
    let alg = f.algebra();
    let d = alg.dim();
    let mut witnesses = Vec::new();
    let mut checks = 2;
    if !f.is_parity_preserving() {
        let (i, j) = (0..d)
            .flat_map(|j| (0..d).map(move |i| (i, j)))
            .find(|&(i, j)| !f.action().get(i, j).is_zero() && alg.parity(i) != alg.parity(j))
            .expect("parity violation exists");
        witnesses.push(Witness::new("parity", vec![j], format!("image of e{j} has a component on e{i} of the other parity")));
    }
    if !f.action().is_invertible() {
        witnesses.push(Witness::new("invertible", vec![], "action matrix is singular"));
    }
    let images: Vec<Vector> = (0..d).map(|j| f.image_of_basis(j)).collect();
    'pairs: for i in 0..d {
        for j in 0..d {
            checks += 1;
            let lhs = match alg.basis_product(i, j) {
                Some((k, neg)) => {
                    let v = &images[k];
                    if neg {
                        v.iter().map(|x| -x).collect()
                    } else {
                        v.clone()
                    }
                }
                None => vec![Scalar::zero(); d],
            };
            let rhs = match claim {
                Claim::Automorphism => alg.mul_vec(&images[i], &images[j]),
                Claim::Superinvolution | Claim::Superantiautomorphism => {
                    let p = alg.mul_vec(&images[j], &images[i]);
                    if alg.parity(i) & alg.parity(j) == 1 {
                        p.iter().map(|x| -x).collect()
                    } else {
                        p
                    }
                }
            };
            if lhs != rhs {
                let law = if claim == Claim::Automorphism { "f(xy) = f(x)f(y)" } else { "f(xy) = (-1)^{|x||y|} f(y)f(x)" };
                witnesses.push(Witness::new(
                    "product",
                    vec![i, j],
                    format!("{law} fails for x = e{i}, y = e{j}: lhs {} vs rhs {}", render(&lhs), render(&rhs)),
                ));
                if witnesses.len() >= MAX_WITNESSES {
                    break 'pairs;
                }
            }
        }
    }
    if claim == Claim::Superinvolution {
        checks += 1;
        let sq = f.action() * f.action();
        if !sq.is_identity() {
            let j = (0..d).find(|&j| sq.column(j) != alg.basis_vector(j)).unwrap_or(0);
            witnesses.push(Witness::new("involutive", vec![j], format!("f(f(e{j})) = {}", render(&sq.column(j)))));
        }
    }
    CheckReport::from_witnesses(checks, witnesses)
}

/// Smallest graded two-sided ideal containing `seed` and stable under `star`.
pub fn ideal_closure(alg: &SuperAlgebra, star: &SuperMap, seed: &[Scalar]) -> Subspace {
    let d = alg.dim();
    let mut span = EchelonSpan::new(d);
    let mut queue: Vec<Vector> = Vec::new();
    let push = |v: Vector, span: &mut EchelonSpan, queue: &mut Vec<Vector>| {
        if span.insert(&v) {
            queue.push(v);
        }
    };
    let (e, o) = alg.parity_split(seed);
    push(e, &mut span, &mut queue);
    push(o, &mut span, &mut queue);
    while let Some(v) = queue.pop() {
        if span.dim() == d {
            break;
        }
        push(star.apply_vec(&v), &mut span, &mut queue);
        for k in 0..d {
            let b = alg.basis_vector(k);
            push(alg.mul_vec(&b, &v), &mut span, &mut queue);
            push(alg.mul_vec(&v, &b), &mut span, &mut queue);
        }
    }
    span.into_subspace()
}

/// Center of the algebra.
pub fn center(alg: &SuperAlgebra) -> Subspace {
    let d = alg.dim();
    let mut rows: Vec<Vector> = Vec::new();
    for k in 0..d {
        let b = alg.basis_vector(k);
        // z ↦ z e_k - e_k z
        let m = &alg.right_mul_matrix(&b) - &alg.left_mul_matrix(&b);
        rows.extend(m.row_vectors());
    }
    Subspace::kernel(&MatrixF::from_rows(rows).expect("square operator rows"))
}

/// Elements `z` of the even center with `z* = z`.
pub fn symmetric_even_center(alg: &SuperAlgebra, star: &SuperMap) -> Subspace {
    let z = center(alg);
    let even = Subspace::kernel(&(SuperMap::parity_automorphism(alg).action() - &MatrixF::identity(alg.dim())));
    let fixed = Subspace::kernel(&(star.action() - &MatrixF::identity(alg.dim())));
    z.intersect(&even).and_then(|s| s.intersect(&fixed)).expect("same ambient space")
}

/// Decides whether `(alg, star)` is involution simple: `R^2 ≠ 0` and no
/// proper nonzero graded ideal is stable under `star`. Ideals generated by
/// basis elements are closed explicitly; the symmetric even center detects
/// stable summands generated by non-basis idempotents.
pub fn involution_simple(alg: &SuperAlgebra, star: &SuperMap) -> Result<bool> {
    if !check_super_map(star, Claim::Superinvolution).passed {
        return Err(Error::Precondition("star is not a superinvolution".into()));
    }
    if !alg.square_nonzero() {
        return Ok(false);
    }
    for k in 0..alg.dim() {
        if !ideal_closure(alg, star, &alg.basis_vector(k)).is_full() {
            return Ok(false);
        }
    }
    let zs = symmetric_even_center(alg, star);
    for v in zs.basis() {
        if !ideal_closure(alg, star, v).is_full() {
            return Ok(false);
        }
    }
    Ok(zs.dim() == 1)
}
