use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{polynomial_roots, MatrixF, Subspace, Vector};
use crate::gradings::Grading;
use crate::json::ScalarRows;
use crate::structure::centers::{invertible_in_span, minimal_polynomial_of_matrix};
use crate::superalg::canonical::tau_matrix;
use crate::superalg::element::{flatten_matrix, unflatten_matrix};
use crate::superalg::AlgebraKind;

pub const OBSTRUCTION_ASSUMPTION: &str =
    "superantiautomorphisms are parameterized as X -> Phi^-1 X^tau Phi with Phi homogeneous invertible";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionBranch {
    pub phi_parity: u8,
    /// Eigenvalues `c_g` chosen per support component, as strings.
    pub eigenvalues: Vec<String>,
    pub solution_dim: usize,
    pub invertible_found: bool,
    pub certified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    /// `true` when no superantiautomorphism preserves every component.
    pub obstructed: bool,
    pub unknowns: usize,
    pub equations_per_component: usize,
    pub components: usize,
    pub branches: Vec<ObstructionBranch>,
    /// Rows of a `Φ` whose conjugate of `τ` preserves every component, when one exists.
    pub witness: Option<ScalarRows>,
    pub assumption: String,
}

fn parity_support(n: usize, size: usize, parity: u8) -> Vec<usize> {
    (0..size * size).filter(|&k| (((k / size) < n) != ((k % size) < n)) as u8 == parity).collect()
}

/// Decides whether some `X ↦ Φ^{-1} X^τ Φ` sends every component of a fine
/// grading of `M_{n,m}` into itself. Each support component `span{X_g}` must
/// be spanned by an invertible `X_g`; the condition `X_g^τ Φ X_g^{-1} = c_g Φ`
/// is linear in `Φ` once the eigenvalue `c_g` is fixed, so the branches over
/// eigenvalues are solved exactly.
pub fn fine_antiauto_obstruction(gamma: &Grading) -> Result<ObstructionReport> {
    let alg = gamma.algebra();
    let AlgebraKind::MatrixSuper { n, m } = alg.kind() else {
        return Err(Error::Inapplicable("obstruction is defined on matrix superalgebras".into()));
    };
    let (n, size) = (*n, n + m);
    if !gamma.is_fine() {
        return Err(Error::NotFine(format!("component dimensions {:?}", gamma.dims())));
    }
    let dim = size * size;
    // the operators Φ ↦ X_g^τ Φ X_g^{-1}
    let mut ops: Vec<MatrixF> = Vec::new();
    for c in gamma.components().iter().filter(|c| !c.is_zero()) {
        let x = unflatten_matrix(&c.basis()[0], size);
        let xi = x.inverse().map_err(|_| Error::Inapplicable("a component is spanned by a singular matrix".into()))?;
        let xt = tau_matrix(&x, n);
        let cols: Vec<Vector> = (0..dim)
            .map(|k| flatten_matrix(&(&(&xt * &MatrixF::unit(size, k / size, k % size)) * &xi)))
            .collect();
        ops.push(MatrixF::from_columns(&cols, dim));
    }
    let mut branches = Vec::new();
    let mut obstructed = true;
    let mut witness: Option<MatrixF> = None;
    let mut incomplete = false;
    for parity in [0u8, 1] {
        let support = parity_support(n, size, parity);
        let restrict: Vec<Vector> = support.iter().map(|&k| crate::exactfield::unit_vector(dim, k)).collect();
        let start = Subspace::span(&restrict, dim);
        // depth-first over eigenvalue choices, pruning empty solution spaces
        let mut stack: Vec<(usize, Subspace, Vec<String>)> = vec![(0, start, Vec::new())];
        while let Some((depth, space, labels)) = stack.pop() {
            if space.is_zero() {
                continue;
            }
            if depth == ops.len() {
                let mats: Vec<MatrixF> = space.basis().iter().map(|v| unflatten_matrix(v, size)).collect();
                let found = invertible_in_span(&mats);
                let inv = found.found.is_some();
                if let Some(phi) = found.found {
                    obstructed = false;
                    witness.get_or_insert(phi);
                }
                branches.push(ObstructionBranch {
                    phi_parity: parity,
                    eigenvalues: labels,
                    solution_dim: space.dim(),
                    invertible_found: inv,
                    certified: found.exhaustive,
                });
                continue;
            }
            let op = &ops[depth];
            let poly = minimal_polynomial_of_matrix(op);
            let all = polynomial_roots(&poly);
            if all.len() + 1 != poly.len() {
                incomplete = true;
            }
            let mut roots = Vec::new();
            for r in all {
                if !roots.contains(&r) {
                    roots.push(r);
                }
            }
            for c in roots {
                let shifted = op - &MatrixF::scalar_matrix(dim, &c);
                let next = space.intersect(&Subspace::kernel(&shifted))?;
                let mut l = labels.clone();
                l.push(c.to_string());
                stack.push((depth + 1, next, l));
            }
        }
    }
    if obstructed && incomplete {
        return Err(Error::BoundExceeded("some eigenvalues lie outside the ambient field".into()));
    }
    if obstructed && branches.iter().any(|b| !b.certified) {
        return Err(Error::BoundExceeded("an empty branch could not be certified exhaustively".into()));
    }
    Ok(ObstructionReport {
        obstructed,
        unknowns: dim,
        equations_per_component: dim,
        components: ops.len(),
        branches,
        witness: witness.as_ref().map(ScalarRows::from_matrix),
        assumption: OBSTRUCTION_ASSUMPTION.into(),
    })
}
