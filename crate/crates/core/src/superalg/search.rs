//! Searches for superinvolutions inside explicit parameterized families, and
//! the nonexistence certificate for `Q(n)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactfield::{polynomial_roots, MatrixF, Scalar, Subspace, Vector};
use crate::superalg::algebra::{AlgebraKind, SuperAlgebra};
use crate::superalg::canonical::{conjugated_tau, flat_matrix_operator, q_map, tau_matrix};
use crate::superalg::checks::{check_super_map, Claim};
use crate::superalg::element::{flatten_matrix, unflatten_matrix};
use crate::superalg::map::{MapKind, SuperMap};

pub const SEARCH_DIM_BOUND: usize = 32;

/// One searched family `X ↦ Φ^{-1} X^τ Φ` with `Φ^τ J = cΦ` and fixed parity of `Φ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySummary {
    pub phi_parity: u8,
    pub sign: String,
    pub solution_dim: usize,
    pub invertible_found: bool,
}

/// Exact record of the three-stage argument ruling out superinvolutions on `Q(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QCertificate {
    /// Dimension of the odd elements commuting with the even part (expected 1, spanned by `t`).
    pub odd_centralizer_dim: usize,
    /// Roots of `λ² + 1` forced by `f(t)² = -f(t·t) = -1`.
    pub lambda_candidates: Vec<String>,
    /// For each candidate, whether the linear system `f(t) = λt`, `f(f(t)) = t` is solvable.
    pub involutive_system_consistent: Vec<bool>,
    pub unknowns: usize,
    pub equations: usize,
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub found: Vec<SuperMap>,
    pub families: Vec<FamilySummary>,
    pub certificate: Option<QCertificate>,
}

/// Homogeneous matrices of the given parity as a list of flattened coordinates.
fn homogeneous_basis(n: usize, m: usize, parity: u8) -> Vec<usize> {
    let s = n + m;
    (0..s * s).filter(|&k| (((k / s) < n) != ((k % s) < n)) as u8 == parity).collect()
}

/// Tries a few deterministic combinations of `basis` for an invertible matrix.
pub fn find_invertible(basis: &[MatrixF]) -> Option<MatrixF> {
    for b in basis {
        if b.is_invertible() {
            return Some(b.clone());
        }
    }
    if basis.is_empty() {
        return None;
    }
    let mut sum = MatrixF::zeros(basis[0].rows(), basis[0].cols());
    for b in basis {
        sum = &sum + b;
    }
    if sum.is_invertible() {
        return Some(sum);
    }
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let s = &basis[i] + &basis[j];
            if s.is_invertible() {
                return Some(s);
            }
        }
    }
    let mut weighted = MatrixF::zeros(basis[0].rows(), basis[0].cols());
    for (k, b) in basis.iter().enumerate() {
        weighted = &weighted + &b.scale(&Scalar::from_int(k as i64 * k as i64 + 1));
    }
    weighted.is_invertible().then_some(weighted)
}

/// Solutions `Φ` of parity `p` of the linear system `Φ^τ J - cΦ = 0`.
fn phi_solutions(n: usize, m: usize, parity: u8, c: &Scalar) -> Vec<MatrixF> {
    let s = n + m;
    let support = homogeneous_basis(n, m, parity);
    let j = MatrixF::diagonal(&(0..s).map(|i| Scalar::from_int(if i < n { 1 } else { -1 })).collect::<Vec<_>>());
    let cols: Vec<Vector> = support
        .iter()
        .map(|&k| {
            let e = MatrixF::unit(s, k / s, k % s);
            flatten_matrix(&(&(&tau_matrix(&e, n) * &j) - &e.scale(c)))
        })
        .collect();
    let sys = MatrixF::from_columns(&cols, s * s);
    sys.null_vectors()
        .into_iter()
        .map(|v| {
            let mut full = vec![Scalar::zero(); s * s];
            for (x, &k) in v.into_iter().zip(&support) {
                full[k] = x;
            }
            unflatten_matrix(&full, s)
        })
        .collect()
}

fn search_matrix(alg: &SuperAlgebra, n: usize, m: usize) -> Result<SearchResult> {
    let mut found = Vec::new();
    let mut families = Vec::new();
    for parity in [0u8, 1] {
        for c in [1i64, -1] {
            let sols = phi_solutions(n, m, parity, &Scalar::from_int(c));
            let phi = find_invertible(&sols);
            families.push(FamilySummary {
                phi_parity: parity,
                sign: c.to_string(),
                solution_dim: sols.len(),
                invertible_found: phi.is_some(),
            });
            if let Some(phi) = phi {
                let f = conjugated_tau(alg, &phi)?;
                if check_super_map(&f, Claim::Superinvolution).passed {
                    found.push(f);
                }
            }
        }
    }
    Ok(SearchResult { found, families, certificate: None })
}

/// Stage-by-stage exact certificate that `Q(n)` carries no superinvolution.
pub fn q_certificate(alg: &SuperAlgebra) -> Result<QCertificate> {
    let AlgebraKind::QType { n } = alg.kind() else { return Err(Error::AlgebraMismatch) };
    let h = n * n;
    let d = alg.dim();
    // stage 1: odd v with v x = x v for all even basis x
    let mut rows: Vec<Vector> = Vec::new();
    for k in 0..h {
        let b = alg.basis_vector(k);
        let m = &alg.right_mul_matrix(&b) - &alg.left_mul_matrix(&b);
        rows.extend(m.row_vectors());
    }
    for k in 0..h {
        rows.push(alg.basis_vector(k));
    }
    let centralizer = Subspace::kernel(&MatrixF::from_rows(rows).expect("rows"));
    let mut t = vec![Scalar::zero(); d];
    for i in 0..*n {
        t[h + i * n + i] = Scalar::one();
    }
    if centralizer.dim() != 1 || !centralizer.contains(&t) {
        return Err(Error::Hypothesis("odd centralizer of the even part is not spanned by t".into()));
    }
    // stage 2: f(1) = 1 and t·t = 1 give 1 = -λ², i.e. λ² + 1 = 0
    let lambdas = polynomial_roots(&[Scalar::one(), Scalar::zero(), Scalar::one()]);
    assert_eq!(lambdas.len(), 2, "x^2 + 1 splits over Q(i)");
    // stage 3: unknown column f(t) ∈ F^d with f(t) = λ t and λ f(t) = f(λt) = f(f(t)) = t
    let mut consistent = Vec::new();
    for lambda in &lambdas {
        let mut a_rows: Vec<Vector> = Vec::new();
        let mut rhs: Vector = Vec::new();
        for i in 0..d {
            let mut r = vec![Scalar::zero(); d];
            r[i] = Scalar::one();
            a_rows.push(r);
            rhs.push(lambda * &t[i]);
        }
        for i in 0..d {
            let mut r = vec![Scalar::zero(); d];
            r[i] = lambda.clone();
            a_rows.push(r);
            rhs.push(t[i].clone());
        }
        let a = MatrixF::from_rows(a_rows).expect("rows");
        consistent.push(a.solve(&rhs).is_some());
    }
    Ok(QCertificate {
        odd_centralizer_dim: centralizer.dim(),
        lambda_candidates: lambdas.iter().map(|l| l.to_string()).collect(),
        involutive_system_consistent: consistent,
        unknowns: d,
        equations: 2 * d,
    })
}

fn search_q(alg: &SuperAlgebra, n: usize) -> Result<SearchResult> {
    let mut found = Vec::new();
    let mut families = Vec::new();
    let lambdas = polynomial_roots(&[Scalar::one(), Scalar::zero(), Scalar::one()]);
    let mut gram_candidates = vec![MatrixF::identity(n)];
    if n.is_multiple_of(2) {
        gram_candidates.push(crate::superalg::canonical::symplectic_block(n / 2));
    }
    for (gi, g) in gram_candidates.iter().enumerate() {
        let inv = g.inverse()?;
        let psi0 = flat_matrix_operator(n, |x| &(&inv * &x.transpose()) * g);
        for lambda in &lambdas {
            let f = q_map(alg, &psi0, lambda, MapKind::Antiautomorphism)?;
            let ok = check_super_map(&f, Claim::Superinvolution).passed;
            families.push(FamilySummary {
                phi_parity: 0,
                sign: format!("gram {gi}, lambda {lambda}"),
                solution_dim: 1,
                invertible_found: ok,
            });
            if ok {
                found.push(f);
            }
        }
    }
    let certificate = q_certificate(alg)?;
    Ok(SearchResult { found, families, certificate: Some(certificate) })
}

/// All superinvolutions within the searched families; an empty result for
/// `Q(n)` comes with a certificate of global nonexistence.
pub fn superinvolution_search(alg: &SuperAlgebra) -> Result<SearchResult> {
    if alg.dim() > SEARCH_DIM_BOUND {
        return Err(Error::BoundExceeded(format!("dimension {} exceeds {}", alg.dim(), SEARCH_DIM_BOUND)));
    }
    match alg.kind() {
        AlgebraKind::MatrixSuper { n, m } => search_matrix(alg, *n, *m),
        AlgebraKind::QType { n } => search_q(alg, *n),
        other => Err(Error::Inapplicable(format!("no search family for {other}"))),
    }
}
