use crate::error::{Error, Result};
use crate::exactfield::{MatrixF, Scalar};
use crate::superalg::canonical::{exchange, pair_type1, pair_type2, q_map};
use crate::superalg::checks::{check_super_map, Claim};
use crate::superalg::{AlgebraKind, MapKind, SuperAlgebra, SuperMap};

/// `φ((x,y)) = (φ₀(x), φ₀(y))` for type 1, `(φ₀(y), φ₀(x))` for type 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairMapDecomposition {
    pub map_type: u8,
    pub phi0: SuperMap,
}

impl PairMapDecomposition {
    pub fn reconstruct(&self, alg: &SuperAlgebra) -> Result<SuperMap> {
        match self.map_type {
            1 => pair_type1(alg, &self.phi0),
            _ => pair_type2(alg, &self.phi0),
        }
    }
}

fn block(m: &MatrixF, r0: usize, c0: usize, d: usize) -> MatrixF {
    m.block(r0, c0, d, d)
}

/// Splits an exchange-commuting automorphism of `A ⊕ A^sop` into its type and
/// the induced map on `A`.
pub fn decompose_pair_map(phi: &SuperMap) -> Result<PairMapDecomposition> {
    let alg = phi.algebra();
    let base = match alg.kind() {
        AlgebraKind::PairSop { .. } => alg.base().expect("pair algebra has a base"),
        other => return Err(Error::Inapplicable(format!("expected A + A^sop, got {other}"))),
    };
    let star = exchange(alg)?;
    if !phi.commutes_with(&star) {
        return Err(Error::Precondition("map does not commute with the exchange involution".into()));
    }
    let d = base.dim();
    let a = phi.action();
    let keeps = block(a, d, 0, d).is_zero();
    let swaps = block(a, 0, 0, d).is_zero();
    let (map_type, phi0, claim) = match (keeps, swaps) {
        (true, false) => (1u8, block(a, 0, 0, d), Claim::Automorphism),
        (false, true) => (2u8, block(a, d, 0, d), Claim::Superantiautomorphism),
        _ => return Err(Error::Precondition("map neither preserves nor swaps the two ideals".into())),
    };
    let kind = if map_type == 1 { MapKind::Automorphism } else { MapKind::Antiautomorphism };
    let phi0 = SuperMap::new(&base, phi0, kind)?;
    let report = check_super_map(&phi0, claim);
    if !report.passed {
        return Err(Error::Hypothesis(format!(
            "induced map on the base fails the {:?} law: {}",
            claim,
            report.witnesses.first().map(|w| w.detail.as_str()).unwrap_or("")
        )));
    }
    let out = PairMapDecomposition { map_type, phi0 };
    if out.reconstruct(alg)?.action() != phi.action() {
        return Err(Error::Hypothesis("reconstruction from the induced map differs".into()));
    }
    Ok(out)
}

/// `ψ(X + tY) = ψ₀(X) + unit · t ψ₀(Y)` with `ψ₀` a map of `M_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMapDecomposition {
    pub psi0: SuperMap,
    pub unit: Scalar,
}

impl QMapDecomposition {
    pub fn reconstruct(&self, alg: &SuperAlgebra) -> Result<SuperMap> {
        q_map(alg, self.psi0.action(), &self.unit, MapKind::Unchecked)
    }
}

/// Recovers `ψ₀` and the unit `λ` from `ψ₁(I) = λI` for an automorphism or
/// antiautomorphism of `Q(n)`.
pub fn decompose_q_map(psi: &SuperMap, kind: MapKind) -> Result<QMapDecomposition> {
    let alg = psi.algebra();
    let AlgebraKind::QType { n } = alg.kind() else { return Err(Error::AlgebraMismatch) };
    let n = *n;
    let claim = match kind {
        MapKind::Automorphism => Claim::Automorphism,
        MapKind::Antiautomorphism => Claim::Superantiautomorphism,
        MapKind::Unchecked => return Err(Error::Precondition("a definite map kind is required".into())),
    };
    if !check_super_map(psi, claim).passed {
        return Err(Error::Precondition(format!("map is not a {claim:?}")));
    }
    let h = n * n;
    let psi0 = block(psi.action(), 0, 0, h);
    let psi1 = block(psi.action(), h, h, h);
    let ident: Vec<Scalar> = (0..h).map(|k| if k / n == k % n { Scalar::one() } else { Scalar::zero() }).collect();
    let img = psi1.apply(&ident);
    let unit = img[0].clone();
    if img != ident.iter().map(|x| x * &unit).collect::<Vec<_>>() || unit.is_zero() {
        return Err(Error::Hypothesis("psi_1(I) is not a scalar matrix".into()));
    }
    if psi1 != psi0.scale(&unit) {
        return Err(Error::Hypothesis("odd part is not a multiple of the even part".into()));
    }
    let sq = &unit * &unit;
    let expected = if kind == MapKind::Automorphism { Scalar::one() } else { Scalar::from_int(-1) };
    if sq != expected {
        return Err(Error::Hypothesis(format!("unit {unit} has square {sq}, expected {expected}")));
    }
    let base = SuperAlgebra::matrix(n, 0);
    let out = QMapDecomposition { psi0: SuperMap::new(&base, psi0, kind)?, unit: unit.simplify() };
    if out.reconstruct(alg)?.action() != psi.action() {
        return Err(Error::Hypothesis("reconstruction differs".into()));
    }
    Ok(out)
}

/// Units of `ψ^k` for `k = 1..=4`, derived by decomposing each power.
pub fn q_power_units(psi: &SuperMap, kind: MapKind) -> Result<Vec<Scalar>> {
    (1..=4u32)
        .map(|k| {
            let kk = if kind == MapKind::Antiautomorphism && k % 2 == 1 { MapKind::Antiautomorphism } else { MapKind::Automorphism };
            decompose_q_map(&psi.pow(k).with_claim(kk), kk).map(|d| d.unit)
        })
        .collect()
}

/// Action on `A ⊕ A^sop` predicted for `φ^k` when `φ` has the given decomposition:
/// even powers act componentwise by `φ₀^k`, odd powers swap the factors.
pub fn predicted_pair_power(alg: &SuperAlgebra, dec: &PairMapDecomposition, k: u32) -> Result<SuperMap> {
    let p = dec.phi0.pow(k);
    if dec.map_type == 2 && k % 2 == 1 {
        pair_type2(alg, &p)
    } else {
        pair_type1(alg, &p)
    }
}
