//! Builders for the gradings of `A ⊕ A^sop` and `Q(n) ⊕ Q(n)^sop` that are
//! compatible with the exchange involution, and the classifier that recovers
//! a type and its parameters from such a grading.

use serde::{Deserialize, Serialize};

use crate::abgroup::{AbGroup, Character, GroupElem};
use crate::error::{Error, Result};
use crate::exactfield::{MatrixF, Scalar, Subspace, Vector};
use crate::gradings::{action_of_grading, verify_grading, ActionHom, Grading};
use crate::structure::decompose::{decompose_pair_map, decompose_q_map, PairMapDecomposition};
use crate::structure::exchange::exchange_decompose;
use crate::structure::roots::{commuting_root, RootConstraints};
use crate::superalg::canonical::{exchange, pair_type1, q_map, tau};
use crate::superalg::checks::{check_super_map, involution_simple, Claim};
use crate::superalg::{AlgebraKind, MapKind, SuperAlgebra, SuperMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeTag {
    I,
    II,
    III,
    #[serde(rename = "Q-I")]
    QI,
    #[serde(rename = "Q-II")]
    QII,
}

impl std::fmt::Display for TypeTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TypeTag::I => "I",
            TypeTag::II => "II",
            TypeTag::III => "III",
            TypeTag::QI => "Q-I",
            TypeTag::QII => "Q-II",
        };
        f.write_str(s)
    }
}

/// A grading of a pair algebra together with the parameters it was built from
/// (or recovered as).
#[derive(Debug, Clone)]
pub struct TypedGrading {
    pub grading: Grading,
    pub type_tag: TypeTag,
    /// Grading of `A` (types I, II, III, Q-I) or of `B = M_n` (Q-II).
    pub base: Grading,
    pub dagger: Option<SuperMap>,
    pub h: Option<GroupElem>,
    /// Index in `Ĝ` of the subgroup where the original and companion actions agree.
    pub lambda_index: usize,
    /// Every `h` found by the classifier for which some recovered parameters
    /// rebuild the grading exactly; just `h` for builder output.
    pub h_alternatives: Vec<GroupElem>,
}

fn concat(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().chain(b).cloned().collect()
}

fn scaled(v: &[Scalar], c: &Scalar) -> Vector {
    v.iter().map(|x| x * c).collect()
}

fn zeros(d: usize) -> Vector {
    vec![Scalar::zero(); d]
}

fn check_base(base: &Grading) -> Result<&AbGroup> {
    let group = base.group()?;
    let rep = verify_grading(base, None);
    if !rep.passed {
        let why = rep.witnesses.first().map(|w| w.detail.clone()).unwrap_or_default();
        return Err(Error::Precondition(format!("invalid base grading: {why}")));
    }
    Ok(group)
}

fn check_order(group: &AbGroup, h: &GroupElem, want: u32) -> Result<()> {
    group.check(h)?;
    let o = group.elem_order(h);
    if o != want {
        return Err(Error::Precondition(format!("h must have order {want}, found order {o}")));
    }
    Ok(())
}

fn check_preserves(dagger: &SuperMap, base: &Grading) -> Result<()> {
    if dagger.algebra() != base.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    if let Some(i) = base.components().iter().position(|c| !dagger.preserves(c)) {
        return Err(Error::Precondition(format!("dagger moves the base component {}", base.index().label(i))));
    }
    Ok(())
}

fn finish(pair: &SuperAlgebra, group: &AbGroup, parts: Vec<Vec<Vector>>) -> Result<Grading> {
    let components = parts.iter().map(|vs| Subspace::span(vs, pair.dim())).collect();
    let out = Grading::over_group(pair, group, components)?;
    let rep = verify_grading(&out, Some(&exchange(pair)?));
    if !rep.passed {
        let why = rep.witnesses.first().map(|w| w.detail.clone()).unwrap_or_default();
        return Err(Error::Hypothesis(format!("constructed decomposition is not an exchange-compatible grading: {why}")));
    }
    Ok(out)
}

/// `R_g = A_g ⊕ A_g^sop`; tagged Q-I when `A = Q(n)`.
pub fn build_type_i(base: &Grading) -> Result<TypedGrading> {
    let group = check_base(base)?.clone();
    let a = base.algebra();
    let pair = SuperAlgebra::pair_sop(a);
    let d = a.dim();
    let parts = base
        .components()
        .iter()
        .map(|c| c.basis().iter().flat_map(|x| [concat(x, &zeros(d)), concat(&zeros(d), x)]).collect())
        .collect();
    let grading = finish(&pair, &group, parts)?;
    let type_tag = if matches!(a.kind(), AlgebraKind::QType { .. }) { TypeTag::QI } else { TypeTag::I };
    Ok(TypedGrading { grading, type_tag, base: base.clone(), dagger: None, h: None, lambda_index: 1, h_alternatives: Vec::new() })
}

/// `R_g = {(x, x†) : x ∈ A_g} ⊕ {(x, -x†) : x ∈ A_{gh}}` with `o(h) = 2`.
pub fn build_type_ii(base: &Grading, dagger: &SuperMap, h: &GroupElem) -> Result<TypedGrading> {
    let group = check_base(base)?.clone();
    check_order(&group, h, 2)?;
    check_preserves(dagger, base)?;
    if !check_super_map(dagger, Claim::Superinvolution).passed {
        return Err(Error::Precondition("dagger is not a superinvolution".into()));
    }
    let a = base.algebra();
    let pair = SuperAlgebra::pair_sop(a);
    let minus = Scalar::from_int(-1);
    let parts = group
        .elements()
        .iter()
        .map(|g| {
            let mut vs = Vec::new();
            for x in base.components()[group.index_of(g)].basis() {
                vs.push(concat(x, &dagger.apply_vec(x)));
            }
            for x in base.components()[group.index_of(&group.op(g, h))].basis() {
                vs.push(concat(x, &scaled(&dagger.apply_vec(x), &minus)));
            }
            vs
        })
        .collect();
    let grading = finish(&pair, &group, parts)?;
    Ok(TypedGrading { grading, type_tag: TypeTag::II, base: base.clone(), dagger: Some(dagger.clone()), h: Some(h.clone()), lambda_index: 2, h_alternatives: vec![h.clone()] })
}

/// The `±1` eigenspaces `A₊`, `A₋` of `†²`.
pub fn dagger_square_split(dagger: &SuperMap) -> (Subspace, Subspace) {
    let sq = dagger.pow(2);
    (Subspace::eigenspace(sq.action(), &Scalar::one()), Subspace::eigenspace(sq.action(), &Scalar::from_int(-1)))
}

/// The four pieces `(x, c_k x†)` on `A_{gh^k} ∩ A_±` with `c = 1, -i, -1, i`.
pub fn build_type_iii(base: &Grading, dagger: &SuperMap, h: &GroupElem) -> Result<TypedGrading> {
    let group = check_base(base)?.clone();
    check_order(&group, h, 4)?;
    check_preserves(dagger, base)?;
    if !check_super_map(dagger, Claim::Superantiautomorphism).passed {
        return Err(Error::Precondition("dagger is not a superantiautomorphism".into()));
    }
    if !dagger.pow(4).is_identity() {
        return Err(Error::Precondition("dagger^4 is not the identity".into()));
    }
    if dagger.pow(2).is_identity() {
        return Err(Error::Precondition("dagger^2 is the identity; the grading would be of type II".into()));
    }
    let a = base.algebra();
    let pair = SuperAlgebra::pair_sop(a);
    let (plus, minus) = dagger_square_split(dagger);
    let i = Scalar::i();
    let coeffs = [Scalar::one(), -&i, Scalar::from_int(-1), i.clone()];
    let mut parts = Vec::new();
    for g in group.elements() {
        let mut vs = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            let gk = group.op(&g, &group.power(h, k as i64));
            let split = if k % 2 == 0 { &plus } else { &minus };
            let piece = base.components()[group.index_of(&gk)].intersect(split)?;
            for x in piece.basis() {
                vs.push(concat(x, &scaled(&dagger.apply_vec(x), c)));
            }
        }
        parts.push(vs);
    }
    let grading = finish(&pair, &group, parts)?;
    Ok(TypedGrading { grading, type_tag: TypeTag::III, base: base.clone(), dagger: Some(dagger.clone()), h: Some(h.clone()), lambda_index: 4, h_alternatives: vec![h.clone()] })
}

/// Type II grading of `Q(n) ⊕ Q(n)^sop` from an involution grading of
/// `B = M_n` and an ordinary involution `†` on `B`.
pub fn build_q_type_ii(base: &Grading, dagger: &SuperMap, h: &GroupElem) -> Result<TypedGrading> {
    let group = check_base(base)?.clone();
    let AlgebraKind::MatrixSuper { n, m: 0 } = base.algebra().kind() else {
        return Err(Error::Precondition("the base of a Q-II grading is a grading of the ordinary matrix algebra M_n".into()));
    };
    let n = *n;
    check_order(&group, h, 4)?;
    check_preserves(dagger, base)?;
    if !check_super_map(dagger, Claim::Superinvolution).passed {
        return Err(Error::Precondition("dagger is not an involution of M_n".into()));
    }
    let q = SuperAlgebra::q(n);
    let pair = SuperAlgebra::pair_sop(&q);
    let hd = n * n;
    let z = zeros(hd);
    let one = Scalar::one();
    let minus = Scalar::from_int(-1);
    let mut parts = Vec::new();
    for g in group.elements() {
        let mut vs = Vec::new();
        for k in 0..4usize {
            let gk = group.op(&g, &group.power(h, k as i64));
            for x in base.components()[group.index_of(&gk)].basis() {
                let xd = dagger.apply_vec(x);
                let (odd, sign) = match k {
                    0 => (false, &one),
                    1 => (true, &minus),
                    2 => (false, &minus),
                    _ => (true, &one),
                };
                let sd = scaled(&xd, sign);
                let v = if odd { [z.clone(), x.clone(), z.clone(), sd].concat() } else { [x.clone(), z.clone(), sd, z.clone()].concat() };
                vs.push(v);
            }
        }
        parts.push(vs);
    }
    let grading = finish(&pair, &group, parts)?;
    Ok(TypedGrading { grading, type_tag: TypeTag::QII, base: base.clone(), dagger: Some(dagger.clone()), h: Some(h.clone()), lambda_index: 4, h_alternatives: vec![h.clone()] })
}

/// The Z4-grading of `M_{n,m} ⊕ M_{n,m}^sop` written out block by block;
/// Z4 elements `0, 1, 2, 3` stand for `1, i, -1, -i`.
pub fn z4_example(n: usize, m: usize) -> Result<TypedGrading> {
    let a = SuperAlgebra::matrix(n, m);
    let pair = SuperAlgebra::pair_sop(&a);
    let s = n + m;
    let d = a.dim();
    let group = AbGroup::cyclic(4);
    let i = Scalar::i();
    let unit = |r: usize, c: usize| crate::exactfield::unit_vector(d, r * s + c);
    let mut parts: Vec<Vec<Vector>> = vec![Vec::new(); 4];
    for r in 0..s {
        for c in 0..s {
            let x = unit(r, c);
            let xt = unit(c, r);
            if (r < n) == (c < n) {
                // diag(A, D) paired with ±diag(A^t, D^t)
                parts[0].push(concat(&x, &xt));
                parts[2].push(concat(&x, &scaled(&xt, &Scalar::from_int(-1))));
            } else {
                // B block pairs with i B^t below, C block with -i C^t above
                let sign = if r < n { i.clone() } else { -&i };
                parts[1].push(concat(&x, &scaled(&xt, &sign)));
                parts[3].push(concat(&x, &scaled(&xt, &-&sign)));
            }
        }
    }
    let grading = finish(&pair, &group, parts)?;
    Ok(TypedGrading {
        grading,
        type_tag: TypeTag::III,
        base: Grading::trivial(&a, &group),
        dagger: Some(tau(&a)?),
        h: Some(GroupElem(vec![3])),
        lambda_index: 4,
        h_alternatives: vec![GroupElem(vec![3])],
    })
}

/// `{x : (x, 0) ∈ S}` for a subspace `S` of a pair algebra.
fn first_slot(s: &Subspace, d: usize) -> Result<Subspace> {
    let left = Subspace::span(&(0..d).map(|k| crate::exactfield::unit_vector(2 * d, k)).collect::<Vec<_>>(), 2 * d);
    let both = s.intersect(&left)?;
    Ok(Subspace::span(&both.basis().iter().map(|v| v[..d].to_vec()).collect::<Vec<_>>(), d))
}

fn base_of(pair_grading: &Grading, base_alg: &SuperAlgebra) -> Result<Grading> {
    let d = base_alg.dim();
    let comps = pair_grading.components().iter().map(|c| first_slot(c, d)).collect::<Result<Vec<_>>>()?;
    Grading::new(base_alg, pair_grading.index().clone(), comps)
}

fn elem_as_char(g: &GroupElem) -> Character {
    Character(g.0.clone())
}

/// Joint fixed space of a family of maps.
fn fixed_space(alg: &SuperAlgebra, maps: &[SuperMap]) -> Result<Subspace> {
    let mut s = Subspace::full(alg.dim());
    for f in maps {
        s = s.intersect(&Subspace::eigenspace(f.action(), &Scalar::one()))?;
    }
    Ok(s)
}

/// The companion action `β(ξ^k η) = ψ^k α(η)` for `η ∈ sub`; `ξ` has order `k0` modulo `sub`.
fn companion(alpha: &ActionHom, group: &AbGroup, sub: &[Character], xi: &Character, psi: &SuperMap) -> Result<ActionHom> {
    let ord = group.char_order(xi) as i64;
    let mut images = Vec::new();
    for chi in group.character_generators() {
        let (k, eta) = (0..ord)
            .find_map(|k| {
                let eta = group.char_mul(&chi, &group.char_power(xi, -k));
                sub.contains(&eta).then_some((k, eta))
            })
            .ok_or_else(|| Error::Classification("a character is not covered by the cosets of the chosen subgroup".into()))?;
        images.push(psi.pow(k as u32).compose(&alpha.image(&eta)?).with_claim(MapKind::Automorphism));
    }
    ActionHom::new(group, images)
}

/// Type-2 maps whose `φ₀` can serve as the recovered dagger.
fn dagger_candidates(phi: &SuperMap, psi: &SuperMap) -> Result<Vec<PairMapDecomposition>> {
    let pinv = psi.inverse()?;
    let finv = phi.inverse()?;
    let mut out: Vec<PairMapDecomposition> = Vec::new();
    for th in [phi.compose(&pinv), finv.compose(psi)] {
        if let Ok(d) = decompose_pair_map(&th) {
            if d.map_type == 2 && !out.iter().any(|o| o.phi0 == d.phi0) {
                out.push(d);
            }
        }
    }
    Ok(out)
}

struct Typing {
    chars: Vec<Character>,
    decs: Vec<PairMapDecomposition>,
}

fn type_characters(alpha: &ActionHom, group: &AbGroup) -> Result<Typing> {
    let chars = group.characters();
    let mut decs = Vec::new();
    for chi in &chars {
        let img = alpha.image(chi)?;
        let d = decompose_pair_map(&img)
            .map_err(|e| Error::Classification(format!("character {:?} does not act by a map of type 1 or 2: {e}", chi.0)))?;
        decs.push(d);
    }
    Ok(Typing { chars, decs })
}

fn subgroup_of_index(group: &AbGroup, within: &[Character], index: usize) -> Vec<Vec<Character>> {
    group
        .subgroups()
        .into_iter()
        .filter(|s| s.len() * index == group.order())
        .map(|s| s.iter().map(elem_as_char).collect::<Vec<_>>())
        .filter(|s| s.iter().all(|c| within.contains(c)))
        .collect()
}

/// Exact matches found so far; the first one is reported.
#[derive(Default)]
struct Found {
    first: Option<TypedGrading>,
    hs: Vec<GroupElem>,
}

impl Found {
    /// Rebuilds the grading for each `h` of the given order and records exact matches.
    fn scan(&mut self, gamma: &Grading, group: &AbGroup, order: u32, build: impl Fn(&GroupElem) -> Result<TypedGrading>) {
        for h in group.elements().into_iter().filter(|h| group.elem_order(h) == order) {
            if self.hs.contains(&h) {
                continue;
            }
            if let Some(t) = build(&h).ok().filter(|t| t.grading == *gamma) {
                self.hs.push(h);
                self.first.get_or_insert(t);
            }
        }
    }

    fn finish(self) -> Option<TypedGrading> {
        let mut hs = self.hs;
        hs.sort();
        self.first.map(|mut t| {
            t.h_alternatives = hs;
            t
        })
    }
}

/// Determines the type and parameters of an exchange-compatible grading of
/// `A ⊕ A^sop` (`A = M_{n,m}` or `Q(n)`); the answer is checked by rebuilding
/// the grading exactly.
pub fn classify(r: &SuperAlgebra, gamma: &Grading, star: &SuperMap) -> Result<TypedGrading> {
    if gamma.algebra() != r || star.algebra() != r {
        return Err(Error::AlgebraMismatch);
    }
    let base_alg = r.base().ok_or_else(|| Error::Inapplicable("classification needs a pair algebra A + A^sop".into()))?;
    if star != &exchange(r)? {
        return Err(Error::Precondition("the involution must be the exchange involution".into()));
    }
    let rep = verify_grading(gamma, Some(star));
    if !rep.passed {
        let why = rep.witnesses.first().map(|w| w.detail.clone()).unwrap_or_default();
        return Err(Error::Precondition(format!("not an exchange-compatible grading: {why}")));
    }
    if !involution_simple(r, star)? {
        return Err(Error::Precondition("the pair algebra is not involution simple".into()));
    }
    let group = gamma.group()?.clone();
    let alpha = action_of_grading(gamma)?;
    let typing = type_characters(&alpha, &group)?;
    let lambda: Vec<Character> =
        typing.chars.iter().zip(&typing.decs).filter(|(_, d)| d.map_type == 1).map(|(c, _)| c.clone()).collect();
    if lambda.len() == group.order() {
        let base = base_of(gamma, &base_alg)?;
        let out = build_type_i(&base)?;
        if out.grading != *gamma {
            return Err(Error::Classification("all characters act by type 1 maps but A is not a graded subspace".into()));
        }
        return Ok(out);
    }
    match base_alg.kind() {
        AlgebraKind::QType { n } => classify_q(r, gamma, &alpha, &group, &typing, *n),
        _ => classify_matrix(r, gamma, &alpha, &group, &typing, &lambda, &base_alg),
    }
}

fn classify_matrix(
    r: &SuperAlgebra,
    gamma: &Grading,
    alpha: &ActionHom,
    group: &AbGroup,
    typing: &Typing,
    lambda: &[Character],
    base_alg: &SuperAlgebra,
) -> Result<TypedGrading> {
    let index = group.order() / lambda.len();
    if index != 2 {
        return Err(Error::Classification(format!("type 1 characters form a subgroup of index {index}")));
    }
    let xi = typing.chars.iter().find(|c| !lambda.contains(c)).expect("index 2 leaves a character outside").clone();
    let phi = alpha.image(&xi)?;
    let gens: Vec<SuperMap> = alpha.images.clone();
    let lambda_maps = lambda.iter().map(|c| alpha.image(c)).collect::<Result<Vec<_>>>()?;

    // Type II: a type 1 square root of φ² commuting with the whole action
    let c = RootConstraints { components: Vec::new(), commute: gens.clone(), type1: true };
    let ambient = fixed_space(r, &lambda_maps)?;
    if let Ok(root) = commuting_root(&phi, 2, Some(&ambient), &c) {
        let beta = companion(alpha, group, lambda, &xi, &root.psi)?;
        if let Ok(ex) = exchange_decompose(alpha, &beta, lambda) {
            let base = base_of(&ex.second, base_alg)?;
            let mut found = Found::default();
            for cand in dagger_candidates(&phi, &root.psi)? {
                found.scan(gamma, group, 2, |h| build_type_ii(&base, &cand.phi0, h));
            }
            if let Some(t) = found.finish() {
                return Ok(t);
            }
        }
    }

    // Type III: a fourth root, with the companion action agreeing on a subgroup of index 4
    let xi2 = group.char_power(&xi, 2);
    let xi4 = group.char_power(&xi, 4);
    let mut found = Found::default();
    for sub in subgroup_of_index(group, lambda, 4) {
        if sub.contains(&xi2) || !sub.contains(&xi4) {
            continue;
        }
        let sub_maps = sub.iter().map(|c| alpha.image(c)).collect::<Result<Vec<_>>>()?;
        let mut commute = sub_maps.clone();
        commute.push(exchange(r)?);
        let c = RootConstraints { components: Vec::new(), commute, type1: true };
        let ambient = fixed_space(r, &sub_maps)?;
        let Ok(root) = commuting_root(&phi, 4, Some(&ambient), &c) else { continue };
        let Ok(beta) = companion(alpha, group, &sub, &xi, &root.psi) else { continue };
        let Ok(ex) = exchange_decompose(alpha, &beta, &sub) else { continue };
        let base = base_of(&ex.second, base_alg)?;
        for cand in dagger_candidates(&phi, &root.psi)? {
            let cube = cand.phi0.pow(3).with_claim(MapKind::Antiautomorphism);
            for dagger in [&cand.phi0, &cube] {
                found.scan(gamma, group, 4, |h| build_type_iii(&base, dagger, h));
            }
        }
    }
    found.finish().ok_or_else(|| Error::Classification("no type II or type III parameters reproduce the grading".into()))
}

fn classify_q(
    r: &SuperAlgebra,
    gamma: &Grading,
    alpha: &ActionHom,
    group: &AbGroup,
    typing: &Typing,
    n: usize,
) -> Result<TypedGrading> {
    // per character: type, the map π₁ on B = M_n and the unit λ
    let mut lambda = Vec::new();
    let mut zeta: Option<(Character, MatrixF)> = None;
    let mut pis: Vec<MatrixF> = Vec::new();
    for (chi, d) in typing.chars.iter().zip(&typing.decs) {
        let kind = if d.map_type == 1 { MapKind::Automorphism } else { MapKind::Antiautomorphism };
        let q = decompose_q_map(&d.phi0, kind)
            .map_err(|e| Error::Classification(format!("character {:?} does not act through M_n: {e}", chi.0)))?;
        pis.push(q.psi0.action().clone());
        if d.map_type == 1 && q.unit.is_one() {
            lambda.push(chi.clone());
        }
        if d.map_type == 2 && zeta.is_none() {
            let (z, p) = if q.unit == Scalar::i() {
                (chi.clone(), q.psi0.action().clone())
            } else {
                let chi3 = group.char_power(chi, 3);
                let idx = typing.chars.iter().position(|c| *c == chi3).expect("characters are closed");
                let q3 = decompose_q_map(&typing.decs[idx].phi0, MapKind::Antiautomorphism)?;
                (chi3, q3.psi0.action().clone())
            };
            zeta = Some((z, p));
        }
    }
    let index = group.order() / lambda.len();
    if index != 4 {
        return Err(Error::Classification(format!("characters of type 1 with unit +1 form a subgroup of index {index}")));
    }
    let (zeta, phi1) = zeta.expect("index 4 needs a type 2 character");
    let b = SuperAlgebra::matrix(n, 0);
    let phi1 = SuperMap::new(&b, phi1, MapKind::Antiautomorphism)?;
    let pi_maps: Vec<SuperMap> = pis.into_iter().map(|p| SuperMap::new(&b, p, MapKind::Unchecked)).collect::<Result<_>>()?;
    let autos: Vec<SuperMap> =
        pi_maps.iter().filter(|p| check_super_map(p, Claim::Automorphism).passed).cloned().collect();
    let c = RootConstraints { components: Vec::new(), commute: pi_maps.clone(), type1: false };
    let ambient = fixed_space(&b, &autos)?;
    let root = commuting_root(&phi1, 2, Some(&ambient), &c)
        .map_err(|e| Error::Classification(format!("no square root of phi_1^2 commuting with the action on M_n: {e}")))?;
    let q = SuperAlgebra::q(n);
    let psi0 = q_map(&q, root.psi.action(), &Scalar::one(), MapKind::Automorphism)?;
    let psi = pair_type1(r, &psi0)?;
    let phi = alpha.image(&zeta)?;
    let beta = companion(alpha, group, &lambda, &zeta, &psi)?;
    let ex = exchange_decompose(alpha, &beta, &lambda)?;
    let d = n * n;
    let qd = 2 * d;
    // B_g = {u : ((u, 0), 0) ∈ R̄_g}
    let base_comps = ex
        .second
        .components()
        .iter()
        .map(|s| first_slot(s, qd).and_then(|a| first_slot(&a, d)))
        .collect::<Result<Vec<_>>>()?;
    let base = Grading::new(&b, gamma.index().clone(), base_comps)?;
    let mut found = Found::default();
    for th in [phi.inverse()?.compose(&psi), phi.compose(&psi.inverse()?)] {
        let Ok(dec) = decompose_pair_map(&th) else { continue };
        let Ok(qd) = decompose_q_map(&dec.phi0, MapKind::Antiautomorphism) else { continue };
        let Ok(dagger) = SuperMap::new(&b, qd.psi0.action().clone(), MapKind::Antiautomorphism) else { continue };
        found.scan(gamma, group, 4, |h| build_q_type_ii(&base, &dagger, h));
    }
    found.finish().ok_or_else(|| Error::Classification("no Q-II parameters reproduce the grading".into()))
}
