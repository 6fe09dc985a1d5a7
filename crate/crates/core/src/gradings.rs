//! Gradings stored as families of component subspaces, their builders, and
//! the correspondence with actions of the dual group.

use serde::{Deserialize, Serialize};

use crate::abgroup::{char_eval, AbGroup, Character, GroupElem, SemigroupTable};
use crate::error::{Error, Result};
use crate::exactfield::{is_direct_decomposition, MatrixF, Scalar, Subspace, Vector};
use crate::superalg::checks::{involution_simple, Witness};
use crate::superalg::element::flatten_matrix;
use crate::superalg::{AlgebraKind, MapKind, SuperAlgebra, SuperMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradingIndex {
    Group(AbGroup),
    Semigroup(SemigroupTable),
}

impl GradingIndex {
    pub fn size(&self) -> usize {
        match self {
            GradingIndex::Group(g) => g.order(),
            GradingIndex::Semigroup(s) => s.size,
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            GradingIndex::Group(g) => g.index_of(&g.op(&g.element(a), &g.element(b))),
            GradingIndex::Semigroup(s) => s.mul(a, b),
        }
    }

    pub fn identity(&self) -> Option<usize> {
        match self {
            GradingIndex::Group(g) => Some(g.index_of(&g.identity())),
            GradingIndex::Semigroup(s) => s.identity,
        }
    }

    pub fn label(&self, a: usize) -> String {
        match self {
            GradingIndex::Group(g) => format!("{:?}", g.element(a).0),
            GradingIndex::Semigroup(_) => a.to_string(),
        }
    }
}

/// `R = ⊕ R_g`, with `components[i]` the component of index element `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    index: GradingIndex,
    alg: SuperAlgebra,
    components: Vec<Subspace>,
}

impl Grading {
    pub fn new(alg: &SuperAlgebra, index: GradingIndex, components: Vec<Subspace>) -> Result<Self> {
        if components.len() != index.size() {
            return Err(Error::DimensionMismatch { expected: index.size(), found: components.len() });
        }
        if let Some(c) = components.iter().find(|c| c.ambient_dim() != alg.dim()) {
            return Err(Error::DimensionMismatch { expected: alg.dim(), found: c.ambient_dim() });
        }
        Ok(Grading { index, alg: alg.clone(), components })
    }

    pub fn over_group(alg: &SuperAlgebra, group: &AbGroup, components: Vec<Subspace>) -> Result<Self> {
        Grading::new(alg, GradingIndex::Group(group.clone()), components)
    }

    /// Grading in which basis element `k` has degree `deg(k)`.
    pub fn from_degrees(alg: &SuperAlgebra, group: &AbGroup, deg: impl Fn(usize) -> GroupElem) -> Self {
        let mut buckets: Vec<Vec<Vector>> = vec![Vec::new(); group.order()];
        for k in 0..alg.dim() {
            buckets[group.index_of(&deg(k))].push(alg.basis_vector(k));
        }
        let components = buckets.iter().map(|vs| Subspace::span(vs, alg.dim())).collect();
        Grading { index: GradingIndex::Group(group.clone()), alg: alg.clone(), components }
    }

    pub fn trivial(alg: &SuperAlgebra, group: &AbGroup) -> Self {
        let e = group.identity();
        Grading::from_degrees(alg, group, |_| e.clone())
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.alg
    }

    pub fn index(&self) -> &GradingIndex {
        &self.index
    }

    pub fn group(&self) -> Result<&AbGroup> {
        match &self.index {
            GradingIndex::Group(g) => Ok(g),
            GradingIndex::Semigroup(_) => Err(Error::Precondition("grading is indexed by a semigroup".into())),
        }
    }

    pub fn components(&self) -> &[Subspace] {
        &self.components
    }

    pub fn component(&self, g: &GroupElem) -> Result<&Subspace> {
        let group = self.group()?;
        group.check(g)?;
        Ok(&self.components[group.index_of(g)])
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(Subspace::dim).collect()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.components.len()).filter(|&i| !self.components[i].is_zero()).collect()
    }

    pub fn is_fine(&self) -> bool {
        self.components.iter().all(|c| c.dim() <= 1)
    }

    pub fn is_direct_sum(&self) -> bool {
        is_direct_decomposition(&self.components, self.alg.dim())
    }

    /// Relabels degrees along a map of groups.
    pub fn pushforward(&self, target: &AbGroup, f: impl Fn(&GroupElem) -> GroupElem) -> Result<Grading> {
        let src = self.group()?;
        let mut acc: Vec<Vec<Vector>> = vec![Vec::new(); target.order()];
        for (i, c) in self.components.iter().enumerate() {
            let img = f(&src.element(i));
            target.check(&img)?;
            acc[target.index_of(&img)].extend(c.basis().iter().cloned());
        }
        let components = acc.iter().map(|vs| Subspace::span(vs, self.alg.dim())).collect();
        Ok(Grading { index: GradingIndex::Group(target.clone()), alg: self.alg.clone(), components })
    }

    /// The same subspaces regarded as a grading of another algebra with the same flattening.
    pub fn on_algebra(&self, alg: &SuperAlgebra) -> Result<Grading> {
        Grading::new(alg, self.index.clone(), self.components.clone())
    }
}

/// Homomorphism `Ĝ → Aut R`, stored by the images of the canonical generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionHom {
    pub group: AbGroup,
    pub images: Vec<SuperMap>,
}

impl ActionHom {
    pub fn new(group: &AbGroup, images: Vec<SuperMap>) -> Result<Self> {
        if images.len() != group.rank() {
            return Err(Error::DimensionMismatch { expected: group.rank(), found: images.len() });
        }
        Ok(ActionHom { group: group.clone(), images })
    }

    pub fn trivial(group: &AbGroup, alg: &SuperAlgebra) -> Self {
        ActionHom { group: group.clone(), images: vec![SuperMap::identity(alg); group.rank()] }
    }

    pub fn algebra(&self) -> Option<&SuperAlgebra> {
        self.images.first().map(SuperMap::algebra)
    }

    /// `α(χ) = Π α(χ_i)^{c_i}`.
    pub fn image(&self, chi: &Character) -> Result<SuperMap> {
        self.group.check_char(chi)?;
        let alg = self.algebra().cloned();
        let mut acc = match &alg {
            Some(a) => SuperMap::identity(a),
            None => return Err(Error::Precondition("action on the trivial group has no algebra".into())),
        };
        for (img, &c) in self.images.iter().zip(&chi.0) {
            acc = acc.compose(&img.pow(c));
        }
        Ok(acc.with_claim(MapKind::Automorphism))
    }

    /// Checks that images commute pairwise and `α(χ_i)^{n_i} = id`.
    pub fn validate(&self) -> Result<()> {
        for (i, a) in self.images.iter().enumerate() {
            if !a.pow(self.group.factors[i]).is_identity() {
                return Err(Error::Hypothesis(format!("image of generator {i} has order not dividing {}", self.group.factors[i])));
            }
            for (j, b) in self.images.iter().enumerate().skip(i + 1) {
                if !a.commutes_with(b) {
                    return Err(Error::Hypothesis(format!("images of generators {i} and {j} do not commute")));
                }
            }
        }
        Ok(())
    }
}

/// `deg E_ij = g_i^{-1} g_j`.
pub fn elementary_grading(alg: &SuperAlgebra, group: &AbGroup, tuple: &[GroupElem]) -> Result<Grading> {
    let s = alg.matrix_size().filter(|_| matches!(alg.kind(), AlgebraKind::MatrixSuper { .. }));
    let Some(s) = s else { return Err(Error::Inapplicable("elementary gradings need a matrix algebra".into())) };
    if tuple.len() != s {
        return Err(Error::DimensionMismatch { expected: s, found: tuple.len() });
    }
    for g in tuple {
        group.check(g)?;
    }
    Ok(Grading::from_degrees(alg, group, |k| group.op(&group.inverse(&tuple[k / s]), &tuple[k % s])))
}

/// Clock matrix `diag(1, ζ_n, …, ζ_n^{n-1})`.
pub fn clock_matrix(n: usize) -> MatrixF {
    MatrixF::diagonal(&(0..n).map(|k| Scalar::root_of_unity(n as u32, k as i64)).collect::<Vec<_>>())
}

/// Cyclic shift `e_i ↦ e_{i+1}`.
pub fn shift_matrix(n: usize) -> MatrixF {
    let mut p = MatrixF::zeros(n, n);
    for i in 0..n {
        p.set((i + 1) % n, i, Scalar::one());
    }
    p
}

/// `Z_n × Z_n` grading of `M_n` (or of any `M_{k,l}` with `k + l = n`)
/// with component `(a, b)` spanned by `D^a P^b`.
pub fn pauli_grading_on(alg: &SuperAlgebra) -> Result<Grading> {
    let AlgebraKind::MatrixSuper { n: k, m: l } = alg.kind() else {
        return Err(Error::Inapplicable("Pauli gradings need a matrix algebra".into()));
    };
    let n = k + l;
    if n < 2 {
        return Err(Error::Precondition(format!("Pauli grading needs n >= 2, got {n}")));
    }
    let group = AbGroup::new(vec![n as u32, n as u32])?;
    let d = clock_matrix(n);
    let p = shift_matrix(n);
    let mut components = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let x = &d.pow(a as u32) * &p.pow(b as u32);
            components.push(Subspace::span(&[flatten_matrix(&x)], alg.dim()));
        }
    }
    Grading::over_group(alg, &group, components)
}

pub fn pauli_fine_grading(n: usize) -> Result<Grading> {
    if n < 2 {
        return Err(Error::Precondition(format!("Pauli grading needs n >= 2, got {n}")));
    }
    pauli_grading_on(&SuperAlgebra::matrix(n, 0))
}

/// Grading of `C ⊗ D` with `deg(c ⊗ d) = deg(c) deg(d)`; `D` must carry the
/// trivial super structure. The result lives on `M_{nq, mq}`.
pub fn tensor_grading(c: &Grading, d: &Grading) -> Result<Grading> {
    let g = c.group()?;
    if d.group()? != g {
        return Err(Error::GroupMismatch("tensor factors are graded by different groups".into()));
    }
    let AlgebraKind::MatrixSuper { n, m } = c.algebra().kind() else {
        return Err(Error::Inapplicable("tensor grading needs a matrix algebra C".into()));
    };
    let AlgebraKind::MatrixSuper { n: q, m: 0 } = d.algebra().kind() else {
        return Err(Error::Inapplicable("tensor grading needs an ungraded matrix algebra D".into()));
    };
    let (sc, sd) = (n + m, *q);
    let out = SuperAlgebra::matrix(n * q, m * q);
    let mut acc: Vec<Vec<Vector>> = vec![Vec::new(); g.order()];
    for (i, ci) in c.components().iter().enumerate() {
        for (j, dj) in d.components().iter().enumerate() {
            let k = g.index_of(&g.op(&g.element(i), &g.element(j)));
            for x in ci.basis() {
                let xm = MatrixF::from_entries(sc, sc, x.clone())?;
                for y in dj.basis() {
                    let ym = MatrixF::from_entries(sd, sd, y.clone())?;
                    acc[k].push(flatten_matrix(&xm.kron(&ym)));
                }
            }
        }
    }
    let components = acc.iter().map(|vs| Subspace::span(vs, out.dim())).collect();
    Grading::over_group(&out, g, components)
}

/// `R_g = ∩_i ker(α(χ_i) - χ_i(g))` over the generators.
pub fn grading_of_action(alpha: &ActionHom) -> Result<Grading> {
    alpha.validate()?;
    let alg = alpha
        .algebra()
        .cloned()
        .ok_or_else(|| Error::Precondition("action on the trivial group has no algebra".into()))?;
    let group = &alpha.group;
    let gens = group.character_generators();
    let mut components = Vec::with_capacity(group.order());
    for g in group.elements() {
        let mut space = Subspace::full(alg.dim());
        for (chi, img) in gens.iter().zip(&alpha.images) {
            let c = char_eval(group, chi, &g)?;
            space = space.intersect(&Subspace::eigenspace(img.action(), &c))?;
        }
        components.push(space);
    }
    let out = Grading::over_group(&alg, group, components)?;
    if !out.is_direct_sum() {
        return Err(Error::Hypothesis("eigenspaces do not span the algebra".into()));
    }
    Ok(out)
}

/// `α(χ)` acting as `χ(g)` on `R_g`.
pub fn action_of_grading(gamma: &Grading) -> Result<ActionHom> {
    let group = gamma.group()?.clone();
    if !gamma.is_direct_sum() {
        return Err(Error::Precondition("components do not form a direct sum decomposition".into()));
    }
    let alg = gamma.algebra();
    let mut cols = Vec::new();
    let mut owner = Vec::new();
    for (i, c) in gamma.components().iter().enumerate() {
        for v in c.basis() {
            cols.push(v.clone());
            owner.push(i);
        }
    }
    let b = MatrixF::from_columns(&cols, alg.dim());
    let b_inv = b.inverse()?;
    let mut images = Vec::new();
    for chi in group.character_generators() {
        let diag: Vec<Scalar> = owner.iter().map(|&i| char_eval(&group, &chi, &group.element(i))).collect::<Result<_>>()?;
        let action = &(&b * &MatrixF::diagonal(&diag)) * &b_inv;
        images.push(SuperMap::new(alg, action, MapKind::Automorphism)?);
    }
    ActionHom::new(&group, images)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingReport {
    pub passed: bool,
    pub direct_sum: bool,
    pub products: bool,
    pub parity_split: bool,
    pub star_compatible: Option<bool>,
    pub witnesses: Vec<Witness>,
}

const MAX_WITNESSES: usize = 8;

/// Checks direct sum, `R_g R_h ⊆ R_{gh}`, parity splitting and (optionally) `R_g^* = R_g`.
pub fn verify_grading(gamma: &Grading, star: Option<&SuperMap>) -> GradingReport {
    let alg = gamma.algebra();
    let mut witnesses = Vec::new();
    let direct_sum = gamma.is_direct_sum();
    if !direct_sum {
        let total: usize = gamma.dims().iter().sum();
        witnesses.push(Witness::new("direct_sum", vec![], format!("component dimensions sum to {total} in an algebra of dimension {}", alg.dim())));
    }
    let mut parity_split = true;
    for (i, c) in gamma.components().iter().enumerate() {
        for v in c.basis() {
            let (e, _) = alg.parity_split(v);
            if !c.contains(&e) {
                parity_split = false;
                witnesses.push(Witness::new("parity_split", vec![i], format!("component {} is not Z2-graded", gamma.index().label(i))));
                break;
            }
        }
    }
    let mut products = true;
    let support = gamma.support();
    'outer: for &i in &support {
        for &j in &support {
            let target = &gamma.components()[gamma.index().mul(i, j)];
            for x in gamma.components()[i].basis() {
                for y in gamma.components()[j].basis() {
                    let p = alg.mul_vec(x, y);
                    if !target.contains(&p) {
                        products = false;
                        witnesses.push(Witness::new(
                            "products",
                            vec![i, j],
                            format!(
                                "a product of elements of R_{} and R_{} leaves R_{}",
                                gamma.index().label(i),
                                gamma.index().label(j),
                                gamma.index().label(gamma.index().mul(i, j))
                            ),
                        ));
                        if witnesses.len() >= MAX_WITNESSES {
                            break 'outer;
                        }
                        continue 'outer;
                    }
                }
            }
        }
    }
    let star_compatible = star.map(|s| {
        let mut ok = true;
        for (i, c) in gamma.components().iter().enumerate() {
            if !s.preserves(c) {
                ok = false;
                witnesses.push(Witness::new("star", vec![i], format!("the involution moves R_{}", gamma.index().label(i))));
            }
        }
        ok
    });
    GradingReport {
        passed: direct_sum && products && parity_split && star_compatible.unwrap_or(true),
        direct_sum,
        products,
        parity_split,
        star_compatible,
        witnesses,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportReport {
    pub support: Vec<usize>,
    pub commutes: bool,
    /// `None` when there is no declared identity or it lies outside the support.
    pub all_invertible: Option<bool>,
    pub non_commuting: Vec<(usize, usize)>,
}

/// Commutativity and invertibility of support elements of a `*`-compatible grading.
pub fn support_properties(gamma: &Grading, star: &SuperMap) -> Result<SupportReport> {
    if !verify_grading(gamma, Some(star)).passed {
        return Err(Error::Precondition("grading is not a star-compatible grading".into()));
    }
    if !involution_simple(gamma.algebra(), star)? {
        return Err(Error::Precondition("algebra is not involution simple".into()));
    }
    Ok(support_report(gamma))
}

/// [`support_properties`] without re-checking its preconditions.
pub fn support_report(gamma: &Grading) -> SupportReport {
    let support = gamma.support();
    let idx = gamma.index();
    let mut non_commuting = Vec::new();
    for &a in &support {
        for &b in &support {
            if a < b && idx.mul(a, b) != idx.mul(b, a) {
                non_commuting.push((a, b));
            }
        }
    }
    let all_invertible = idx.identity().filter(|e| support.contains(e)).map(|e| {
        support.iter().all(|&a| (0..idx.size()).any(|b| idx.mul(a, b) == e && idx.mul(b, a) == e))
    });
    SupportReport { commutes: non_commuting.is_empty(), support, all_invertible, non_commuting }
}

/// Checks `(R_g R_h)^* ⊆ R_{hg}` on basis witnesses.
pub fn star_reverses_products(gamma: &Grading, star: &SuperMap) -> bool {
    let alg = gamma.algebra();
    let idx = gamma.index();
    let support = gamma.support();
    support.iter().all(|&i| {
        support.iter().all(|&j| {
            let target = &gamma.components()[idx.mul(j, i)];
            gamma.components()[i].basis().iter().all(|x| {
                gamma.components()[j].basis().iter().all(|y| target.contains(&star.apply_vec(&alg.mul_vec(x, y))))
            })
        })
    })
}
