//! JSON interchange: exact scalars as strings `c0 + c1*z + …` in `Q(ζ_N)` with
//! the order `N` declared alongside, and descriptors for groups, algebras,
//! maps, gradings and typed gradings.

use serde::{Deserialize, Serialize};

use crate::abgroup::{AbGroup, GroupElem, SemigroupTable};
use crate::classify::{build_q_type_ii, build_type_i, build_type_ii, build_type_iii, TypeTag, TypedGrading};
use crate::error::{Error, Result};
use crate::exactfield::{lcm, MatrixF, Scalar, Subspace, Vector};
use crate::gradings::{elementary_grading, pauli_grading_on, ActionHom, Grading, GradingIndex};
use crate::superalg::canonical::{canonical_map, componentwise, flat_matrix_operator, CanonicalKind};
use crate::superalg::{AlgebraKind, MapKind, SuperAlgebra, SuperMap};

/// Rows of exact scalars written at a common cyclotomic order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarRows {
    pub order: u32,
    pub rows: Vec<Vec<String>>,
}

impl ScalarRows {
    pub fn from_vectors(rows: &[Vector]) -> Self {
        let order = rows.iter().flatten().fold(1, |acc, x| lcm(acc, x.order()));
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|x| x.format_at(order).expect("order divides the common order")).collect())
            .collect();
        ScalarRows { order, rows }
    }

    pub fn from_matrix(m: &MatrixF) -> Self {
        let rows: Vec<Vector> = (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect()).collect();
        ScalarRows::from_vectors(&rows)
    }

    /// Parses every entry; `field` names the location in error messages.
    pub fn to_vectors(&self, field: &str) -> Result<Vec<Vector>> {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                r.iter()
                    .enumerate()
                    .map(|(j, s)| {
                        Scalar::parse(s, self.order).map_err(|e| Error::Parse(format!("{field}[{i}][{j}]: {e}")))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn to_matrix(&self, field: &str) -> Result<MatrixF> {
        MatrixF::from_rows(self.to_vectors(field)?).map_err(|e| Error::Parse(format!("{field}: {e}")))
    }
}

pub fn algebra_of(kind: &AlgebraKind) -> Result<SuperAlgebra> {
    SuperAlgebra::new(kind.clone()).map_err(|e| Error::Parse(format!("algebra: {e}")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub algebra: AlgebraKind,
    pub kind: MapKind,
    /// Action matrix; column `j` is the image of basis element `j`.
    pub action: ScalarRows,
}

impl MapJson {
    pub fn from_map(f: &SuperMap) -> Self {
        MapJson { algebra: f.algebra().kind().clone(), kind: f.claimed(), action: ScalarRows::from_matrix(f.action()) }
    }

    pub fn to_map(&self) -> Result<SuperMap> {
        let alg = algebra_of(&self.algebra)?;
        let m = self.action.to_matrix("action")?;
        SuperMap::new(&alg, m, self.kind).map_err(|e| Error::Parse(format!("action: {e}")))
    }
}

/// Either a named map or an explicit action matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MapSpec {
    Named { algebra: AlgebraKind, canonical: NamedMap },
    Explicit(MapJson),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedMap {
    Osp,
    Trp,
    Exchange,
    Tau,
    /// Ordinary transpose on a matrix algebra.
    Transpose,
    Identity,
}

impl MapSpec {
    pub fn to_map(&self) -> Result<SuperMap> {
        match self {
            MapSpec::Explicit(j) => j.to_map(),
            MapSpec::Named { algebra, canonical } => {
                let alg = algebra_of(algebra)?;
                // on a plain product the named map acts componentwise
                if let (AlgebraKind::Product { left, right }, false) = (algebra, *canonical == NamedMap::Identity) {
                    let f = MapSpec::Named { algebra: (**left).clone(), canonical: *canonical }.to_map()?;
                    let g = MapSpec::Named { algebra: (**right).clone(), canonical: *canonical }.to_map()?;
                    return componentwise(&alg, &f, &g, f.claimed()).map_err(|e| Error::Parse(format!("canonical: {e}")));
                }
                let kind = match canonical {
                    NamedMap::Osp => CanonicalKind::Osp,
                    NamedMap::Trp => CanonicalKind::Trp,
                    NamedMap::Exchange => CanonicalKind::Exchange,
                    NamedMap::Tau => CanonicalKind::Tau,
                    NamedMap::Identity => return Ok(SuperMap::identity(&alg)),
                    NamedMap::Transpose => {
                        let s = alg.matrix_size().filter(|_| matches!(alg.kind(), AlgebraKind::MatrixSuper { .. }));
                        let s = s.ok_or_else(|| Error::Parse("canonical: transpose needs a matrix algebra".into()))?;
                        return SuperMap::new(&alg, flat_matrix_operator(s, |x| x.transpose()), MapKind::Antiautomorphism);
                    }
                };
                canonical_map(kind, &alg).map_err(|e| Error::Parse(format!("canonical: {e}")))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentJson {
    /// Group element, or `[index]` for a semigroup.
    pub g: Vec<u32>,
    pub basis: ScalarRows,
}

/// `{"group":{...},"algebra":{...},"components":[{"g":[...],"basis":{...}}]}`;
/// components not listed are zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<AbGroup>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub semigroup: Option<SemigroupTable>,
    pub algebra: AlgebraKind,
    pub components: Vec<ComponentJson>,
}

impl GradingJson {
    pub fn from_grading(gamma: &Grading) -> Self {
        let (group, semigroup) = match gamma.index() {
            GradingIndex::Group(g) => (Some(g.clone()), None),
            GradingIndex::Semigroup(s) => (None, Some(s.clone())),
        };
        let components = gamma
            .components()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| ComponentJson {
                g: match &group {
                    Some(g) => g.element(i).0,
                    None => vec![i as u32],
                },
                basis: ScalarRows::from_vectors(c.basis()),
            })
            .collect();
        GradingJson { group, semigroup, algebra: gamma.algebra().kind().clone(), components }
    }

    pub fn to_grading(&self) -> Result<Grading> {
        let alg = algebra_of(&self.algebra)?;
        let index = match (&self.group, &self.semigroup) {
            (Some(g), None) => GradingIndex::Group(AbGroup::new(g.factors.clone()).map_err(|e| Error::Parse(format!("group: {e}")))?),
            (None, Some(s)) => GradingIndex::Semigroup(
                SemigroupTable::new(s.table.clone(), s.identity).map_err(|e| Error::Parse(format!("semigroup: {e}")))?,
            ),
            _ => return Err(Error::Parse("exactly one of `group` and `semigroup` must be given".into())),
        };
        let mut comps: Vec<Vec<Vector>> = vec![Vec::new(); index.size()];
        for (k, c) in self.components.iter().enumerate() {
            let slot = match &index {
                GradingIndex::Group(g) => {
                    let e = GroupElem(c.g.clone());
                    g.check(&e).map_err(|e| Error::Parse(format!("components[{k}].g: {e}")))?;
                    g.index_of(&e)
                }
                GradingIndex::Semigroup(s) => match c.g.as_slice() {
                    [i] if (*i as usize) < s.size => *i as usize,
                    _ => return Err(Error::Parse(format!("components[{k}].g: expected a single index below {}", s.size))),
                },
            };
            let vs = c.basis.to_vectors(&format!("components[{k}].basis"))?;
            if let Some(v) = vs.iter().find(|v| v.len() != alg.dim()) {
                return Err(Error::Parse(format!("components[{k}].basis: vectors must have length {}, found {}", alg.dim(), v.len())));
            }
            comps[slot].extend(vs);
        }
        let subspaces = comps.iter().map(|vs| Subspace::span(vs, alg.dim())).collect();
        Grading::new(&alg, index, subspaces)
    }
}

/// Grading descriptors accepted by builders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GradingSpec {
    Elementary { algebra: AlgebraKind, group: AbGroup, tuple: Vec<Vec<u32>> },
    Pauli { algebra: AlgebraKind },
    Trivial { algebra: AlgebraKind, group: AbGroup },
    /// Degree of each basis element.
    Degrees { algebra: AlgebraKind, group: AbGroup, degrees: Vec<Vec<u32>> },
    Explicit(GradingJson),
}

impl GradingSpec {
    pub fn to_grading(&self) -> Result<Grading> {
        let group_of = |g: &AbGroup| AbGroup::new(g.factors.clone()).map_err(|e| Error::Parse(format!("group: {e}")));
        match self {
            GradingSpec::Explicit(j) => j.to_grading(),
            GradingSpec::Pauli { algebra } => pauli_grading_on(&algebra_of(algebra)?),
            GradingSpec::Trivial { algebra, group } => Ok(Grading::trivial(&algebra_of(algebra)?, &group_of(group)?)),
            GradingSpec::Elementary { algebra, group, tuple } => {
                let g = group_of(group)?;
                let t: Vec<GroupElem> = tuple.iter().map(|x| GroupElem(x.clone())).collect();
                for (k, e) in t.iter().enumerate() {
                    g.check(e).map_err(|e| Error::Parse(format!("tuple[{k}]: {e}")))?;
                }
                elementary_grading(&algebra_of(algebra)?, &g, &t)
            }
            GradingSpec::Degrees { algebra, group, degrees } => {
                let alg = algebra_of(algebra)?;
                let g = group_of(group)?;
                if degrees.len() != alg.dim() {
                    return Err(Error::Parse(format!("degrees: expected {} entries, found {}", alg.dim(), degrees.len())));
                }
                for (k, d) in degrees.iter().enumerate() {
                    g.check(&GroupElem(d.clone())).map_err(|e| Error::Parse(format!("degrees[{k}]: {e}")))?;
                }
                Ok(Grading::from_degrees(&alg, &g, |k| GroupElem(degrees[k].clone())))
            }
        }
    }
}

/// `{"type":"II","h":[...],"dagger":{...},"base":{...},"grading":{...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypedGradingJson {
    #[serde(rename = "type")]
    pub type_tag: TypeTag,
    pub h: Option<Vec<u32>>,
    pub h_alternatives: Vec<Vec<u32>>,
    pub dagger: Option<MapJson>,
    pub base: GradingJson,
    pub grading: GradingJson,
    pub lambda_index: usize,
}

impl TypedGradingJson {
    pub fn from_typed(t: &TypedGrading) -> Self {
        TypedGradingJson {
            type_tag: t.type_tag,
            h: t.h.as_ref().map(|h| h.0.clone()),
            h_alternatives: t.h_alternatives.iter().map(|h| h.0.clone()).collect(),
            dagger: t.dagger.as_ref().map(MapJson::from_map),
            base: GradingJson::from_grading(&t.base),
            grading: GradingJson::from_grading(&t.grading),
            lambda_index: t.lambda_index,
        }
    }
}

/// Images of the canonical character generators, `{"group":{...},"images":[...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionJson {
    pub group: AbGroup,
    pub images: Vec<MapSpec>,
}

impl ActionJson {
    pub fn from_action(a: &ActionHom) -> Self {
        ActionJson { group: a.group.clone(), images: a.images.iter().map(|f| MapSpec::Explicit(MapJson::from_map(f))).collect() }
    }

    pub fn to_action(&self) -> Result<ActionHom> {
        let group = AbGroup::new(self.group.factors.clone()).map_err(|e| Error::Parse(format!("group: {e}")))?;
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(k, m)| m.to_map().map_err(|e| Error::Parse(format!("images[{k}]: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        ActionHom::new(&group, images)
    }
}

/// Input of the `build` verb.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildSpec {
    #[serde(rename = "type")]
    pub type_tag: TypeTag,
    pub base: GradingSpec,
    #[serde(default)]
    pub dagger: Option<MapSpec>,
    #[serde(default)]
    pub h: Option<Vec<u32>>,
}

impl BuildSpec {
    pub fn build(&self) -> Result<TypedGrading> {
        let base = self.base.to_grading()?;
        let need = |what: &str| Error::Parse(format!("{what}: required for type {}", self.type_tag));
        let dagger = || self.dagger.as_ref().ok_or_else(|| need("dagger")).and_then(MapSpec::to_map);
        let h = || self.h.clone().map(GroupElem).ok_or_else(|| need("h"));
        match self.type_tag {
            TypeTag::I | TypeTag::QI => build_type_i(&base),
            TypeTag::II => build_type_ii(&base, &dagger()?, &h()?),
            TypeTag::III => build_type_iii(&base, &dagger()?, &h()?),
            TypeTag::QII => build_q_type_ii(&base, &dagger()?, &h()?),
        }
    }
}
