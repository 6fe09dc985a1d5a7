use crate::abgroup::{char_eval, orth_complement, AbGroup, Character, GroupElem};
use crate::error::{Error, Result};
use crate::exactfield::Subspace;
use crate::gradings::{grading_of_action, ActionHom, Grading};
use crate::superalg::{MapKind, SuperMap};

/// The three gradings of the Exchange Theorem and the two reconstructions.
#[derive(Debug, Clone)]
pub struct ExchangeResult {
    pub gamma: ActionHom,
    /// `H = Λ^⊥`.
    pub h_subgroup: Vec<GroupElem>,
    /// `V^{(h)}` for each `h ∈ H`, in the order of `h_subgroup`.
    pub h_components: Vec<Subspace>,
    /// Grading of `α`.
    pub first: Grading,
    /// Grading of `β`.
    pub second: Grading,
    /// `⊕_h (second_{gh} ∩ V^{(h)})` for every `g`.
    pub reconstructed_first: Grading,
    /// `⊕_h (first_{gh} ∩ V^{(h^{-1})})` for every `g`.
    pub reconstructed_second: Grading,
    pub first_identity: bool,
    pub second_identity: bool,
}

impl ExchangeResult {
    pub fn holds(&self) -> bool {
        self.first_identity && self.second_identity
    }

    pub fn h_component(&self, h: &GroupElem) -> Option<&Subspace> {
        self.h_subgroup.iter().position(|x| x == h).map(|i| &self.h_components[i])
    }
}

fn check_hypotheses(alpha: &ActionHom, beta: &ActionHom, lambda: &[Character]) -> Result<()> {
    if alpha.group != beta.group {
        return Err(Error::GroupMismatch("alpha and beta act through different groups".into()));
    }
    if alpha.algebra() != beta.algebra() {
        return Err(Error::AlgebraMismatch);
    }
    alpha.validate()?;
    beta.validate()?;
    for l in lambda {
        if alpha.image(l)? != beta.image(l)? {
            return Err(Error::Hypothesis(format!("alpha and beta differ on lambda = {:?}", l.0)));
        }
    }
    for (i, a) in alpha.images.iter().enumerate() {
        for (j, b) in beta.images.iter().enumerate() {
            if !a.commutes_with(b) {
                return Err(Error::Hypothesis(format!(
                    "alpha(chi_{i}) and beta(chi_{j}) do not commute"
                )));
            }
        }
    }
    Ok(())
}

fn direct_sum_of(parts: impl Iterator<Item = Result<Subspace>>, dim: usize) -> Result<Subspace> {
    let mut acc = Subspace::zero(dim);
    for p in parts {
        acc = acc.sum(&p?)?;
    }
    Ok(acc)
}

/// Exchange Theorem: from two commuting actions agreeing on `Λ`, builds the
/// `H`-grading of `γ = α^{-1}β` and checks both reconstruction identities.
pub fn exchange_decompose(alpha: &ActionHom, beta: &ActionHom, lambda: &[Character]) -> Result<ExchangeResult> {
    let group: &AbGroup = &alpha.group;
    let lambda = group.close_characters(lambda)?;
    check_hypotheses(alpha, beta, &lambda)?;
    let alg = alpha.algebra().cloned().ok_or_else(|| Error::Precondition("trivial group has no algebra".into()))?;
    let d = alg.dim();
    let gamma_images: Vec<SuperMap> = alpha
        .images
        .iter()
        .zip(&beta.images)
        .map(|(a, b)| Ok(a.inverse()?.compose(b).with_claim(MapKind::Automorphism)))
        .collect::<Result<_>>()?;
    let gamma = ActionHom::new(group, gamma_images)?;
    let h_subgroup = orth_complement(&lambda, group)?;
    let gens = group.character_generators();
    let mut h_components = Vec::with_capacity(h_subgroup.len());
    for h in &h_subgroup {
        let mut space = Subspace::full(d);
        for (chi, img) in gens.iter().zip(&gamma.images) {
            space = space.intersect(&Subspace::eigenspace(img.action(), &char_eval(group, chi, h)?))?;
        }
        h_components.push(space);
    }
    let total: usize = h_components.iter().map(Subspace::dim).sum();
    if total != d {
        return Err(Error::Hypothesis(format!("the V^(h) have total dimension {total}, expected {d}")));
    }
    let first = grading_of_action(alpha)?;
    let second = grading_of_action(beta)?;
    let mut rec_first = Vec::with_capacity(group.order());
    let mut rec_second = Vec::with_capacity(group.order());
    for g in group.elements() {
        rec_first.push(direct_sum_of(
            h_subgroup.iter().zip(&h_components).map(|(h, vh)| second.component(&group.op(&g, h))?.intersect(vh)),
            d,
        )?);
        rec_second.push(direct_sum_of(
            h_subgroup.iter().map(|h| {
                let vh = &h_components[h_subgroup.iter().position(|x| *x == group.inverse(h)).expect("H is a subgroup")];
                first.component(&group.op(&g, h))?.intersect(vh)
            }),
            d,
        )?);
    }
    let reconstructed_first = Grading::over_group(&alg, group, rec_first)?;
    let reconstructed_second = Grading::over_group(&alg, group, rec_second)?;
    Ok(ExchangeResult {
        first_identity: reconstructed_first == first,
        second_identity: reconstructed_second == second,
        gamma,
        h_subgroup,
        h_components,
        first,
        second,
        reconstructed_first,
        reconstructed_second,
    })
}
