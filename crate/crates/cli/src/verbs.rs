use std::time::Instant;

use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};
use supergrade::abgroup::{Character, GroupElem};
use supergrade::classify::{build_type_iii, classify, z4_example, TypeTag};
use supergrade::gradings::{action_of_grading, grading_of_action, support_properties, support_report, verify_grading};
use supergrade::json::{algebra_of, ActionJson, BuildSpec, GradingJson, GradingSpec, MapJson, MapSpec, ScalarRows, TypedGradingJson};
use supergrade::structure::{
    decompose_pair_map, exchange_decompose, fine_antiauto_obstruction, find_commuting_root, identity_decomposition, RootMode,
};
use supergrade::superalg::canonical::exchange;
use supergrade::superalg::search::superinvolution_search;
use supergrade::superalg::{check_super_map, involution_simple, AlgebraKind, Claim, Witness};
use supergrade::{Error, Grading};

use crate::report::{Report, Status};

/// Errors that end a verb with exit code 2.
#[derive(Debug)]
pub enum VerbError {
    Input(String),
    Core(Error),
}

impl From<Error> for VerbError {
    fn from(e: Error) -> Self {
        VerbError::Core(e)
    }
}

impl std::fmt::Display for VerbError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerbError::Input(s) => write!(f, "malformed input: {s}"),
            VerbError::Core(e) => write!(f, "{e}"),
        }
    }
}

pub type VerbResult = std::result::Result<Report, VerbError>;

/// Deserializes `text`, naming the offending field on failure.
pub fn parse<T: DeserializeOwned>(text: &str) -> std::result::Result<T, VerbError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if path.is_empty() || path == "." {
            VerbError::Input(inner.to_string())
        } else {
            VerbError::Input(format!("field `{path}`: {inner}"))
        }
    })
}

fn required(input: Option<&str>) -> std::result::Result<&str, VerbError> {
    input.ok_or_else(|| VerbError::Input("this verb needs --input FILE".into()))
}

/// Core parse errors are malformed input as well.
fn input_err(e: Error) -> VerbError {
    match e {
        Error::Parse(s) => VerbError::Input(s),
        other => VerbError::Core(other),
    }
}

fn components_summary(gamma: &Grading) -> Value {
    let idx = gamma.index();
    let items: Vec<Value> = gamma
        .dims()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d > 0)
        .map(|(i, &d)| json!({ "g": idx.label(i), "dim": d }))
        .collect();
    Value::Array(items)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

fn status_of(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AxiomsInput {
    map: MapSpec,
    claim: Claim,
    #[serde(default)]
    simple: bool,
}

pub fn verify_axioms(input: Option<&str>) -> VerbResult {
    let inp: AxiomsInput = parse(required(input)?)?;
    let f = inp.map.to_map().map_err(input_err)?;
    let t = Instant::now();
    let rep = check_super_map(&f, inp.claim);
    let mut witnesses = rep.witnesses.clone();
    let mut result = json!({
        "claim": inp.claim,
        "passed": rep.passed,
        "checks_run": rep.checks_run,
        "algebra": f.algebra().kind(),
        "order": map_order(&f),
        "square": square_signs(&f),
    });
    let mut ok = rep.passed;
    if inp.simple {
        let simple = if rep.passed && inp.claim == Claim::Superinvolution { involution_simple(f.algebra(), &f)? } else { false };
        result["involution_simple"] = json!(simple);
        if !simple {
            ok = false;
            witnesses.push(Witness::new("involution_simple", vec![], "a proper nonzero graded ideal is stable under the map"));
        }
    }
    Ok(Report::new("verify-axioms", status_of(ok), witnesses, result).timed("verify-axioms", t.elapsed()))
}

/// Smallest `k ≤ 8` with `f^k = id`.
fn map_order(f: &supergrade::SuperMap) -> Option<u32> {
    (1..=8).find(|&k| f.pow(k).is_identity())
}

/// `f²` on even and odd parts: `"+id"`, `"-id"` or `"other"`.
fn square_signs(f: &supergrade::SuperMap) -> Value {
    let alg = f.algebra();
    let sq = f.pow(2);
    let on = |parity: u8| -> &'static str {
        let idx: Vec<usize> = (0..alg.dim()).filter(|&i| alg.parity(i) == parity).collect();
        if idx.is_empty() {
            return "empty";
        }
        let col = |j: usize| sq.apply_vec(&alg.basis_vector(j));
        if idx.iter().all(|&j| col(j) == alg.basis_vector(j)) {
            "+id"
        } else if idx.iter().all(|&j| col(j).iter().zip(alg.basis_vector(j)).all(|(a, b)| *a == -&b)) {
            "-id"
        } else {
            "other"
        }
    };
    json!({ "even": on(0), "odd": on(1) })
}

pub fn build(input: Option<&str>) -> VerbResult {
    let spec: BuildSpec = parse(required(input)?)?;
    let t = Instant::now();
    let typed = spec.build().map_err(input_err)?;
    let star = exchange(typed.grading.algebra())?;
    let check = verify_grading(&typed.grading, Some(&star));
    let result = json!({
        "typed": TypedGradingJson::from_typed(&typed),
        "dims": components_summary(&typed.grading),
        "star_compatible": check.passed,
    });
    Ok(Report::new("build", status_of(check.passed), check.witnesses, result).timed("build", t.elapsed()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GradeInput {
    #[serde(default)]
    grading: Option<GradingSpec>,
    #[serde(default)]
    action: Option<ActionJson>,
}

/// Grading to action and back on a given input; see `suite::grade_suite` for the seeded run.
pub fn grade(text: &str) -> VerbResult {
    let inp: GradeInput = parse(text)?;
    let t = Instant::now();
    let (gamma, alpha) = match (inp.grading, inp.action) {
        (Some(g), None) => {
            let gamma = g.to_grading().map_err(input_err)?;
            let alpha = action_of_grading(&gamma)?;
            (gamma, alpha)
        }
        (None, Some(a)) => {
            let alpha = a.to_action().map_err(input_err)?;
            let gamma = grading_of_action(&alpha)?;
            (gamma, alpha)
        }
        _ => return Err(VerbError::Input("exactly one of `grading` and `action` must be given".into())),
    };
    let back_grading = grading_of_action(&alpha)?;
    let back_action = action_of_grading(&gamma)?;
    let g_ok = back_grading == gamma;
    let a_ok = back_action.images == alpha.images;
    let mut witnesses = Vec::new();
    if !g_ok {
        witnesses.push(Witness::new("grading_round_trip", vec![], "the grading of the action differs from the input grading"));
    }
    if !a_ok {
        witnesses.push(Witness::new("action_round_trip", vec![], "the action of the grading differs from the input action"));
    }
    let result = json!({
        "action": ActionJson::from_action(&alpha),
        "grading": GradingJson::from_grading(&gamma),
        "dims": components_summary(&gamma),
        "grading_round_trip": g_ok,
        "action_round_trip": a_ok,
    });
    Ok(Report::new("grade", status_of(g_ok && a_ok), witnesses, result).timed("grade", t.elapsed()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GradingInput {
    grading: GradingSpec,
    #[serde(default)]
    star: Option<MapSpec>,
}

pub fn check_grading(input: Option<&str>) -> VerbResult {
    let inp: GradingInput = parse(required(input)?)?;
    let gamma = inp.grading.to_grading().map_err(input_err)?;
    let star = inp.star.as_ref().map(MapSpec::to_map).transpose().map_err(input_err)?;
    let t = Instant::now();
    let rep = verify_grading(&gamma, star.as_ref());
    let mut witnesses = rep.witnesses.clone();
    let mut ok = rep.passed;
    let mut result = json!({ "report": rep, "dims": components_summary(&gamma) });
    if let (Some(s), true) = (&star, rep.passed) {
        // support conclusions need an involution simple (R, *)
        match support_properties(&gamma, s) {
            Ok(sp) => {
                if !sp.commutes {
                    ok = false;
                    for (a, b) in &sp.non_commuting {
                        let (la, lb) = (gamma.index().label(*a), gamma.index().label(*b));
                        witnesses.push(Witness::new("support_commutes", vec![*a, *b], format!("{la} and {lb} do not commute")));
                    }
                }
                if sp.all_invertible == Some(false) {
                    ok = false;
                    witnesses.push(Witness::new("support_invertible", vec![], "a support element has no inverse"));
                }
                result["support"] = to_value(&sp);
            }
            Err(Error::Precondition(why)) => {
                result["support"] = to_value(&support_report(&gamma));
                result["support_note"] = json!(why);
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        result["support"] = to_value(&support_report(&gamma));
    }
    Ok(Report::new("check-grading", status_of(ok), witnesses, result).timed("check-grading", t.elapsed()))
}

pub fn classify_verb(input: Option<&str>) -> VerbResult {
    let inp: GradingInput = parse(required(input)?)?;
    let gamma = inp.grading.to_grading().map_err(input_err)?;
    let star = match &inp.star {
        Some(s) => s.to_map().map_err(input_err)?,
        None => exchange(gamma.algebra())?,
    };
    let t = Instant::now();
    let typed = classify(gamma.algebra(), &gamma, &star)?;
    let result = json!({ "typed": TypedGradingJson::from_typed(&typed), "dims": components_summary(&gamma) });
    Ok(Report::new("classify", Status::Pass, Vec::new(), result).timed("classify", t.elapsed()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExchangeInput {
    alpha: ActionJson,
    beta: ActionJson,
    lambda: Vec<Vec<u32>>,
}

pub fn exchange_verb(input: Option<&str>) -> VerbResult {
    let inp: ExchangeInput = parse(required(input)?)?;
    let alpha = inp.alpha.to_action().map_err(|e| input_err(prefix("alpha", e)))?;
    let beta = inp.beta.to_action().map_err(|e| input_err(prefix("beta", e)))?;
    let lambda: Vec<Character> = inp.lambda.into_iter().map(Character).collect();
    let t = Instant::now();
    let r = exchange_decompose(&alpha, &beta, &lambda)?;
    let mut witnesses = Vec::new();
    if !r.first_identity {
        witnesses.push(Witness::new("first_identity", vec![], "R_g differs from the sum over h of (S_gh ∩ V^(h))"));
    }
    if !r.second_identity {
        witnesses.push(Witness::new("second_identity", vec![], "S_g differs from the sum over h of (R_gh ∩ V^(h^-1))"));
    }
    let h: Vec<Value> = r
        .h_subgroup
        .iter()
        .zip(&r.h_components)
        .map(|(h, v)| json!({ "h": h.0, "dim": v.dim() }))
        .collect();
    let result = json!({
        "gamma": ActionJson::from_action(&r.gamma),
        "h_subgroup": h,
        "first": components_summary(&r.first),
        "second": components_summary(&r.second),
        "first_identity": r.first_identity,
        "second_identity": r.second_identity,
    });
    Ok(Report::new("exchange", status_of(r.holds()), witnesses, result).timed("exchange", t.elapsed()))
}

fn prefix(field: &str, e: Error) -> Error {
    match e {
        Error::Parse(s) => Error::Parse(format!("{field}.{s}")),
        other => other,
    }
}

#[derive(Deserialize, Default, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
enum Task {
    #[default]
    FineAntiauto,
    CommutingRoot,
    IdentityDecomposition,
    PairDecomposition,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StructureInput {
    #[serde(default)]
    task: Task,
    #[serde(default)]
    grading: Option<GradingSpec>,
    #[serde(default)]
    phi: Option<MapSpec>,
    #[serde(default)]
    mode: Option<RootMode>,
    /// Expected value of `obstructed`; a mismatch is a fail.
    #[serde(default)]
    expect: Option<bool>,
}

/// Structure-theory operations: the fine-grading obstruction, commuting roots,
/// the identity-component decomposition and the type of a pair map.
pub fn obstruction(input: Option<&str>) -> VerbResult {
    let inp: StructureInput = parse(required(input)?)?;
    let need_grading = || {
        inp.grading.as_ref().ok_or_else(|| VerbError::Input("field `grading`: required for this task".into()))?.to_grading().map_err(input_err)
    };
    let need_phi = || inp.phi.as_ref().ok_or_else(|| VerbError::Input("field `phi`: required for this task".into()))?.to_map().map_err(input_err);
    let t = Instant::now();
    let (name, status, witnesses, result) = match inp.task {
        Task::FineAntiauto => {
            let gamma = need_grading()?;
            let rep = fine_antiauto_obstruction(&gamma)?;
            let mut w = Vec::new();
            if let Some(e) = inp.expect.filter(|&e| e != rep.obstructed) {
                w.push(Witness::new("obstructed", vec![], format!("expected obstructed = {e}, computed {}", rep.obstructed)));
            }
            ("fine_antiauto", status_of(w.is_empty()), w, to_value(&rep))
        }
        Task::CommutingRoot => {
            let (gamma, phi) = (need_grading()?, need_phi()?);
            let mode = inp.mode.unwrap_or(RootMode::Fourth);
            let r = find_commuting_root(&phi, &gamma, mode)?;
            let k = mode.exponent();
            let powers = r.psi.pow(k).action() == phi.pow(k).action();
            let commutes = r.psi.commutes_with(&phi);
            let graded = gamma.components().iter().all(|c| r.psi.preserves(c));
            let mut w = Vec::new();
            for (check, ok) in [("powers", powers), ("commutes", commutes), ("graded", graded)] {
                if !ok {
                    w.push(Witness::new(check, vec![], format!("returned root fails the {check} check")));
                }
            }
            let result = json!({
                "psi": MapJson::from_map(&r.psi),
                "method": r.method,
                "block_scalars": ScalarRows::from_vectors(std::slice::from_ref(&r.block_scalars)),
                "field_order": r.field_order,
                "candidates_tried": r.candidates_tried,
                "powers_agree": powers,
                "commutes": commutes,
                "graded": graded,
            });
            ("commuting_root", status_of(w.is_empty()), w, result)
        }
        Task::IdentityDecomposition => {
            let (gamma, phi) = (need_grading()?, need_phi()?);
            let d = identity_decomposition(&gamma, &phi)?;
            let blocks: Vec<Value> = d
                .blocks
                .iter()
                .map(|b| json!({ "kind": b.kind, "sizes": [b.sizes.0, b.sizes.1], "dim": b.subspace.dim(), "symmetric_dim": b.symmetric_dim }))
                .collect();
            let result = json!({
                "identity_dim": d.identity_component.dim(),
                "blocks": blocks,
                "s": d.s.as_ref().map(ScalarRows::from_matrix),
                "phi": d.phi.as_ref().map(ScalarRows::from_matrix),
            });
            ("identity_decomposition", Status::Pass, Vec::new(), result)
        }
        Task::PairDecomposition => {
            let phi = need_phi()?;
            let d = decompose_pair_map(&phi)?;
            let back = d.reconstruct(phi.algebra())? == phi;
            let w = if back { Vec::new() } else { vec![Witness::new("reconstruct", vec![], "rebuilding from phi0 does not give the map")] };
            ("pair_decomposition", status_of(back), w, json!({ "type": d.map_type, "phi0": MapJson::from_map(&d.phi0), "reconstructs": back }))
        }
    };
    let mut result = result;
    result["task"] = json!(name);
    Ok(Report::new("obstruction", status, witnesses, result).timed(name, t.elapsed()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SearchInput {
    algebra: AlgebraKind,
}

pub fn search_superinvolution(input: Option<&str>) -> VerbResult {
    let inp: SearchInput = parse(required(input)?)?;
    let alg = algebra_of(&inp.algebra).map_err(input_err)?;
    let t = Instant::now();
    let r = superinvolution_search(&alg)?;
    let found: Vec<MapJson> = r.found.iter().map(MapJson::from_map).collect();
    let result = json!({
        "algebra": inp.algebra,
        "found": found,
        "families": r.families,
        "certificate": r.certificate,
    });
    Ok(Report::new("search-superinvolution", Status::Pass, Vec::new(), result).timed("search", t.elapsed()))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DemoInput {
    #[serde(default = "one")]
    n: usize,
    #[serde(default = "one")]
    m: usize,
}

fn one() -> usize {
    1
}

pub fn demo_z4(input: Option<&str>) -> VerbResult {
    let inp: DemoInput = match input {
        Some(text) => parse(text)?,
        None => DemoInput { n: 1, m: 1 },
    };
    let t = Instant::now();
    let ex = z4_example(inp.n, inp.m)?;
    let alg = ex.grading.algebra().clone();
    let a = algebra_of(&AlgebraKind::MatrixSuper { n: inp.n, m: inp.m }).map_err(input_err)?;
    let tau = supergrade::superalg::canonical::tau(&a)?;
    let built = build_type_iii(&ex.base, &tau, &GroupElem(vec![3]))?;
    let equals_build = built.grading == ex.grading;
    let star = exchange(&alg)?;
    let c = classify(&alg, &ex.grading, &star)?;
    let base_trivial = c.base.support().len() == 1;
    let h_ok = c.h.as_ref().map(|h| h.0.as_slice()) == Some(&[3][..]);
    let mut witnesses = Vec::new();
    for (check, ok, why) in [
        ("equals_build", equals_build, "the example differs from the Type III construction"),
        ("type", c.type_tag == TypeTag::III, "classification is not Type III"),
        ("h", h_ok, "classification does not recover h = -i"),
        ("base", base_trivial, "recovered base grading is not trivial"),
    ] {
        if !ok {
            witnesses.push(Witness::new(check, vec![], why));
        }
    }
    let result = json!({
        "n": inp.n,
        "m": inp.m,
        "dims": ex.grading.dims(),
        "classification": c.type_tag,
        "h": c.h.as_ref().map(|h| h.0.clone()),
        "h_alternatives": c.h_alternatives.iter().map(|h| h.0.clone()).collect::<Vec<_>>(),
        "equals_build": equals_build,
        "base_trivial": base_trivial,
    });
    Ok(Report::new("demo-z4", status_of(witnesses.is_empty()), witnesses, result).timed("demo-z4", t.elapsed()))
}
