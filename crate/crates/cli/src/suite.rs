use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use supergrade::abgroup::{AbGroup, GroupElem};
use supergrade::gradings::{action_of_grading, elementary_grading, grading_of_action};
use supergrade::superalg::Witness;
use supergrade::SuperAlgebra;

use crate::report::{micros, Report, Status};
use crate::verbs::{VerbError, VerbResult};

pub const SUITE_SIZE: usize = 20;

/// The acceptance suite run by `cargo test -p supergrade --test acceptance`.
pub const CHECKS: [(&str, &str); 10] = [
    ("axioms", "superinvolution axioms and s∘s = id for osp, trp and the exchange map"),
    ("tau", "τ is a superantiautomorphism with τ² = ±id on even/odd parts and τ⁴ = id"),
    ("q-no-superinvolution", "Q(1) and Q(2) admit no superinvolution"),
    ("z4-example", "the Z4 example is the Type III construction with h = -i; dims (2,2,2,2)"),
    ("exchange", "both exchange identities on constructed instances over M2 and PairSop(M11)"),
    ("duality", "grading/action round trips and classify∘build round trips"),
    ("obstruction", "fine anti-automorphism obstruction on M11 and M2 with the Pauli grading"),
    ("commuting-roots", "verified fourth and square commuting roots"),
    ("support", "support elements of *-compatible gradings commute and are invertible"),
    ("involution-simple", "involution simplicity of the basic examples and of a product"),
];

pub fn list_checks() -> Report {
    let items: Vec<Value> = CHECKS.iter().enumerate().map(|(i, (id, d))| json!({ "n": i + 1, "id": id, "description": d })).collect();
    Report::new("list-checks", Status::Pass, Vec::new(), json!({ "checks": items }))
}

#[derive(Debug, Clone)]
struct Case {
    n: usize,
    m: usize,
    group: Vec<u32>,
    tuple: Vec<Vec<u32>>,
}

const GROUPS: [&[u32]; 4] = [&[2], &[3], &[4], &[2, 2]];

/// All cases are drawn up front from one generator, so the outcome does not
/// depend on the number of threads.
fn draw_cases(seed: u64) -> Vec<Case> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..SUITE_SIZE)
        .map(|_| {
            let s = rng.gen_range(1..=3usize);
            let n = rng.gen_range(1..=s);
            let group = GROUPS[rng.gen_range(0..GROUPS.len())].to_vec();
            let tuple = (0..s).map(|_| group.iter().map(|&f| rng.gen_range(0..f)).collect()).collect();
            Case { n, m: s - n, group, tuple }
        })
        .collect()
}

struct Outcome {
    ok: bool,
    witnesses: Vec<Witness>,
    result: Value,
    micros: String,
}

fn run_case(key: &str, c: &Case) -> Result<Outcome, VerbError> {
    let t = Instant::now();
    let alg = SuperAlgebra::matrix(c.n, c.m);
    let g = AbGroup::new(c.group.clone())?;
    let tuple: Vec<GroupElem> = c.tuple.iter().map(|x| GroupElem(x.clone())).collect();
    let gamma = elementary_grading(&alg, &g, &tuple)?;
    let alpha = action_of_grading(&gamma)?;
    let back = grading_of_action(&alpha)?;
    let again = action_of_grading(&back)?;
    let g_ok = back == gamma;
    let a_ok = again.images == alpha.images;
    let mut witnesses = Vec::new();
    if !g_ok {
        witnesses.push(Witness::new(key, vec![], "grading of the action of the grading differs"));
    }
    if !a_ok {
        witnesses.push(Witness::new(key, vec![], "action of the recovered grading differs"));
    }
    let result = json!({
        "algebra": alg.kind(),
        "group": c.group,
        "tuple": c.tuple,
        "dims": gamma.dims(),
        "grading_round_trip": g_ok,
        "action_round_trip": a_ok,
    });
    Ok(Outcome { ok: g_ok && a_ok, witnesses, result, micros: micros(t.elapsed()) })
}

/// Seeded suite of grading/action round trips on elementary gradings of
/// `M_{n,m}` (`n + m ≤ 3`, `|G| ≤ 4`), optionally spread over `parallel` threads.
pub fn grade_suite(seed: u64, parallel: usize) -> VerbResult {
    let cases = draw_cases(seed);
    let keyed: Vec<(String, Case)> = cases.into_iter().enumerate().map(|(i, c)| (format!("grade-{i:02}"), c)).collect();
    let k = parallel.clamp(1, SUITE_SIZE);
    let mut outcomes: BTreeMap<String, Result<Outcome, VerbError>> = BTreeMap::new();
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..k)
            .map(|t| {
                let mine: Vec<&(String, Case)> = keyed.iter().skip(t).step_by(k).collect();
                s.spawn(move || mine.into_iter().map(|(key, c)| (key.clone(), run_case(key, c))).collect::<Vec<_>>())
            })
            .collect();
        for h in handles {
            outcomes.extend(h.join().expect("suite worker panicked"));
        }
    });
    let mut checks = serde_json::Map::new();
    let mut witnesses = Vec::new();
    let mut timings = BTreeMap::new();
    let mut all_ok = true;
    for (key, o) in outcomes {
        let o = o?;
        all_ok &= o.ok;
        witnesses.extend(o.witnesses);
        checks.insert(key.clone(), o.result);
        timings.insert(key, o.micros);
    }
    let result = json!({ "seed": seed.to_string(), "cases": SUITE_SIZE, "checks": checks });
    let mut r = Report::new("grade", if all_ok { Status::Pass } else { Status::Fail }, witnesses, result);
    r.timings = timings;
    Ok(r)
}
