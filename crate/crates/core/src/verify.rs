//! Check harness: every desk-scale property of the game, run by id.
//!
//! Checks are deterministic; randomized ones use fixed seeds recorded in
//! their evidence. A failing check carries a counterexample in its evidence.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::apg::{
    bisim_quotient, is_sigma_node, pattern_report, regularity_failure, sigma, sigma_witness, solve,
    Apg, Outcome,
};
use crate::census::{census_brute, census_formula, prob_table, recurrence_count};
use crate::error::{Error, Result};
use crate::game::{classify, classify_level, witness, Classifier, WITNESS_BOUND};
use crate::hf::{level_size, parse_braces, small_level_size, HFSet, SetCode};
use crate::model::{
    build, check_end_extension, check_extensionality, check_reflection, check_thickness,
    classify_model, preset, DEFAULT_CAP, PRESETS,
};

pub const RANDOM_SEED: u64 = 0x5e7_6a3e;
pub const LEMMA_TRIALS: usize = 10_000;
pub const CONSERVATIVITY_TRIALS: usize = 1_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    ReportOnly,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub status: Status,
    pub runtime_ms: u64,
    pub evidence: Value,
}

type CheckFn = fn() -> (Status, Value);

/// Check ids in dependency order.
pub const CHECKS: &[(&str, CheckFn)] = &[
    ("hf-roundtrip", hf_roundtrip),
    ("rank-bound", rank_bound),
    ("level-nonempty", level_nonempty),
    ("level-growth", level_growth),
    ("level-membership", level_membership),
    ("census-oracle", census_oracle),
    ("probability-trend", probability_trend),
    ("witness-indices", witness_indices),
    ("graph-conservativity", graph_conservativity),
    ("winning-closed-under-subsets", winning_closed_under_subsets),
    ("sigma-lower-bound", sigma_lower_bound),
    ("sigma-spectrum", sigma_spectrum),
    ("model-seeds", model_seeds),
    ("winning-vs-hereditary", winning_vs_hereditary),
    ("regularity-relativized", regularity_relativized),
    ("sigma-winning-classes", sigma_winning_classes),
];

pub fn check_ids() -> Vec<&'static str> {
    CHECKS.iter().map(|(id, _)| *id).collect()
}

/// Runs the named checks (`"all"` expands to every check). Checks run in
/// parallel; results come back in the order requested.
pub fn run_suite(names: &[&str]) -> Result<Vec<CheckResult>> {
    let mut selected: Vec<(&str, CheckFn)> = Vec::new();
    for &name in names {
        if name == "all" {
            selected.extend(CHECKS.iter().copied());
            continue;
        }
        let found = CHECKS
            .iter()
            .find(|(id, _)| *id == name)
            .ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
        selected.push(*found);
    }
    Ok(selected
        .into_par_iter()
        .map(|(id, check)| {
            let start = Instant::now();
            let (status, evidence) = check();
            CheckResult {
                check: id.to_string(),
                status,
                runtime_ms: start.elapsed().as_millis() as u64,
                evidence,
            }
        })
        .collect())
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn random_hfset(rng: &mut ChaCha8Rng, depth: usize) -> HFSet {
    if depth == 0 {
        return HFSet::empty();
    }
    let n = rng.gen_range(0..5);
    HFSet::from_elements((0..n).map(|_| {
        let d = rng.gen_range(0..depth);
        random_hfset(rng, d)
    }))
}

fn hf_roundtrip() -> (Status, Value) {
    let mut failures = Vec::new();
    let v5 = small_level_size(5) as u64;
    for c in 0..v5 {
        let code = SetCode::from(c);
        let back = SetCode::encode(&code.elements()).ok();
        if back.as_ref() != Some(&code) {
            failures.push(json!({"kind": "encode", "code": c}));
            break;
        }
        let rank = code.rank();
        if (0..=5).any(|m| (rank < m) != (c < small_level_size(m) as u64)) {
            failures.push(json!({"kind": "level-order", "code": c, "rank": rank}));
            break;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let samples = 500;
    for _ in 0..samples {
        let x = random_hfset(&mut rng, 6);
        let text = x.to_braces();
        match parse_braces(&text) {
            Ok(y) if y == x && y.to_braces() == text => {}
            _ => {
                failures.push(json!({"kind": "braces", "set": text}));
                break;
            }
        }
    }
    (
        verdict(failures.is_empty()),
        json!({"codes": v5, "random_sets": samples, "seed": RANDOM_SEED, "failures": failures}),
    )
}

fn rank_bound() -> (Status, Value) {
    let table = classify_level(5).expect("rank 5 is enumerable");
    let exceptions: Vec<Value> = table
        .classes
        .iter()
        .enumerate()
        .filter(|(c, cl)| cl.w > SetCode::from(*c as u64).rank())
        .take(5)
        .map(|(c, cl)| json!({"code": c, "w": cl.w, "replay": format!("setgame classify --code {c}")}))
        .collect();
    (
        verdict(exceptions.is_empty()),
        json!({"codes": table.len(), "exceptions": exceptions}),
    )
}

fn level_nonempty() -> (Status, Value) {
    let table = classify_level(5).expect("rank 5 is enumerable");
    let mut ok = true;
    let mut realized = Vec::new();
    for m in 1..=5 {
        let ws: BTreeSet<usize> = table.classes[..small_level_size(m)]
            .iter()
            .map(|c| c.w)
            .collect();
        ok &= ws == (0..m).collect::<BTreeSet<_>>();
        realized.push(json!({"m": m, "w": ws}));
    }
    let mut positive = Vec::new();
    for m in 1..=6 {
        let t = census_formula(m).expect("formula range");
        let within = (0..m).all(|nu| !t.count(nu).is_zero());
        // the recurrence from the level below, evaluated past m, vanishes
        let beyond = if m == 1 {
            t.counts.len() == 1
        } else {
            let below = census_formula(m - 1).expect("formula range");
            let size = level_size(m - 1).expect("count range");
            (m..m + 3).all(|nu| recurrence_count(&below.counts, &size, nu).is_zero())
        };
        ok &= within && beyond;
        positive.push(json!({"m": m, "positive_below_m": within, "zero_from_m": beyond}));
    }
    (
        verdict(ok),
        json!({"realized": realized, "formula": positive}),
    )
}

fn level_growth() -> (Status, Value) {
    let mut rows = Vec::new();
    let mut ok = true;
    for m in 0..=4 {
        let here = census_brute(m).expect("brute range");
        let next = census_brute(m + 1).expect("brute range");
        for nu in 0..=m + 1 {
            let grows = next.count(nu) > here.count(nu);
            let expected = (nu == 0 && m == 0) || (0 < nu && nu <= m);
            ok &= grows == expected;
            rows.push(json!({"m": m, "nu": nu, "grows": grows, "expected": expected}));
        }
    }
    (verdict(ok), json!({"rows": rows}))
}

/// The set `S_{α,ν}` itself, as a code, is a member of `S_{α+1,ν+1}` outside
/// `S_{α,ν+1}` exactly when `0 = ν < α = 1` or `0 < ν < α`.
fn level_membership() -> (Status, Value) {
    let table = classify_level(5).expect("rank 5 is enumerable");
    let mut classifier = Classifier::new();
    let mut rows = Vec::new();
    let mut ok = true;
    for alpha in 1..=5usize {
        let size = small_level_size(alpha);
        for nu in 0..=alpha {
            let members: Vec<SetCode> = (0..size)
                .filter(|&c| table.classes[c].w == nu)
                .map(|c| SetCode::from(c as u64))
                .collect();
            let level = SetCode::encode(&members).expect("codes below 2^16");
            let w = classifier.classify_code(&level).w;
            let lower = level_size(alpha).expect("count range");
            let upper = level_size(alpha + 1).expect("count range");
            let in_next = w == nu + 1 && level.value() < &upper;
            let in_here = w == nu + 1 && level.value() < &lower;
            let holds = in_next && !in_here;
            let expected = (nu == 0 && alpha == 1) || (0 < nu && nu < alpha);
            ok &= holds == expected;
            rows.push(
                json!({"alpha": alpha, "nu": nu, "w": w, "holds": holds, "expected": expected}),
            );
        }
    }
    (verdict(ok), json!({"rows": rows}))
}

fn census_oracle() -> (Status, Value) {
    let mut ok = true;
    let mut tables = Vec::new();
    for m in 1..=5 {
        let brute = census_brute(m).expect("brute range");
        let formula = census_formula(m).expect("formula range");
        let same =
            brute.same_counts(&formula) && brute.total() == level_size(m).expect("count range");
        ok &= same;
        tables.push(
            json!({"m": m, "match": same, "brute": brute.to_json(), "formula": formula.to_json()}),
        );
    }
    (verdict(ok), json!({"tables": tables}))
}

fn pow2_inverse(e: u32) -> BigRational {
    BigRational::new(BigUint::one().into(), (BigUint::one() << e).into())
}

fn probability_trend() -> (Status, Value) {
    let tables: Vec<_> = (1..=6)
        .map(|m| prob_table(m).expect("formula range"))
        .collect();
    let at = |m: usize| &tables[m - 1];
    let half = BigRational::new(1.into(), 2.into());
    let mut ok = true;
    let mut notes = Vec::new();

    let one_half = (2..=6).all(|m| at(m).ratio(1) == half);
    notes.push(json!({"ratio_1_is_half_for_m_2_to_6": one_half}));
    ok &= one_half;

    let r3: Vec<BigRational> = (4..=6).map(|m| at(m).ratio(3)).collect();
    let rising = r3.windows(2).all(|w| w[0] < w[1]) && r3.iter().all(|r| r < &half);
    let at5 = r3[1] == BigRational::new(7.into(), 16.into());
    let close6 = (&half - &r3[2]) < pow2_inverse(200);
    notes.push(json!({"ratio_3_rising": rising, "ratio_3_at_5_is_7_16": at5, "ratio_3_at_6_within_2^-200": close6}));
    ok &= rising && at5 && close6;

    let mut falling = true;
    for nu in (0..6).filter(|nu| *nu != 1 && *nu != 3) {
        let seq: Vec<BigRational> = (nu + 1..=6).map(|m| at(m).ratio(nu)).collect();
        falling &= seq.windows(2).all(|w| w[0] > w[1]);
    }
    notes.push(json!({"other_ratios_falling": falling}));
    ok &= falling;

    let rest = (0..6)
        .filter(|nu| *nu != 1 && *nu != 3)
        .fold(BigRational::zero(), |acc, nu| acc + at(6).ratio(nu));
    let tiny = rest < pow2_inverse(255);
    notes.push(
        json!({"rest_at_6_below_2^-255": tiny, "rest_at_6_is_2^-256": rest == pow2_inverse(256)}),
    );
    ok &= tiny;

    let small: Vec<Value> = (1..=5).map(|m| at(m).to_json()).collect();
    (verdict(ok), json!({"checks": notes, "tables": small}))
}

fn witness_indices() -> (Status, Value) {
    let mut bad = Vec::new();
    for n in 0..=WITNESS_BOUND {
        let z = witness(n).expect("within bound");
        let w = classify(&z).w;
        if w != n {
            bad.push(json!({"n": n, "w": w}));
        }
    }
    (
        verdict(bad.is_empty()),
        json!({"max_n": WITNESS_BOUND, "mismatches": bad}),
    )
}

/// Random graph on `n` nodes whose edges only point to lower indices.
fn random_wellfounded(rng: &mut ChaCha8Rng) -> Apg {
    let n = rng.gen_range(1..=12);
    let p: f64 = rng.gen_range(0.1..0.6);
    let children = (0..n)
        .map(|i| (0..i).filter(|_| rng.gen_bool(p)).collect())
        .collect();
    Apg::from_adjacency("n", children)
}

fn random_graph(rng: &mut ChaCha8Rng) -> Apg {
    let n = rng.gen_range(1..=8);
    let p: f64 = rng.gen_range(0.1..0.5);
    let children = (0..n)
        .map(|_| (0..n).filter(|_| rng.gen_bool(p)).collect())
        .collect();
    Apg::from_adjacency("n", children)
}

/// Labelled graph number `mask` on `n` nodes: bit `i * n + j` is `j ∈ i`.
pub fn small_graph(n: usize, mask: u64) -> Apg {
    let children = (0..n)
        .map(|i| (0..n).filter(|j| mask >> (i * n + j) & 1 == 1).collect())
        .collect();
    Apg::from_adjacency("n", children)
}

/// Every labelled graph with at most `max_nodes` nodes, as `(n, mask)`.
pub fn small_graph_ids(max_nodes: usize) -> Vec<(usize, u64)> {
    (1..=max_nodes)
        .flat_map(|n| (0..1u64 << (n * n)).map(move |m| (n, m)))
        .collect()
}

fn conservative(g: &Apg) -> Option<String> {
    let q = bisim_quotient(g);
    let outcomes = solve(&q.graph);
    let mut decorations = Vec::new();
    for v in g.nodes() {
        let set = g.decorate(v)?;
        if Outcome::from(classify(&set)) != outcomes[q.map[v]] {
            return Some(g.name(v).to_string());
        }
        decorations.push(set);
    }
    // the quotient identifies exactly the nodes unfolding to equal sets
    for u in g.nodes() {
        for v in u + 1..g.len() {
            if (q.map[u] == q.map[v]) != (decorations[u] == decorations[v]) {
                return Some(format!("{}~{}", g.name(u), g.name(v)));
            }
        }
    }
    None
}

fn graph_conservativity() -> (Status, Value) {
    let mut failures = Vec::new();
    for c in 0..small_level_size(4) as u64 {
        let g = Apg::from_hfset(&SetCode::from(c).to_hfset());
        if let Some(node) = conservative(&g) {
            failures.push(json!({"code": c, "node": node}));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    for trial in 0..CONSERVATIVITY_TRIALS {
        let g = random_wellfounded(&mut rng);
        if let Some(node) = conservative(&g) {
            failures.push(json!({"trial": trial, "node": node, "graph": g.to_text()}));
        }
    }
    (
        verdict(failures.is_empty()),
        json!({"codes": small_level_size(4), "random_graphs": CONSERVATIVITY_TRIALS, "seed": RANDOM_SEED, "failures": failures}),
    )
}

/// Adjoins a node whose children are `members`, returning its outcome.
fn fresh_outcome(g: &Apg, members: &[usize]) -> Outcome {
    let mut h = g.clone();
    let fresh = h.add_node("fresh").expect("`fresh` is unused");
    h.set_children(fresh, members.to_vec());
    solve(&h)[fresh]
}

/// Tests both closure laws on one graph and one choice mask.
fn closure_counterexample(g: &Apg, outcomes: &[Outcome], choice: u64) -> Option<Value> {
    let winning: Vec<usize> = g.nodes().filter(|&v| !outcomes[v].is_draw()).collect();
    let picked: Vec<usize> = winning
        .iter()
        .enumerate()
        .filter(|(i, _)| choice >> i & 1 == 1)
        .map(|(_, &v)| v)
        .collect();
    if fresh_outcome(g, &picked).is_draw() {
        return Some(
            json!({"law": "subset of W is in W", "graph": g.to_text(), "members": picked}),
        );
    }
    let first: Vec<usize> = g
        .nodes()
        .filter(|&v| matches!(outcomes[v], Outcome::WinI(_)))
        .filter(|&v| choice >> v & 1 == 1)
        .collect();
    if !matches!(fresh_outcome(g, &first), Outcome::WinII(_)) {
        return Some(
            json!({"law": "subset of W_I is in W_II", "graph": g.to_text(), "members": first}),
        );
    }
    None
}

fn winning_closed_under_subsets() -> (Status, Value) {
    let exhaustive: Vec<Value> = small_graph_ids(4)
        .into_par_iter()
        .filter_map(|(n, mask)| {
            let g = small_graph(n, mask);
            let outcomes = solve(&g);
            let winning = outcomes.iter().filter(|o| !o.is_draw()).count();
            (0..1u64 << winning.max(n))
                .find_map(|choice| closure_counterexample(&g, &outcomes, choice))
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut random = Vec::new();
    for _ in 0..LEMMA_TRIALS {
        let g = random_graph(&mut rng);
        let outcomes = solve(&g);
        let choice: u64 = rng.gen();
        if let Some(c) = closure_counterexample(&g, &outcomes, choice) {
            random.push(c);
        }
    }
    let ok = exhaustive.is_empty() && random.is_empty();
    (
        verdict(ok),
        json!({
            "exhaustive_graphs": small_graph_ids(4).len(),
            "random_trials": LEMMA_TRIALS,
            "seed": RANDOM_SEED,
            "counterexamples": exhaustive.into_iter().chain(random).take(5).collect::<Vec<_>>(),
        }),
    )
}

fn sigma_lower_bound() -> (Status, Value) {
    let ids = small_graph_ids(4);
    let (sigma_nodes, bad): (usize, Vec<Value>) = ids
        .par_iter()
        .map(|&(n, mask)| {
            let g = small_graph(n, mask);
            let outcomes = solve(&g);
            let mut count = 0;
            let mut bad = Vec::new();
            for v in g.nodes() {
                if is_sigma_node(&g, v) {
                    count += 1;
                    if outcomes[v].w().is_some_and(|w| w <= 1) {
                        bad.push(json!({"graph": g.to_text(), "node": g.name(v)}));
                    }
                }
            }
            (count, bad)
        })
        .reduce(
            || (0, Vec::new()),
            |(a, mut x), (b, y)| {
                x.extend(y);
                (a + b, x)
            },
        );
    (
        verdict(bad.is_empty()),
        json!({"graphs": ids.len(), "sigma_nodes": sigma_nodes, "counterexamples": bad.into_iter().take(5).collect::<Vec<_>>()}),
    )
}

fn sigma_spectrum() -> (Status, Value) {
    let mut ok = true;
    let mut rows = Vec::new();
    for nu in 2..=8 {
        match sigma_witness(nu) {
            Ok(g) => {
                let p = g.point().expect("witnesses are pointed");
                let valid = solve(&g)[p].w() == Some(nu) && is_sigma_node(&g, p);
                ok &= valid;
                rows.push(json!({"nu": nu, "valid": valid, "nodes": g.len(), "edges": g.edge_count(), "graph": g.to_text()}));
            }
            Err(e) => {
                ok = false;
                rows.push(json!({"nu": nu, "error": e.to_string()}));
            }
        }
    }
    let below = [0usize, 1]
        .iter()
        .all(|&nu| matches!(sigma_witness(nu), Err(Error::SigmaDomain { .. })));
    ok &= below;
    (
        verdict(ok),
        json!({"witnesses": rows, "refuses_nu_le_1": below}),
    )
}

fn model_seeds() -> (Status, Value) {
    let mut ok = true;
    let mut rows = Vec::new();
    for name in PRESETS {
        let seed = preset(name).expect("preset exists");
        let m = match build(&seed, 2, DEFAULT_CAP) {
            Ok(m) => m,
            Err(e) => {
                ok = false;
                rows.push(json!({"seed": name, "error": e.to_string()}));
                continue;
            }
        };
        let end = check_end_extension(&m);
        let ext = check_extensionality(&m);
        let thick: Vec<bool> = (0..2)
            .map(|a| check_thickness(&m, a).unwrap_or(false))
            .collect();
        let reflection = check_reflection(&m).expect("two stages built");
        let pattern = classify_model(&m);
        let expected_pattern = match name {
            "wf" => pattern.pattern == "ALL=W=HW=WF",
            "quine" => !pattern.all_eq_winning(),
            _ => pattern.pattern == "ALL=W=HW!=WF",
        };
        let mut extra = true;
        if name == "quine" {
            let one = build(&seed, 1, DEFAULT_CAP).map(|m| m.len()).unwrap_or(0);
            let second = reflection
                .statement("sigma(W_II)")
                .expect("always reported");
            extra = one == 4 && !second.first_stage && !second.last_stage;
        }
        let descend = reflection.even_levels_descend.iter().all(|&(_, f)| f);
        let passed = end && ext && thick.iter().all(|&t| t) && expected_pattern && extra && descend;
        ok &= passed;
        rows.push(json!({
            "seed": name,
            "stage_sizes": (0..=2).map(|a| m.stage_size(a)).collect::<Vec<_>>(),
            "end_extension": end,
            "extensionality": ext,
            "thickness": thick,
            "pattern": pattern.pattern,
            "spectrum": pattern.spectrum,
            "reflection": reflection,
            "passed": passed,
        }));
    }
    (verdict(ok), json!({"seeds": rows}))
}

/// Named graphs used by the class-level reports.
fn report_graphs() -> Vec<(String, Apg)> {
    let mut graphs: Vec<(String, Apg)> = PRESETS
        .iter()
        .filter_map(|name| {
            let m = build(&preset(name)?, 2, DEFAULT_CAP).ok()?;
            Some((format!("model:{name}"), m.truncation(2)))
        })
        .collect();
    for nu in [2, 3, 4] {
        if let Ok(g) = sigma_witness(nu) {
            graphs.push((format!("sigma-witness:{nu}"), g));
        }
    }
    graphs
}

/// `ALL = W` against `W = HW` inside each sample graph.
fn winning_vs_hereditary() -> (Status, Value) {
    let rows: Vec<Value> = report_graphs()
        .into_iter()
        .map(|(name, g)| {
            let r = pattern_report(&g);
            json!({
                "graph": name,
                "pattern": r.pattern,
                "all_eq_w": r.all_eq_winning(),
                "w_eq_hw": r.winning_eq_hw(),
            })
        })
        .collect();
    (Status::ReportOnly, json!({"truncations": rows}))
}

/// Relativized Regularity against the σ statements it is tied to.
fn regularity_relativized() -> (Status, Value) {
    let rows: Vec<Value> = report_graphs()
        .into_iter()
        .map(|(name, g)| {
            let outcomes = solve(&g);
            let winning: Vec<bool> = outcomes.iter().map(|o| !o.is_draw()).collect();
            let hw = crate::apg::hw_nodes_with(&g, &outcomes);
            // subsets of W realized in the graph: nodes whose members all win
            let subsets_of_w = g.nodes().filter(|&v| g.children(v).iter().all(|&c| winning[c]));
            json!({
                "graph": name,
                "regularity_fails_in_w": regularity_failure(&g, &winning).map(|v| g.name(v).to_string()),
                "sigma_subsets_of_w": sigma(&g, subsets_of_w).map(|v| g.name(v).to_string()),
                "regularity_fails_in_hw": regularity_failure(&g, &hw).map(|v| g.name(v).to_string()),
                "sigma_hw": sigma(&g, g.nodes().filter(|&v| hw[v])).map(|v| g.name(v).to_string()),
            })
        })
        .collect();
    (
        Status::ReportOnly,
        json!({"truncations": rows, "wording": "witness found / no witness in truncation"}),
    )
}

/// σ over the first- and second-player classes.
fn sigma_winning_classes() -> (Status, Value) {
    let rows: Vec<Value> = report_graphs()
        .into_iter()
        .map(|(name, g)| {
            let outcomes = solve(&g);
            let first = |v: usize| matches!(outcomes[v], Outcome::WinI(_));
            let second = |v: usize| matches!(outcomes[v], Outcome::WinII(_));
            let all = vec![true; g.len()];
            let subsets_of_second = g.nodes().filter(|&v| g.children(v).iter().all(|&c| second(c)));
            json!({
                "graph": name,
                "sigma_w_i": sigma(&g, g.nodes().filter(|&v| first(v))).map(|v| g.name(v).to_string()),
                "regularity_fails": regularity_failure(&g, &all).map(|v| g.name(v).to_string()),
                "sigma_w_ii": sigma(&g, g.nodes().filter(|&v| second(v))).map(|v| g.name(v).to_string()),
                "sigma_subsets_of_w_ii": sigma(&g, subsets_of_second).map(|v| g.name(v).to_string()),
            })
        })
        .collect();
    (
        Status::ReportOnly,
        json!({"truncations": rows, "wording": "witness found / no witness in truncation"}),
    )
}
