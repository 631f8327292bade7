//! End-to-end acceptance suite. Runs nine numbered criteria in order and
//! prints one pass/fail line per criterion; the test fails if any criterion
//! fails. Run with `--nocapture` to see the per-criterion lines on success.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use svr::oracle::{
    brute_force_nae, brute_force_sat, brute_force_svr, exhaustive_lsvr_check, permutations,
    SearchBudget, SearchOutcome,
};
use svr::paths::{decide_lsvr, decide_square_rect_svr};
use svr::sat::{
    build_rsvr_drawing, build_rsvr_instance, build_ussvr_drawing, build_ussvr_instance,
    decode_rsvr_assignment, decode_ussvr_assignment, Assignment, Cnf3Instance, NaeInstance,
};
use svr::svg::{render_svg, RenderConfig};
use svr::visibility::{check_nestedness, check_no_twist, cycle_premise_witness, Axis};
use svr::{validate_svr, Drawing, Family, GraphPair, PathPair};

/// A validated drawing kept for the structural diagnostics of criterion 8.
struct Produced {
    label: String,
    drawing: Drawing,
    pair: GraphPair,
    /// True when both sides of the pair are paths (enables the cycle scan).
    path_instance: bool,
}

struct Ctx {
    produced: Vec<Produced>,
    /// Serialized artifacts per criterion, for the determinism re-run.
    artifacts: Vec<(u32, String)>,
}

impl Ctx {
    fn new() -> Self {
        Ctx {
            produced: Vec::new(),
            artifacts: Vec::new(),
        }
    }

    fn keep(&mut self, label: &str, d: &Drawing, g: &GraphPair, path_instance: bool) {
        self.produced.push(Produced {
            label: label.to_string(),
            drawing: d.clone(),
            pair: g.clone(),
            path_instance,
        });
    }
}

fn validated(d: &Drawing, g: &GraphPair, what: &str) -> Result<(), String> {
    let report = validate_svr(d, g).map_err(|e| format!("{what}: {e}"))?;
    if !report.valid {
        return Err(format!("{what}: invalid drawing: {report:?}"));
    }
    Ok(())
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serialization cannot fail")
}

fn svg(d: &Drawing) -> String {
    render_svg(d, &RenderConfig::default(), true).expect("drawing was validated")
}

// --- criterion 1: named decision instances --------------------------------

fn criterion_1(ctx: &mut Ctx) -> Result<(), String> {
    let start = Instant::now();
    let mut artifact = String::new();

    let reject = decide_lsvr(&PathPair::from_permutation(vec![1, 3, 2, 7, 5, 6, 4]));
    if reject.exists || reject.drawing.is_some() {
        return Err("(1,3,2,7,5,6,4) must be rejected".into());
    }
    artifact += &json(&reject);

    let p = PathPair::from_permutation(vec![2, 1, 6, 4, 5, 3]);
    let accept = decide_lsvr(&p);
    if !accept.exists {
        return Err("(2,1,6,4,5,3) must be accepted".into());
    }
    let d = accept.drawing.as_ref().unwrap();
    validated(d, &p.to_graph_pair(), "(2,1,6,4,5,3)")?;
    ctx.keep("criterion 1: (2,1,6,4,5,3)", d, &p.to_graph_pair(), true);
    artifact += &json(&accept);
    artifact += &svg(d);

    let p = PathPair::from_permutation(vec![4, 3, 5, 2, 1]);
    let accept = decide_lsvr(&p);
    if !accept.exists {
        return Err("(4,3,5,2,1) must be accepted".into());
    }
    if accept.stretched_left != vec![4, 3] {
        return Err(format!(
            "(4,3,5,2,1): Step-2 set must be [4, 3], got {:?}",
            accept.stretched_left
        ));
    }
    if accept.stretched_down != vec![1, 2] {
        return Err(format!(
            "(4,3,5,2,1): Step-3 set must be [1, 2], got {:?}",
            accept.stretched_down
        ));
    }
    let d = accept.drawing.as_ref().unwrap();
    validated(d, &p.to_graph_pair(), "(4,3,5,2,1)")?;
    ctx.keep("criterion 1: (4,3,5,2,1)", d, &p.to_graph_pair(), true);
    artifact += &json(&accept);
    artifact += &svg(d);

    ctx.artifacts.push((1, artifact));
    let elapsed = start.elapsed();
    if elapsed > Duration::from_millis(1000) {
        return Err(format!("took {elapsed:?}, expected milliseconds"));
    }
    Ok(())
}

// --- criterion 2: soundness sweep over all permutations, n = 1..8 ---------

fn criterion_2(ctx: &mut Ctx) -> Result<(), String> {
    let start = Instant::now();
    let mut total = 0u64;
    for n in 1..=8usize {
        for pi in permutations(n) {
            total += 1;
            let p = PathPair::from_permutation(pi.clone());
            let out = decide_lsvr(&p);
            if !out.exists {
                continue;
            }
            let d = out.drawing.as_ref().unwrap();
            let g = p.to_graph_pair();
            let report = validate_svr(d, &g).map_err(|e| format!("pi={pi:?}: {e}"))?;
            if !report.valid {
                return Err(format!("pi={pi:?}: {report:?}"));
            }
            let (lo, hi) = (2 - n as i64, n as i64 + 1);
            for s in &d.shapes {
                let (x, y) = (s.x_projection(), s.y_projection());
                for c in [x.lo, x.hi, y.lo, y.hi] {
                    if c.base < lo || c.base > hi {
                        return Err(format!("pi={pi:?}: base {} outside [{lo}, {hi}]", c.base));
                    }
                }
            }
            ctx.keep(&format!("criterion 2: pi={pi:?}"), d, &g, true);
        }
    }
    if total != 46_233 {
        return Err(format!("expected 46233 instances, saw {total}"));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(120) {
        return Err(format!("took {elapsed:?}, budget is 2 minutes"));
    }
    Ok(())
}

// --- criterion 3: completeness cross-check against the oracle, n = 1..4 ---

fn criterion_3() -> Result<(), String> {
    let start = Instant::now();
    let report = exhaustive_lsvr_check(4, SearchBudget::default());
    if report.cells.len() != 33 {
        return Err(format!("expected 33 oracle cells, got {}", report.cells.len()));
    }
    if !report.agreed() {
        return Err(format!(
            "soundness failures {:?}, disagreements {:?}, capped {}",
            report.soundness_failures, report.disagreements, report.capped
        ));
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(600) {
        return Err(format!("took {elapsed:?}, budget is 10 minutes"));
    }
    Ok(())
}

// --- criterion 4: Algorithm A iff at n = 50 --------------------------------

fn criterion_4(ctx: &mut Ctx) -> Result<(), String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5652_2026);
    let mut artifact = String::new();
    let (mut disjoint, mut sharing) = (0u32, 0u32);
    let mut base: Vec<usize> = (1..=50).collect();
    while disjoint < 100 || sharing < 100 {
        base.shuffle(&mut rng);
        let p = PathPair::from_permutation(base.clone());
        let shared = p.shared_edges();
        if shared.is_empty() {
            if disjoint == 100 {
                continue;
            }
            disjoint += 1;
            let g = p.to_graph_pair();
            for family in [Family::UnitSquare, Family::Rect] {
                let d = decide_square_rect_svr(&p, family)
                    .ok_or_else(|| format!("edge-disjoint pair #{disjoint} rejected ({family})"))?;
                validated(&d, &g, &format!("pair #{disjoint} ({family})"))?;
                artifact += &json(&d);
                if disjoint == 1 {
                    artifact += &svg(&d);
                }
                ctx.keep(&format!("criterion 4: pair #{disjoint} ({family})"), &d, &g, true);
            }
        } else {
            if sharing == 100 {
                continue;
            }
            sharing += 1;
            for family in [Family::UnitSquare, Family::Rect] {
                if decide_square_rect_svr(&p, family).is_some() {
                    return Err(format!(
                        "pair sharing edge {:?} wrongly accepted ({family})",
                        shared[0]
                    ));
                }
            }
            artifact += &json(&shared);
        }
    }
    ctx.artifacts.push((4, artifact));
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(30) {
        return Err(format!("took {elapsed:?}, budget is 30 seconds"));
    }
    Ok(())
}

// --- criterion 5: reduction forward directions -----------------------------

fn sample_nae() -> (NaeInstance, Assignment) {
    let f = NaeInstance::new(4, vec![[1, 2, 3], [4, 1, 2], [3, 4, 3]]).unwrap();
    let alpha = Assignment::new(vec![false, true, false, true]);
    (f, alpha)
}

fn sample_cnf() -> (Cnf3Instance, Assignment) {
    let f = Cnf3Instance::new(3, vec![[3, 1, 2], [-1, -2, 1], [2, 1, -3]]).unwrap();
    let alpha = Assignment::new(vec![true, false, true]);
    (f, alpha)
}

fn criterion_5(ctx: &mut Ctx) -> Result<(), String> {
    let mut artifact = String::new();

    let (f, alpha) = sample_nae();
    let (pair, idx) = build_ussvr_instance(&f);
    let d = build_ussvr_drawing(&f, &alpha).map_err(|e| format!("ussvr build: {e}"))?;
    validated(&d, &pair, "ussvr drawing")?;
    let decoded = decode_ussvr_assignment(&d, &idx).map_err(|e| format!("ussvr decode: {e}"))?;
    if let Some(i) = f.violated_clause(&decoded) {
        return Err(format!("decoded USSVR assignment violates NAE clause {i}"));
    }
    ctx.keep("criterion 5: ussvr", &d, &pair, false);
    artifact += &json(&d);
    artifact += &svg(&d);

    let (f, alpha) = sample_cnf();
    let (pair, idx) = build_rsvr_instance(&f);
    let d = build_rsvr_drawing(&f, &alpha).map_err(|e| format!("rsvr build: {e}"))?;
    validated(&d, &pair, "rsvr drawing")?;
    let decoded = decode_rsvr_assignment(&d, &idx).map_err(|e| format!("rsvr decode: {e}"))?;
    if let Some(i) = f.violated_clause(&decoded) {
        return Err(format!("decoded RSVR assignment violates clause {i}"));
    }
    ctx.keep("criterion 5: rsvr", &d, &pair, false);
    artifact += &json(&d);
    artifact += &svg(&d);

    ctx.artifacts.push((5, artifact));
    Ok(())
}

// --- criterion 6: reduction equivalence at desk scale ----------------------

fn criterion_6(ctx: &mut Ctx) -> Result<(), String> {
    let start = Instant::now();
    for a in 1..=3usize {
        for b in 1..=3usize {
            for c in 1..=3usize {
                let n_vars = a.max(b).max(c);
                let f = NaeInstance::new(n_vars, vec![[a, b, c]]).unwrap();
                let sat = brute_force_nae(&f).map_err(|e| e.to_string())?.is_some();
                let (pair, _) = build_ussvr_instance(&f);
                let res = brute_force_svr(&pair, Family::UnitSquare, SearchBudget::default())
                    .map_err(|e| e.to_string())?;
                match (&res.outcome, sat) {
                    (SearchOutcome::Capped, _) => {
                        return Err(format!("clause ({a},{b},{c}): oracle capped (inconclusive)"))
                    }
                    (SearchOutcome::Found(d), true) => {
                        validated(d, &pair, &format!("clause ({a},{b},{c})"))?;
                        ctx.keep(&format!("criterion 6: clause ({a},{b},{c})"), d, &pair, false);
                    }
                    (SearchOutcome::Exhausted, false) => {}
                    (SearchOutcome::Found(_), false) => {
                        return Err(format!("clause ({a},{b},{c}): drawing exists but NAE-unsat"))
                    }
                    (SearchOutcome::Exhausted, true) => {
                        return Err(format!("clause ({a},{b},{c}): NAE-sat but no drawing found"))
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(1800) {
        return Err(format!("took {elapsed:?}, budget is 30 minutes"));
    }
    Ok(())
}

// --- criterion 7: RSVR round-trip on random satisfiable formulas -----------

fn criterion_7(ctx: &mut Ctx) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5652_2027);
    let mut done = 0u32;
    while done < 50 {
        let n_vars = rng.gen_range(1..=4usize);
        let n_clauses = rng.gen_range(1..=3usize);
        // Clauses never contain a variable and its negation (tautological
        // clauses are always satisfied and excluded without loss).
        let clauses: Vec<[i64; 3]> = (0..n_clauses)
            .map(|_| {
                loop {
                    let c = [0; 3].map(|_| {
                        let v = rng.gen_range(1..=n_vars) as i64;
                        if rng.gen() {
                            v
                        } else {
                            -v
                        }
                    });
                    if c.iter().all(|&lit| !c.contains(&-lit)) {
                        break c;
                    }
                }
            })
            .collect();
        let f = Cnf3Instance::new(n_vars, clauses).unwrap();
        let alpha = match brute_force_sat(&f).map_err(|e| e.to_string())? {
            Some(a) => a,
            None => continue, // only satisfiable instances count
        };
        done += 1;
        let (pair, idx) = build_rsvr_instance(&f);
        let d = build_rsvr_drawing(&f, &alpha)
            .map_err(|e| format!("instance #{done} {:?}: build failed: {e}", f.clauses))?;
        validated(&d, &pair, &format!("instance #{done}"))?;
        let decoded = decode_rsvr_assignment(&d, &idx)
            .map_err(|e| format!("instance #{done}: decode failed: {e}"))?;
        if let Some(i) = f.violated_clause(&decoded) {
            return Err(format!(
                "instance #{done} {:?}: decoded assignment violates clause {i}",
                f.clauses
            ));
        }
        ctx.keep(&format!("criterion 7: instance #{done}"), &d, &pair, false);
    }
    Ok(())
}

// --- criterion 8: structural diagnostics on every validated drawing --------

fn criterion_8(ctx: &Ctx) -> Result<(), String> {
    if ctx.produced.is_empty() {
        return Err("no validated drawings were collected".into());
    }
    for p in &ctx.produced {
        let sides = [
            (p.pair.vertical_graph(), Axis::Vertical),
            (p.pair.horizontal_graph(), Axis::Horizontal),
        ];
        for (g, axis) in &sides {
            for u in 1..=p.pair.n {
                if !g.is_cut_vertex(u) {
                    continue;
                }
                let count = check_nestedness(&p.drawing, g, u, *axis)
                    .map_err(|e| format!("{}: {e}", p.label))?;
                if count > 2 {
                    return Err(format!(
                        "{}: nestedness {count} > 2 at cut vertex {u} ({axis:?})",
                        p.label
                    ));
                }
            }
            if !check_no_twist(&p.drawing, g, *axis) {
                return Err(format!("{}: twisted component hulls ({axis:?})", p.label));
            }
        }
        if p.path_instance {
            if let Some(w) = cycle_premise_witness(&p.drawing) {
                return Err(format!("{}: cycle-premise witness {w:?}", p.label));
            }
        }
    }
    Ok(())
}

// --- criterion 9: determinism of criteria 1, 4, 5 ---------------------------

fn criterion_9(first: &Ctx) -> Result<(), String> {
    let mut second = Ctx::new();
    criterion_1(&mut second)?;
    criterion_4(&mut second)?;
    criterion_5(&mut second)?;
    for (id, artifact) in &second.artifacts {
        let original = first
            .artifacts
            .iter()
            .find(|(i, _)| i == id)
            .map(|(_, a)| a)
            .ok_or_else(|| format!("criterion {id} left no artifact"))?;
        if original != artifact {
            return Err(format!("criterion {id} output is not byte-identical on re-run"));
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let mut ctx = Ctx::new();
    let mut results: Vec<(u32, Result<(), String>)> = Vec::new();

    results.push((1, criterion_1(&mut ctx)));
    results.push((2, criterion_2(&mut ctx)));
    results.push((3, criterion_3()));
    results.push((4, criterion_4(&mut ctx)));
    results.push((5, criterion_5(&mut ctx)));
    results.push((6, criterion_6(&mut ctx)));
    results.push((7, criterion_7(&mut ctx)));
    results.push((8, criterion_8(&ctx)));
    results.push((9, criterion_9(&ctx)));

    let mut failed = false;
    for (id, r) in &results {
        match r {
            Ok(()) => println!("criterion {id}: pass"),
            Err(msg) => {
                failed = true;
                println!("criterion {id}: FAIL — {msg}");
            }
        }
    }
    assert!(!failed, "one or more acceptance criteria failed");
}
