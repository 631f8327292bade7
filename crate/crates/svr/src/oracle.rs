//! Independent brute-force ground truth: exhaustive boolean satisfiability
//! at small variable counts and exhaustive geometric search for SVRs on
//! canonical coordinate lattices at small n.
//!
//! The geometric lattices are complete for their families at the supported
//! sizes: rectangles and L-shapes may assume all 2n endpoint values per axis
//! are distinct integers in 1..2n (noncollinear canonical form), and unit
//! squares may assume corners on the 1/(n+1)-step grid over [0, n+1],
//! realized integrally by scaling everything by n+1.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coord::Coord;
use crate::graph::{Edge, GraphPair, PathPair};
use crate::paths::decide_lsvr;
use crate::sat::{Assignment, Cnf3Instance, NaeInstance};
use crate::shape::{shapes_disjoint, Drawing, Family, Shape};
use crate::visibility::validate_svr;

pub const MAX_ORACLE_VARS: usize = 24;
pub const MAX_ORACLE_N: usize = 5;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{got} variables exceed the exhaustive cap of {cap}")]
    TooManyVars { got: usize, cap: usize },
    #[error("n = {got} exceeds the exhaustive search cap of {cap}")]
    TooLarge { got: usize, cap: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 2_000_000_000,
            time_limit: Duration::from_secs(1800),
        }
    }
}

/// Exhausted means the whole canonical lattice was searched without finding
/// a drawing; Capped means the budget ran out first and is inconclusive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SearchOutcome {
    Found(Drawing),
    Exhausted,
    Capped,
}

impl SearchOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "found",
            SearchOutcome::Exhausted => "exhausted",
            SearchOutcome::Capped => "capped",
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct SearchResult {
    pub outcome: SearchOutcome,
    pub nodes: u64,
    pub seconds: f64,
}

/// First NAE-satisfying assignment in lexicographic order (false < true,
/// variable 1 most significant), or none.
pub fn brute_force_nae(f: &NaeInstance) -> Result<Option<Assignment>, OracleError> {
    exhaustive_assignments(f.n_vars, |alpha| f.violated_clause(alpha).is_none())
}

/// First satisfying assignment in the same order, or none.
pub fn brute_force_sat(f: &Cnf3Instance) -> Result<Option<Assignment>, OracleError> {
    exhaustive_assignments(f.n_vars, |alpha| f.violated_clause(alpha).is_none())
}

fn exhaustive_assignments(
    n_vars: usize,
    ok: impl Fn(&Assignment) -> bool,
) -> Result<Option<Assignment>, OracleError> {
    if n_vars > MAX_ORACLE_VARS {
        return Err(OracleError::TooManyVars {
            got: n_vars,
            cap: MAX_ORACLE_VARS,
        });
    }
    for k in 0u64..(1u64 << n_vars) {
        let alpha = Assignment::new(
            (1..=n_vars)
                .map(|v| (k >> (n_vars - v)) & 1 == 1)
                .collect(),
        );
        if ok(&alpha) {
            return Ok(Some(alpha));
        }
    }
    Ok(None)
}

struct Searcher<'a> {
    g: &'a GraphPair,
    family: Family,
    order: Vec<usize>,
    required_v: Vec<Edge>,
    required_h: Vec<Edge>,
    shapes: Vec<Option<Shape>>,
    budget: SearchBudget,
    start: Instant,
    nodes: u64,
    capped: bool,
}

impl<'a> Searcher<'a> {
    fn new(g: &'a GraphPair, family: Family, budget: SearchBudget) -> Self {
        let mut order: Vec<usize> = (1..=g.n).collect();
        let degree = |v: usize| {
            g.ev.iter().filter(|&&(a, b)| a == v || b == v).count()
                + g.eh.iter().filter(|&&(a, b)| a == v || b == v).count()
        };
        order.sort_by_key(|&v| (std::cmp::Reverse(degree(v)), v));
        Searcher {
            g,
            family,
            order,
            required_v: g.ev.iter().copied().collect(),
            required_h: g.eh.iter().copied().collect(),
            shapes: vec![None; g.n],
            budget,
            start: Instant::now(),
            nodes: 0,
            capped: false,
        }
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            self.capped = true;
        } else if self.nodes & 0xfff == 0 && self.start.elapsed() > self.budget.time_limit {
            self.capped = true;
        }
        !self.capped
    }

    /// Visibility between placed vertices `a` and `b` in the partial drawing.
    /// Adding shapes can only block lines-of-sight, so a required edge that
    /// is already invisible among the placed shapes can never recover; this
    /// makes partial invisibility a sound pruning criterion.
    fn pair_visible(&self, a: usize, b: usize, vertical: bool) -> bool {
        // Same scheme as the engine: endpoints plus midpoints, realized
        // exactly by stabbing the doubled shapes.
        let placed: Vec<(usize, Shape)> = self
            .shapes
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.map(|s| (i + 1, s)))
            .collect();
        let proj = |s: &Shape| {
            if vertical {
                s.x_projection()
            } else {
                s.y_projection()
            }
        };
        let slice = |s: &Shape, at: Coord| {
            if vertical {
                s.x_slice(at)
            } else {
                s.y_slice(at)
            }
        };
        let mut ends: Vec<Coord> = placed
            .iter()
            .flat_map(|(_, s)| {
                let p = proj(s);
                [p.lo, p.hi]
            })
            .collect();
        ends.sort_unstable();
        ends.dedup();
        let mut samples: Vec<Coord> = Vec::with_capacity(2 * ends.len());
        for (i, &e) in ends.iter().enumerate() {
            samples.push(e.doubled());
            if i + 1 < ends.len() {
                samples.push(e + ends[i + 1]);
            }
        }
        let doubled: Vec<(usize, Shape)> = placed.iter().map(|&(v, s)| (v, s.scaled(2))).collect();
        let mut stabs: Vec<(usize, crate::coord::Interval)> = Vec::with_capacity(placed.len());
        for &at in &samples {
            stabs.clear();
            for (v, s) in &doubled {
                if let Some(iv) = slice(s, at) {
                    stabs.push((*v, iv));
                }
            }
            stabs.sort_by_key(|&(_, iv)| iv.lo);
            for w in stabs.windows(2) {
                let (u1, u2) = (w[0].0, w[1].0);
                if (u1 == a && u2 == b) || (u1 == b && u2 == a) {
                    return true;
                }
            }
        }
        false
    }

    fn partial_ok(&self, v: usize) -> bool {
        let sv = self.shapes[v - 1].expect("vertex just placed");
        for (i, s) in self.shapes.iter().enumerate() {
            if let Some(s) = s {
                if i + 1 != v && !shapes_disjoint(&sv, s) {
                    return false;
                }
            }
        }
        let placed = |u: usize| self.shapes[u - 1].is_some();
        for &(a, b) in &self.required_v {
            if placed(a) && placed(b) && !self.pair_visible(a, b, true) {
                return false;
            }
        }
        for &(a, b) in &self.required_h {
            if placed(a) && placed(b) && !self.pair_visible(a, b, false) {
                return false;
            }
        }
        true
    }

    fn full_valid(&self) -> Option<Drawing> {
        let shapes: Vec<Shape> = self.shapes.iter().map(|s| s.unwrap()).collect();
        let d = Drawing::new(self.family, shapes);
        let report = validate_svr(&d, self.g).ok()?;
        report.valid.then_some(d)
    }

    fn search_unit_squares(&mut self, k: usize) -> Option<Drawing> {
        if k == self.order.len() {
            return self.full_valid();
        }
        let n = self.g.n as i64;
        let m = n * (n + 1);
        let side = n + 1;
        // Reflections of a valid drawing are valid, so the first-placed
        // vertex can be confined to the lower-left quadrant of corners.
        let (cx_max, cy_max) = if k == 0 { (m / 2, m / 2) } else { (m, m) };
        let v = self.order[k];
        for cx in 0..=cx_max {
            for cy in 0..=cy_max {
                if !self.tick() {
                    return None;
                }
                self.shapes[v - 1] = Some(Shape::unit_square(
                    Coord::int(cx),
                    Coord::int(cy),
                    Coord::int(side),
                ));
                if self.partial_ok(v) {
                    if let Some(d) = self.search_unit_squares(k + 1) {
                        return Some(d);
                    }
                    if self.capped {
                        return None;
                    }
                } else if self.capped {
                    return None;
                }
            }
        }
        self.shapes[v - 1] = None;
        None
    }

    /// Rectangles and L-shapes: each vertex consumes one ordered pair of
    /// still-free endpoint values per axis, out of 1..=2n.
    fn search_endpoint_pairs(&mut self, k: usize, x_free: u32, y_free: u32) -> Option<Drawing> {
        if k == self.order.len() {
            return self.full_valid();
        }
        let two_n = (2 * self.g.n) as i64;
        let v = self.order[k];
        let pairs = |free: u32| -> Vec<(i64, i64)> {
            let vals: Vec<i64> = (1..=two_n).filter(|&t| free & (1 << t) != 0).collect();
            let mut out = Vec::new();
            for i in 0..vals.len() {
                for j in (i + 1)..vals.len() {
                    out.push((vals[i], vals[j]));
                }
            }
            out
        };
        let xs = pairs(x_free);
        let ys = pairs(y_free);
        for &(xa, xb) in &xs {
            // Mirror quotient for the reflection-symmetric families: the
            // first vertex's x-pair must not exceed its mirror image.
            if k == 0
                && self.family != Family::LShape
                && (xa, xb) > (two_n + 1 - xb, two_n + 1 - xa)
            {
                continue;
            }
            for &(ya, yb) in &ys {
                if k == 0
                    && self.family != Family::LShape
                    && (ya, yb) > (two_n + 1 - yb, two_n + 1 - ya)
                {
                    continue;
                }
                if !self.tick() {
                    return None;
                }
                let shape = match self.family {
                    Family::LShape => Shape::lshape(
                        Coord::int(xa),
                        Coord::int(ya),
                        Coord::int(xb - xa),
                        Coord::int(yb - ya),
                    ),
                    _ => Shape::Rect {
                        l: Coord::int(xa),
                        r: Coord::int(xb),
                        b: Coord::int(ya),
                        t: Coord::int(yb),
                    },
                };
                self.shapes[v - 1] = Some(shape);
                if self.partial_ok(v) {
                    let nx = x_free & !(1 << xa) & !(1 << xb);
                    let ny = y_free & !(1 << ya) & !(1 << yb);
                    if let Some(d) = self.search_endpoint_pairs(k + 1, nx, ny) {
                        return Some(d);
                    }
                }
                if self.capped {
                    return None;
                }
            }
        }
        self.shapes[v - 1] = None;
        None
    }
}

/// Exhaustive backtracking search for an SVR of `g` over the family's
/// canonical lattice. A returned drawing always passes `validate_svr`; a
/// capped result is inconclusive and never reported as nonexistence.
pub fn brute_force_svr(
    g: &GraphPair,
    family: Family,
    budget: SearchBudget,
) -> Result<SearchResult, OracleError> {
    if g.n > MAX_ORACLE_N {
        return Err(OracleError::TooLarge {
            got: g.n,
            cap: MAX_ORACLE_N,
        });
    }
    let mut s = Searcher::new(g, family, budget);
    let found = if g.n == 0 {
        Some(Drawing::new(family, Vec::new()))
    } else {
        match family {
            Family::UnitSquare => s.search_unit_squares(0),
            Family::Rect | Family::LShape => {
                let all: u32 = ((1u64 << (2 * g.n + 1)) - 2) as u32;
                s.search_endpoint_pairs(0, all, all)
            }
        }
    };
    let outcome = match (found, s.capped) {
        (Some(d), _) => SearchOutcome::Found(d),
        (None, true) => SearchOutcome::Capped,
        (None, false) => SearchOutcome::Exhausted,
    };
    Ok(SearchResult {
        outcome,
        nodes: s.nodes,
        seconds: s.start.elapsed().as_secs_f64(),
    })
}

/// All permutations of 1..=n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (1..=n)
                    .filter(|v| !p.contains(v))
                    .map(|v| {
                        let mut q = p.clone();
                        q.push(v);
                        q
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

/// One completeness cross-check cell.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct CheckCell {
    pub pi: Vec<usize>,
    pub decision: String,
    pub oracle: String,
    pub status: String,
    pub nodes: u64,
    pub seconds: f64,
}

#[derive(Clone, PartialEq, Debug, Default, Serialize, Deserialize)]
pub struct LsvrCheckReport {
    pub n_max: usize,
    pub total: u64,
    pub accepted: u64,
    pub rejected: u64,
    /// Rejected-permutation counts indexed by n.
    pub rejected_per_n: Vec<u64>,
    pub soundness_failures: Vec<String>,
    pub disagreements: Vec<String>,
    pub capped: u64,
    /// Oracle cross-check cells (only for n small enough to exhaust).
    pub cells: Vec<CheckCell>,
}

impl LsvrCheckReport {
    pub fn agreed(&self) -> bool {
        self.soundness_failures.is_empty() && self.disagreements.is_empty() && self.capped == 0
    }
}

/// Validates the LSVR decision procedure against ground truth: for every
/// permutation with n ≤ n_max, an accepted instance's drawing must validate
/// within the `[2−n, n+1]` base-coordinate grid, and for n ≤ 4 the brute
/// force search must agree exactly with the decision.
pub fn exhaustive_lsvr_check(n_max: usize, budget: SearchBudget) -> LsvrCheckReport {
    let mut report = LsvrCheckReport {
        n_max,
        rejected_per_n: vec![0; n_max + 1],
        ..Default::default()
    };
    for n in 1..=n_max {
        for pi in permutations(n) {
            report.total += 1;
            let p = PathPair::from_permutation(pi.clone());
            let out = decide_lsvr(&p);
            if out.exists {
                report.accepted += 1;
                let d = out.drawing.as_ref().expect("accepted without drawing");
                let valid = validate_svr(d, &p.to_graph_pair())
                    .map(|r| r.valid)
                    .unwrap_or(false);
                let lo = 2 - n as i64;
                let hi = n as i64 + 1;
                let in_grid = d.shapes.iter().all(|s| {
                    let x = s.x_projection();
                    let y = s.y_projection();
                    [x.lo, x.hi, y.lo, y.hi]
                        .iter()
                        .all(|c| lo <= c.base && c.base <= hi)
                });
                if !valid || !in_grid {
                    report
                        .soundness_failures
                        .push(format!("pi={pi:?} valid={valid} in_grid={in_grid}"));
                }
            } else {
                report.rejected += 1;
                report.rejected_per_n[n] += 1;
            }
            if n <= 4 {
                let res = brute_force_svr(&p.to_graph_pair(), Family::LShape, budget)
                    .expect("n <= 4 is within the oracle cap");
                let oracle = res.outcome.label().to_string();
                let status = match (&res.outcome, out.exists) {
                    (SearchOutcome::Found(_), true) | (SearchOutcome::Exhausted, false) => "agree",
                    (SearchOutcome::Capped, _) => "capped",
                    _ => "disagree",
                };
                if status == "capped" {
                    report.capped += 1;
                } else if status == "disagree" {
                    report.disagreements.push(format!(
                        "pi={pi:?} decision={} oracle={}",
                        out.exists, oracle
                    ));
                }
                report.cells.push(CheckCell {
                    pi,
                    decision: if out.exists { "exists" } else { "none" }.to_string(),
                    oracle,
                    status: status.to_string(),
                    nodes: res.nodes,
                    seconds: res.seconds,
                });
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sat::build_ussvr_instance;

    #[test]
    fn nae_brute_force() {
        let unsat = NaeInstance::new(1, vec![[1, 1, 1]]).unwrap();
        assert_eq!(brute_force_nae(&unsat).unwrap(), None);

        let f = NaeInstance::new(3, vec![[1, 2, 3]]).unwrap();
        let alpha = brute_force_nae(&f).unwrap().unwrap();
        assert!(f.violated_clause(&alpha).is_none());
        // First in lexicographic order with v1 most significant, F < T.
        assert_eq!(alpha, Assignment::new(vec![false, false, true]));
        // The documented assignment T,F,F is NAE-satisfying as well.
        assert!(f
            .violated_clause(&Assignment::new(vec![true, false, false]))
            .is_none());

        let f = NaeInstance::new(4, vec![[1, 2, 3], [4, 1, 2], [3, 4, 3]]).unwrap();
        assert!(brute_force_nae(&f).unwrap().is_some());
        let doc = Assignment::new(vec![false, true, false, true]);
        assert!(f.violated_clause(&doc).is_none());
    }

    #[test]
    fn sat_brute_force() {
        let f = Cnf3Instance::new(1, vec![[1, 1, 1], [-1, -1, -1]]).unwrap();
        assert_eq!(brute_force_sat(&f).unwrap(), None);
        let f = Cnf3Instance::new(2, vec![[-1, -1, 2]]).unwrap();
        let alpha = brute_force_sat(&f).unwrap().unwrap();
        assert_eq!(alpha, Assignment::new(vec![false, false]));
    }

    #[test]
    fn var_cap_enforced() {
        let f = NaeInstance::new(25, vec![]).unwrap();
        assert!(matches!(
            brute_force_nae(&f),
            Err(OracleError::TooManyVars { .. })
        ));
    }

    #[test]
    fn svr_trivial_and_small() {
        for family in [Family::UnitSquare, Family::Rect, Family::LShape] {
            let g = GraphPair::new(1, [], []).unwrap();
            let res = brute_force_svr(&g, family, SearchBudget::default()).unwrap();
            assert!(matches!(res.outcome, SearchOutcome::Found(_)), "{family}");
        }
    }

    #[test]
    fn svr_shared_edge_unit_squares_exhausts() {
        // Both graphs are the single edge {1,2}: squares would have to
        // overlap in both projections, which is impossible.
        let g = GraphPair::new(2, [(1, 2)], [(1, 2)]).unwrap();
        let res = brute_force_svr(&g, Family::UnitSquare, SearchBudget::default()).unwrap();
        assert_eq!(res.outcome, SearchOutcome::Exhausted);
    }

    #[test]
    fn svr_finds_small_unit_square_drawing() {
        let g = GraphPair::new(2, [(1, 2)], []).unwrap();
        let res = brute_force_svr(&g, Family::UnitSquare, SearchBudget::default()).unwrap();
        assert!(matches!(res.outcome, SearchOutcome::Found(_)));
    }

    #[test]
    fn svr_finds_lshape_for_shared_edge_paths() {
        // π=(2,1): both paths are the edge {1,2}; L-shapes manage where
        // squares cannot.
        let p = PathPair::from_permutation(vec![2, 1]);
        let res =
            brute_force_svr(&p.to_graph_pair(), Family::LShape, SearchBudget::default()).unwrap();
        match res.outcome {
            SearchOutcome::Found(d) => {
                assert!(validate_svr(&d, &p.to_graph_pair()).unwrap().valid)
            }
            other => panic!("expected a drawing, got {}", other.label()),
        }
    }

    #[test]
    fn capped_is_reported() {
        let g = GraphPair::new(4, [(1, 2), (2, 3), (3, 4)], [(1, 3)]).unwrap();
        let res = brute_force_svr(
            &g,
            Family::Rect,
            SearchBudget {
                max_nodes: 10,
                time_limit: Duration::from_secs(60),
            },
        )
        .unwrap();
        assert_eq!(res.outcome, SearchOutcome::Capped);
    }

    #[test]
    fn size_cap_enforced() {
        let g = GraphPair::new(6, [], []).unwrap();
        assert!(matches!(
            brute_force_svr(&g, Family::Rect, SearchBudget::default()),
            Err(OracleError::TooLarge { .. })
        ));
    }

    #[test]
    fn found_ussvr_decodes() {
        use crate::sat::decode_ussvr_assignment;
        let f = NaeInstance::new(3, vec![[1, 2, 3]]).unwrap();
        let (pair, idx) = build_ussvr_instance(&f);
        let res = brute_force_svr(&pair, Family::UnitSquare, SearchBudget::default()).unwrap();
        match res.outcome {
            SearchOutcome::Found(d) => {
                let alpha = decode_ussvr_assignment(&d, &idx).unwrap();
                assert!(f.violated_clause(&alpha).is_none());
            }
            other => panic!("expected a drawing, got {}", other.label()),
        }
    }

    #[test]
    fn exhaustive_check_n3() {
        let report = exhaustive_lsvr_check(3, SearchBudget::default());
        assert_eq!(report.total, 1 + 2 + 6);
        assert!(report.agreed(), "{report:?}");
    }

    #[test]
    fn permutations_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(1), vec![vec![1]]);
    }
}
