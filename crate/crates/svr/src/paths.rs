//! Constructive algorithms for pairs of paths on a shared vertex set:
//! Algorithm A for squares and rectangles, the monotone-prefix structures
//! S_π and W_π, the stretchability condition over the four orientation
//! variants, and the LsvrPaths construction for L-shapes.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coord::Coord;
use crate::graph::{edge, positions_of, Edge, PathPair};
use crate::shape::{shapes_disjoint, Drawing, Family, Shape};

/// The monotone prefixes of Definition 4.1 style: `S_π = (1, ..., a)` is the
/// longest initial run of vertex values appearing monotonically within π,
/// and `W_π = (π_1, ..., π_c)` is the longest value-monotone prefix of π.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MonotoneProfile {
    /// Length of S_π.
    pub a: usize,
    /// Whether (1..a) appears in increasing position order within π.
    pub s_increasing: bool,
    /// Length of W_π.
    pub c: usize,
    /// Whether π_1 > π_2 > ... > π_c.
    pub w_decreasing: bool,
}

pub fn monotone_profile(pi: &[usize]) -> MonotoneProfile {
    let n = pi.len();
    let pos = positions_of(pi);
    let mut a = n.min(1);
    let mut s_increasing = true;
    if n >= 2 {
        s_increasing = pos[1] < pos[2];
        a = 2;
        while a < n {
            let extend = if s_increasing {
                pos[a] < pos[a + 1]
            } else {
                pos[a] > pos[a + 1]
            };
            if !extend {
                break;
            }
            a += 1;
        }
    }
    let mut c = n.min(1);
    let mut w_decreasing = false;
    if n >= 2 {
        w_decreasing = pi[0] > pi[1];
        c = 2;
        while c < n {
            let extend = if w_decreasing {
                pi[c - 1] > pi[c]
            } else {
                pi[c - 1] < pi[c]
            };
            if !extend {
                break;
            }
            c += 1;
        }
    }
    MonotoneProfile {
        a,
        s_increasing,
        c,
        w_decreasing,
    }
}

/// Result of the stretchability condition: for every ordered adjacency
/// `(i+1, i)` in π (value `i+1` immediately before `i`), require `i ∈ W_π`
/// or `i+1 ∈ S_π`. Violating indices `i` are listed.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ConditionReport {
    pub holds: bool,
    pub violations: Vec<usize>,
}

pub fn check_condition(pi: &[usize]) -> ConditionReport {
    let prof = monotone_profile(pi);
    let pos = positions_of(pi);
    let mut violations = Vec::new();
    for w in pi.windows(2) {
        if w[0] == w[1] + 1 {
            let i = w[1];
            let in_w = pos[i] <= prof.c;
            let in_s = i + 1 <= prof.a;
            if !(in_w || in_s) {
                violations.push(i);
            }
        }
    }
    violations.sort_unstable();
    ConditionReport {
        holds: violations.is_empty(),
        violations,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Orientation {
    SW,
    SE,
    NW,
    NE,
}

impl Orientation {
    pub const ALL: [Orientation; 4] = [
        Orientation::SW,
        Orientation::SE,
        Orientation::NW,
        Orientation::NE,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::SW => "SW",
            Orientation::SE => "SE",
            Orientation::NW => "NW",
            Orientation::NE => "NE",
        }
    }
}

impl std::fmt::Display for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One of the four relabelings arising from reversing the reference
/// endpoints of the two paths. Reversing P_H complements vertex values
/// (`i ↦ n+1−i`, followed by renumbering so P_H is again (1..n)); reversing
/// P_V reverses the sequence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientationVariant {
    pub tag: Orientation,
    /// The variant's permutation (its P_v after renumbering).
    pub pi: Vec<usize>,
    /// `relabel[v]` is the original vertex named `v` in the variant;
    /// index 0 unused. An involution.
    pub relabel: Vec<usize>,
}

pub fn orientation_variants(p: &PathPair) -> [OrientationVariant; 4] {
    let n = p.n;
    let identity: Vec<usize> = (0..=n).collect();
    let complement: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { n + 1 - v }).collect();
    let comp_pi: Vec<usize> = p.pi.iter().map(|&v| n + 1 - v).collect();
    let rev_pi: Vec<usize> = p.pi.iter().rev().copied().collect();
    let rev_comp_pi: Vec<usize> = comp_pi.iter().rev().copied().collect();
    [
        OrientationVariant {
            tag: Orientation::SW,
            pi: p.pi.clone(),
            relabel: identity.clone(),
        },
        OrientationVariant {
            tag: Orientation::SE,
            pi: comp_pi,
            relabel: complement.clone(),
        },
        OrientationVariant {
            tag: Orientation::NW,
            pi: rev_pi,
            relabel: identity,
        },
        OrientationVariant {
            tag: Orientation::NE,
            pi: rev_comp_pi,
            relabel: complement,
        },
    ]
}

/// Algorithm A: the shape of vertex `v` has its bottom-left corner at
/// `(posV(v), posH(v))` with side (bar) lengths `1+ε`.
pub fn algorithm_a(p: &PathPair, family: Family) -> Drawing {
    algorithm_a_of_pi(&p.pi, family)
}

fn algorithm_a_of_pi(pi: &[usize], family: Family) -> Drawing {
    let pos = positions_of(pi);
    let shapes = (1..=pi.len())
        .map(|v| {
            let corner_x = Coord::int(pos[v] as i64);
            let corner_y = Coord::int(v as i64);
            match family {
                Family::UnitSquare => Shape::unit_square(corner_x, corner_y, Coord::ONE_PLUS_EPS),
                Family::Rect => Shape::Rect {
                    l: corner_x,
                    r: corner_x + Coord::ONE_PLUS_EPS,
                    b: corner_y,
                    t: corner_y + Coord::ONE_PLUS_EPS,
                },
                Family::LShape => Shape::lshape(
                    corner_x,
                    corner_y,
                    Coord::ONE_PLUS_EPS,
                    Coord::ONE_PLUS_EPS,
                ),
            }
        })
        .collect();
    Drawing::new(family, shapes)
}

/// Decision procedure for unit squares and rectangles: a drawing exists iff
/// the two paths share no edge, and then Algorithm A produces one.
pub fn decide_square_rect_svr(p: &PathPair, family: Family) -> Option<Drawing> {
    if p.shared_edges().is_empty() {
        Some(algorithm_a(p, family))
    } else {
        None
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LsvrError {
    #[error("stretchability condition fails at indices {0:?}")]
    ConditionViolated(Vec<usize>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LsvrOutcome {
    pub drawing: Drawing,
    /// Vertices stretched west in Step 2 (the W_π members, in π order).
    pub stretched_left: Vec<usize>,
    /// Vertices stretched south in Step 3 (S_π ∖ W_π, in value order).
    pub stretched_down: Vec<usize>,
}

/// Ordered adjacencies `(i+1, i)` of π as undirected pairs. In the Step-1
/// drawing these are exactly the crossing shape pairs.
fn descending_consecutive_pairs(pi: &[usize]) -> BTreeSet<Edge> {
    pi.windows(2)
        .filter(|w| w[0] == w[1] + 1)
        .map(|w| edge(w[0], w[1]))
        .collect()
}

fn crossing_pairs(d: &Drawing) -> BTreeSet<Edge> {
    let mut out = BTreeSet::new();
    for u in 1..=d.n() {
        for v in (u + 1)..=d.n() {
            if !shapes_disjoint(d.shape(u), d.shape(v)) {
                out.insert((u, v));
            }
        }
    }
    out
}

/// LsvrPaths. Step 1 builds the SW L-shape drawing via Algorithm A. Step 2
/// stretches `Γ(π_i)` west to `l(π_i) = 2−i` for `π_i ∈ W_π` when W_π is
/// decreasing and its shapes cross. Step 3 stretches `Γ(i)` south to
/// `b(i) = 2−i` for `i ∈ S_π ∖ W_π` when S_π is decreasing in π and its
/// shapes cross. Output lies in `[2−n, n+1+ε]²`.
pub fn lsvr_paths(pi: &[usize]) -> Result<LsvrOutcome, LsvrError> {
    let report = check_condition(pi);
    if !report.holds {
        return Err(LsvrError::ConditionViolated(report.violations));
    }
    let n = pi.len();
    let prof = monotone_profile(pi);
    let pos = positions_of(pi);
    let step1 = algorithm_a_of_pi(pi, Family::LShape);

    let crossings = descending_consecutive_pairs(pi);
    debug_assert_eq!(crossings, crossing_pairs(&step1));

    let w_set: BTreeSet<usize> = pi[..prof.c.min(n)].iter().copied().collect();
    let mut shapes = step1.shapes;

    let mut stretched_left = Vec::new();
    let w_crossings = crossings
        .iter()
        .any(|&(u, v)| w_set.contains(&u) && w_set.contains(&v));
    if prof.w_decreasing && w_crossings {
        for i in 1..=prof.c {
            let v = pi[i - 1];
            let new_l = Coord::int(2 - i as i64);
            let right = Coord::int(i as i64) + Coord::ONE_PLUS_EPS;
            shapes[v - 1] = Shape::lshape(
                new_l,
                Coord::int(v as i64),
                right - new_l,
                Coord::ONE_PLUS_EPS,
            );
            stretched_left.push(v);
        }
    }

    let mut stretched_down = Vec::new();
    let s_crossings = crossings.iter().any(|&(u, v)| u <= prof.a && v <= prof.a);
    if prof.a >= 2 && !prof.s_increasing && s_crossings {
        for i in 1..=prof.a {
            if w_set.contains(&i) {
                continue;
            }
            let new_b = Coord::int(2 - i as i64);
            let top = Coord::int(i as i64) + Coord::ONE_PLUS_EPS;
            shapes[i - 1] = Shape::lshape(
                Coord::int(pos[i] as i64),
                new_b,
                Coord::ONE_PLUS_EPS,
                top - new_b,
            );
            stretched_down.push(i);
        }
    }

    Ok(LsvrOutcome {
        drawing: Drawing::new(Family::LShape, shapes),
        stretched_left,
        stretched_down,
    })
}

/// Outcome of the LSVR decision over the four orientation variants, tried in
/// the fixed order SW, SE, NW, NE. `violations` records the condition's
/// violating indices per variant (in the variant's own numbering).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DecideOutcome {
    pub exists: bool,
    /// Tag of the first admitting variant, or "none".
    pub orientation: String,
    pub violations: BTreeMap<String, Vec<usize>>,
    pub drawing: Option<Drawing>,
    #[serde(skip)]
    pub stretched_left: Vec<usize>,
    #[serde(skip)]
    pub stretched_down: Vec<usize>,
}

pub fn decide_lsvr(p: &PathPair) -> DecideOutcome {
    let variants = orientation_variants(p);
    let mut violations = BTreeMap::new();
    for var in &variants {
        violations.insert(var.tag.to_string(), check_condition(&var.pi).violations);
    }
    for var in &variants {
        if let Ok(out) = lsvr_paths(&var.pi) {
            let n = p.n;
            let mut shapes = vec![Shape::rect(0, 1, 0, 1); n];
            for v in 1..=n {
                shapes[var.relabel[v] - 1] = *out.drawing.shape(v);
            }
            return DecideOutcome {
                exists: true,
                orientation: var.tag.to_string(),
                violations,
                drawing: Some(Drawing::new(Family::LShape, shapes)),
                stretched_left: out.stretched_left.iter().map(|&v| var.relabel[v]).collect(),
                stretched_down: out.stretched_down.iter().map(|&v| var.relabel[v]).collect(),
            };
        }
    }
    DecideOutcome {
        exists: false,
        orientation: "none".to_string(),
        violations,
        drawing: None,
        stretched_left: Vec::new(),
        stretched_down: Vec::new(),
    }
}
